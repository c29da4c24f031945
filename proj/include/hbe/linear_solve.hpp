#ifndef HBE_LINEAR_SOLVE_HPP
#define HBE_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "hbe/rational.hpp"

namespace hbe {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b exactly. Rows are scaled to integers and
/// reduced with Bareiss fraction-free elimination; returns nullopt when A is
/// singular.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix &a,
                                                 const std::vector<Rational> &b);

} // namespace hbe

#endif // HBE_LINEAR_SOLVE_HPP
