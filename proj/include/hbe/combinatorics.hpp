#ifndef HBE_COMBINATORICS_HPP
#define HBE_COMBINATORICS_HPP

#include <cstdint>

#include "hbe/exact_param.hpp"
#include "hbe/rational.hpp"
#include "hbe/sym_value.hpp"

namespace hbe {

/// n!/(k!(n-k)!) for n >= k, and 0 for n < k.
Rational binom_nat(std::int64_t n, std::int64_t k);

/// C(m+k, k) = prod_{j=1..k} (m+j)/j for rational m. Zero factors are allowed.
Rational binom_gen(const Rational &m, std::int64_t k);

/// C(r, k) = prod_{j=1..k} (r-k+j)/j for rational r (upper index anywhere).
Rational binom_upper(const Rational &r, std::int64_t k);

/// C(2n, n)/(n+1).
Rational catalan(std::int64_t n);

/// H_n = sum 1/k
Rational harmonic(std::int64_t n);
/// O_n = sum 1/(2k-1)
Rational odd_harmonic(std::int64_t n);
/// H_n^(2) = sum 1/k^2
Rational harmonic2(std::int64_t n);
/// O_n^(2) = sum 1/(2k-1)^2
Rational odd_harmonic2(std::int64_t n);

/// H_m at an exact parameter. Integers give a rational value; at
/// m = n + 1/2 the value is 2*O_{n+1} - 2*ln2.
SymValue harmonic_exact(const ExactParam &m);

/// H_m^(2) at an exact parameter. At m = n + 1/2 the value is
/// 4*O_{n+1}^(2) - pi^2/3, which follows from the trigamma series; numeric
/// agreement is checked by half_integer_order2_gate().
SymValue harmonic2_exact(const ExactParam &m);

} // namespace hbe

#endif // HBE_COMBINATORICS_HPP
