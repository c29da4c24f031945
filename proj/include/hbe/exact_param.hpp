#ifndef HBE_EXACT_PARAM_HPP
#define HBE_EXACT_PARAM_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "hbe/rational.hpp"

namespace hbe {

/// The parameter m at an exactly representable point: a nonnegative integer
/// or a half-integer >= -1/2. Stored as 2m.
class ExactParam {
public:
  /// Throws DomainError unless twice_m >= -1 and (twice_m even => >= 0).
  static ExactParam from_twice(std::int64_t twice_m);
  static ExactParam integer(std::int64_t m) { return from_twice(2 * m); }
  /// Accepts "p/2", "p/q" reducing to an admissible point, or a plain integer.
  static ExactParam parse(std::string_view text);

  std::int64_t twice() const { return twice_m_; }
  bool is_integer() const { return twice_m_ % 2 == 0; }
  bool is_half_integer() const { return !is_integer(); }
  /// floor(m); for m = n + 1/2 this is n (which is -1 at m = -1/2).
  std::int64_t floor() const;
  Rational value() const { return Rational(twice_m_, 2); }
  double to_double() const { return static_cast<double>(twice_m_) / 2.0; }

  /// m + k for an integer shift k >= 0.
  ExactParam shifted(std::int64_t k) const { return from_twice(twice_m_ + 2 * k); }

  /// Always "p/2" with p = 2m, the form used in reports.
  std::string to_string() const;

  friend bool operator==(const ExactParam &, const ExactParam &) = default;
  friend auto operator<=>(const ExactParam &, const ExactParam &) = default;

private:
  explicit ExactParam(std::int64_t twice_m) : twice_m_(twice_m) {}
  std::int64_t twice_m_ = 0;
};

} // namespace hbe

#endif // HBE_EXACT_PARAM_HPP
