#include "hbe/exact_param.hpp"

#include <string>

#include "hbe/errors.hpp"

namespace hbe {

ExactParam ExactParam::from_twice(std::int64_t twice_m) {
  if (twice_m < -1 || (twice_m % 2 == 0 && twice_m < 0)) {
    throw DomainError("m = " + std::to_string(twice_m) +
                      "/2 is not an integer >= 0 or a half-integer >= -1/2");
  }
  return ExactParam(twice_m);
}

ExactParam ExactParam::parse(std::string_view text) {
  const Rational q = Rational::parse(text);
  const Rational twice = q * Rational(2);
  if (!twice.is_integer() || !twice.numerator().fits_slong_p()) {
    throw DomainError("m = " + std::string(text) + " is not an integer or half-integer");
  }
  return from_twice(twice.numerator().get_si());
}

std::int64_t ExactParam::floor() const {
  return twice_m_ >= 0 ? twice_m_ / 2 : -1;
}

std::string ExactParam::to_string() const { return std::to_string(twice_m_) + "/2"; }

} // namespace hbe
