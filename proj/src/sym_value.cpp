#include "hbe/sym_value.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "hbe/errors.hpp"

namespace hbe {

bool SymValue::is_rational() const {
  return c_[Ln2].is_zero() && c_[Ln2Sq].is_zero() && c_[PiSq].is_zero();
}

double SymValue::to_double() const {
  const double ln2 = std::numbers::ln2;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return c_[One].to_double() + c_[Ln2].to_double() * ln2 + c_[Ln2Sq].to_double() * ln2 * ln2 +
         c_[PiSq].to_double() * pi2;
}

std::string SymValue::to_string() const {
  static constexpr const char *names[] = {"", "ln2", "ln2^2", "pi^2"};
  std::string out;
  for (std::size_t b = 0; b < c_.size(); ++b) {
    const Rational &c = c_[b];
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (b == One) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += names[b];
    } else {
      out += mag.to_string() + "*" + names[b];
    }
  }
  return out.empty() ? "0" : out;
}

SymValue &SymValue::operator+=(const SymValue &rhs) {
  for (std::size_t b = 0; b < c_.size(); ++b) {
    c_[b] += rhs.c_[b];
  }
  return *this;
}

SymValue &SymValue::operator-=(const SymValue &rhs) {
  for (std::size_t b = 0; b < c_.size(); ++b) {
    c_[b] -= rhs.c_[b];
  }
  return *this;
}

SymValue &SymValue::operator*=(const Rational &q) {
  for (auto &c : c_) {
    c *= q;
  }
  return *this;
}

SymValue &SymValue::operator/=(const Rational &q) {
  for (auto &c : c_) {
    c /= q;
  }
  return *this;
}

SymValue &SymValue::operator*=(const SymValue &rhs) {
  if (rhs.is_rational()) {
    return *this *= rhs.c_[One];
  }
  if (is_rational()) {
    const Rational q = c_[One];
    *this = rhs;
    return *this *= q;
  }
  // Both carry transcendental parts; only (a + b ln2)(c + d ln2) closes.
  if (!c_[Ln2Sq].is_zero() || !c_[PiSq].is_zero() || !rhs.c_[Ln2Sq].is_zero() ||
      !rhs.c_[PiSq].is_zero()) {
    throw OutOfSpan("product of " + to_string() + " and " + rhs.to_string() +
                    " leaves span{1, ln2, ln2^2, pi^2}");
  }
  const Rational &a = c_[One], &b = c_[Ln2];
  const Rational &c = rhs.c_[One], &d = rhs.c_[Ln2];
  *this = SymValue(a * c, a * d + b * c, b * d, 0);
  return *this;
}

SymValue SymValue::operator-() const {
  SymValue r;
  for (std::size_t b = 0; b < c_.size(); ++b) {
    r.c_[b] = -c_[b];
  }
  return r;
}

SymValue sym_add(const SymValue &a, const SymValue &b) { return a + b; }
SymValue sym_scale(const Rational &q, const SymValue &a) { return q * a; }
SymValue sym_mul(const SymValue &a, const SymValue &b) { return a * b; }

std::ostream &operator<<(std::ostream &os, const SymValue &v) { return os << v.to_string(); }

} // namespace hbe
