#ifndef HBE_SYM_VALUE_HPP
#define HBE_SYM_VALUE_HPP

#include <array>
#include <string>

#include "hbe/rational.hpp"

namespace hbe {

/// Element of the rational span of the basis (1, ln2, ln2^2, pi^2).
///
/// The basis is treated as linearly independent over Q, so two values are
/// equal exactly when all four coefficients agree. Products are supported
/// only where they stay inside the span (rational times anything, and
/// ln2 * ln2); everything else throws OutOfSpan.
class SymValue {
public:
  enum Basis : std::size_t { One = 0, Ln2 = 1, Ln2Sq = 2, PiSq = 3 };

  SymValue() = default;
  SymValue(Rational rational) { c_[One] = std::move(rational); }
  template <std::integral I>
  SymValue(I value) : SymValue(Rational(value)) {}
  SymValue(Rational one, Rational ln2, Rational ln2sq, Rational pisq)
      : c_{std::move(one), std::move(ln2), std::move(ln2sq), std::move(pisq)} {}

  static SymValue ln2() { return {0, 1, 0, 0}; }
  static SymValue ln2_squared() { return {0, 0, 1, 0}; }
  static SymValue pi_squared() { return {0, 0, 0, 1}; }

  const Rational &coeff(Basis b) const { return c_[b]; }
  const Rational &rational_part() const { return c_[One]; }
  bool is_rational() const;

  double to_double() const;
  /// "a + b*ln2 + c*ln2^2 + d*pi^2", zero terms omitted, "0" when empty.
  std::string to_string() const;

  SymValue &operator+=(const SymValue &rhs);
  SymValue &operator-=(const SymValue &rhs);
  SymValue &operator*=(const Rational &q);
  SymValue &operator/=(const Rational &q);
  SymValue &operator*=(const SymValue &rhs);

  friend SymValue operator+(SymValue a, const SymValue &b) { return a += b; }
  friend SymValue operator-(SymValue a, const SymValue &b) { return a -= b; }
  friend SymValue operator*(SymValue a, const SymValue &b) { return a *= b; }
  friend SymValue operator*(const Rational &q, SymValue a) { return a *= q; }
  friend SymValue operator*(SymValue a, const Rational &q) { return a *= q; }
  friend SymValue operator/(SymValue a, const Rational &q) { return a /= q; }
  SymValue operator-() const;

  friend bool operator==(const SymValue &a, const SymValue &b) = default;

private:
  std::array<Rational, 4> c_{};
};

SymValue sym_add(const SymValue &a, const SymValue &b);
SymValue sym_scale(const Rational &q, const SymValue &a);
SymValue sym_mul(const SymValue &a, const SymValue &b);

std::ostream &operator<<(std::ostream &os, const SymValue &v);

} // namespace hbe

#endif // HBE_SYM_VALUE_HPP
