#ifndef HBE_RATIONAL_HPP
#define HBE_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hbe {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}

  template <std::unsigned_integral U>
  Rational(U value) : v_(static_cast<unsigned long>(value)) {}

  Rational(long num, long den);
  explicit Rational(mpz_class integer) : v_(std::move(integer)) {}
  Rational(const mpz_class &num, const mpz_class &den);

  /// Parses "a", "-a" or "a/b" in base 10. Throws DomainError on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class &gmp() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string to_string() const;

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(long exponent) const;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

/// 2^exponent exactly; negative exponents give 1/2^|exponent|.
Rational pow2(long exponent);

} // namespace hbe

#endif // HBE_RATIONAL_HPP
