#include "hbe/rational.hpp"

#include <ostream>

#include "hbe/errors.hpp"

namespace hbe {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : v_(num, den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string &t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) {
      return false;
    }
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') {
        return false;
      }
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') {
      t.erase(0, 1);
    }
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) {
      throw DomainError("malformed rational: " + s);
    }
    return Rational(mpz_class(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw DomainError("malformed rational: " + s);
  }
  return Rational(mpz_class(strip_plus(num)), mpz_class(strip_plus(den)));
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DomainError("reciprocal of zero");
  }
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    return reciprocal().pow(-exponent);
  }
  Rational r;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  r.v_.get_num() = num;
  r.v_.get_den() = den;
  return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  v_ /= rhs.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.to_string(); }

Rational pow2(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    return Rational(mpz_class(1), p);
  }
  return Rational(p);
}

} // namespace hbe
