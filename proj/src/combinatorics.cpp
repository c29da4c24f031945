#include "hbe/combinatorics.hpp"

#include "hbe/errors.hpp"

namespace hbe {

namespace {

void require_nonneg(std::int64_t v, const char *what) {
  if (v < 0) {
    throw DomainError(std::string(what) + " must be nonnegative");
  }
}

} // namespace

Rational binom_nat(std::int64_t n, std::int64_t k) {
  require_nonneg(n, "n");
  require_nonneg(k, "k");
  if (k > n) {
    return Rational(0);
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational binom_gen(const Rational &m, std::int64_t k) {
  require_nonneg(k, "k");
  if (m.is_integer() && m.sign() >= 0) {
    return binom_nat(m.numerator().get_si() + k, k);
  }
  // m = p/q: prod (p + j q) / (q^k k!), reduced once at the end.
  const mpz_class p = m.numerator();
  const mpz_class q = m.denominator();
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    num *= p + q * j;
    den *= q * j;
  }
  return Rational(num, den);
}

Rational binom_upper(const Rational &r, std::int64_t k) {
  require_nonneg(k, "k");
  return binom_gen(r - Rational(k), k);
}

Rational catalan(std::int64_t n) { return binom_nat(2 * n, n) / Rational(n + 1); }

Rational harmonic(std::int64_t n) {
  require_nonneg(n, "n");
  Rational s;
  for (std::int64_t k = 1; k <= n; ++k) {
    s += Rational(1, k);
  }
  return s;
}

Rational odd_harmonic(std::int64_t n) {
  require_nonneg(n, "n");
  Rational s;
  for (std::int64_t k = 1; k <= n; ++k) {
    s += Rational(1, 2 * k - 1);
  }
  return s;
}

Rational harmonic2(std::int64_t n) {
  require_nonneg(n, "n");
  Rational s;
  for (std::int64_t k = 1; k <= n; ++k) {
    s += Rational(1, k * k);
  }
  return s;
}

Rational odd_harmonic2(std::int64_t n) {
  require_nonneg(n, "n");
  Rational s;
  for (std::int64_t k = 1; k <= n; ++k) {
    s += Rational(1, (2 * k - 1) * (2 * k - 1));
  }
  return s;
}

SymValue harmonic_exact(const ExactParam &m) {
  if (m.is_integer()) {
    return harmonic(m.floor());
  }
  const std::int64_t n = m.floor();
  return SymValue(Rational(2) * odd_harmonic(n + 1), Rational(-2), 0, 0);
}

SymValue harmonic2_exact(const ExactParam &m) {
  if (m.is_integer()) {
    return harmonic2(m.floor());
  }
  const std::int64_t n = m.floor();
  return SymValue(Rational(4) * odd_harmonic2(n + 1), 0, 0, Rational(-1, 3));
}

} // namespace hbe
