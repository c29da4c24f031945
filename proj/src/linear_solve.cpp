#include "hbe/linear_solve.hpp"

#include <stdexcept>

namespace hbe {

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix &a,
                                                 const std::vector<Rational> &b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw std::invalid_argument("solve_exact: dimension mismatch");
  }
  for (const auto &row : a) {
    if (row.size() != n) {
      throw std::invalid_argument("solve_exact: matrix is not square");
    }
  }

  // Clear denominators row by row: [A | b] -> integer matrix.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = b[i].denominator();
    for (const auto &x : a[i]) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a[i][j].numerator() * (l / a[i][j].denominator());
    }
    m[i][n] = b[i].numerator() * (l / b[i].denominator());
  }

  // Bareiss: every division below is exact.
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      s -= Rational(m[i][j]) * x[j];
    }
    x[i] = s / Rational(m[i][i]);
  }
  return x;
}

} // namespace hbe
