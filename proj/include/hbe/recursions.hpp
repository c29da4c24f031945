#ifndef HBE_RECURSIONS_HPP
#define HBE_RECURSIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hbe/rational.hpp"

namespace hbe {

/// c_{d,j} = C(d+1, j+1) + C(d, j+1) for 1 <= j <= d.
Rational c_coeff(std::int64_t d, std::int64_t j);

/// U_d(n) = sum_{k=1..n} 4^k k^d / C(2k,k) by recursion in d at fixed n.
Rational u_rec(std::int64_t d, std::int64_t n);
/// V_d(n) = sum_{k=1..n} 4^k k^d H_k / C(2k,k) by recursion in d at fixed n.
Rational v_rec(std::int64_t d, std::int64_t n);

/// U_0(n)..U_d(n) in one pass.
std::vector<Rational> u_table(std::int64_t d, std::int64_t n);
std::vector<Rational> v_table(std::int64_t d, std::int64_t n);

/// Term-by-term sums, used for benchmarking against the recursions.
Rational u_direct(std::int64_t d, std::int64_t n);
Rational v_direct(std::int64_t d, std::int64_t n);

/// Explicit forms for d = 1, 2, 3 (U) and d = 1, 2 (V).
Rational u_closed_small(std::int64_t d, std::int64_t n);
Rational v_closed_small(std::int64_t d, std::int64_t n);

/// prod_{j=0..d+1} (2j+1)
Rational structure_normalizer(std::int64_t d);

/// V_d(n) = 2^{2n+1}/(N C(2n,n)) ((n+1) P(n) H_n - (2n-1) Q(n)/N) + C/N^2
struct PolynomialFit {
  std::int64_t d = 0;
  std::vector<Rational> p; // lowest degree first
  std::vector<Rational> q;
  Rational c_const;
  Rational n_factor;
  bool residual_ok = false;
  std::string diagnostic;

  Rational evaluate(std::int64_t n) const;
};

/// U_d(n) = 2^{2n+1} (n+1) R(n) / (N C(2n,n)) + K/N
struct UFit {
  std::int64_t d = 0;
  std::vector<Rational> r; // lowest degree first
  Rational k_const;
  Rational n_factor;
  // Least common denominator of the unnormalized coefficients of R and K.
  Rational minimal_denominator;
  bool residual_ok = false;
  std::string diagnostic;

  Rational evaluate(std::int64_t n) const;
};

/// Fits P, Q and C exactly from V_d at n = 1..2d+3 and validates the result
/// at n = 2d+4..4d+6. Throws DomainError for d < 1 and SingularSystem when
/// the fitting system has no unique solution.
PolynomialFit fit_structure(std::int64_t d);
UFit fit_u_structure(std::int64_t d);

Rational eval_poly(const std::vector<Rational> &coeffs, const Rational &x);

} // namespace hbe

#endif // HBE_RECURSIONS_HPP
