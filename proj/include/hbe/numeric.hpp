#ifndef HBE_NUMERIC_HPP
#define HBE_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbe/rational.hpp"

namespace hbe {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kZeta2 = 1.64493406684822643647241516664602519;

/// psi(x). Throws PoleError within 1e-12 of a nonpositive integer.
double digamma(double x);
/// psi'(x). Throws PoleError within 1e-12 of a nonpositive integer.
double trigamma(double x);

/// H_z = psi(z+1) + gamma
double harmonic_num(double z);
/// H_z^(2) = zeta(2) - psi'(z+1)
double harmonic2_num(double z);

/// C(m+k, k) for real m through log-Gamma, with the sign of each Gamma
/// factor tracked separately.
double binom_real(double m, std::int64_t k);

struct NumericReport {
  std::string identity;
  double m = 0.0;
  std::int64_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  double tol = 0.0;
};

/// |a - b| / max(1, |a|, |b|)
double relative_error(double a, double b);

/// Identities that can be evaluated at real m.
const std::vector<std::string> &numeric_identities();

/// Both sides of I-cb-gen, I-thm21, I-thm41 or I-thm51 in double precision.
/// Throws DomainError for m within 1e-9 of a negative integer or -3/2, or
/// for n below the identity's minimum.
NumericReport verify_numeric(std::string_view id, double m, std::int64_t n, double tol = 1e-8);

/// Seeded random points: m uniform in (-1.45, 10) away from the excluded
/// points, n uniform in [1, 15], every numeric identity at each point.
std::vector<NumericReport> random_numeric_suite(std::uint64_t seed, int count, double tol = 1e-8);

enum class DerivativeKind { Harmonic, Binomial, CentralSum };

DerivativeKind parse_derivative_kind(std::string_view name);
std::string_view to_string(DerivativeKind kind);

/// Central difference of a map in m against its analytic derivative; returns
/// the largest deviation, measured with relative_error.
///   Harmonic:   dH_m/dm = zeta(2) - H_m^(2)
///   Binomial:   dC(m+k,k)/dm = C(m+k,k) (H_{m+k} - H_m), k = 0..20
///   CentralSum: both sides of the generalized central binomial sum at n,
///               and the analytic derivative of its left side.
double derivative_check(DerivativeKind kind, double m, double h, std::int64_t n = 8);

struct ResidualSum {
  std::int64_t n = 0;
  Rational exact;
  double numeric = 0.0;
  // Upper bound on sum_{j>n} of the terms. The term ratio is below
  // (j/(j+1))^{3/2}, so the tail is at most 2*n*t_n.
  double tail_bound = 0.0;
  double last_term = 0.0;
};

/// sum_{j=1..n} 4^j / (j^2 C(2j, j)). Throws DomainError for n < 1.
ResidualSum residual_sum(std::int64_t n, bool with_exact = true);

/// Largest relative deviation between harmonic2_exact at m = k + 1/2 and
/// harmonic2_num, k = 0..count-1.
double half_integer_order2_deviation(int count = 10);
/// True when half_integer_order2_deviation() <= 1e-10.
bool half_integer_order2_gate();

} // namespace hbe

#endif // HBE_NUMERIC_HPP
