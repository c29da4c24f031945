#include "hbe/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"

namespace hbe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShift = 10.0;

// B_2 .. B_14
constexpr std::array<double, 7> kBernoulli = {1.0 / 6,   -1.0 / 30,  1.0 / 42,  -1.0 / 30,
                                              5.0 / 66,  -691.0 / 2730, 7.0 / 6};

void check_pole(double x, const char *fn) {
  const double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < 1e-12) {
    throw PoleError(std::string(fn) + ": pole at x = " + std::to_string(x));
  }
}

double digamma_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double pw = inv2;
  double series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * pw;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - series;
}

double trigamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double pw = inv2 * inv; // x^{-3}
  double series = 0.0;
  for (double b : kBernoulli) {
    series += b * pw;
    pw *= inv2;
  }
  return inv + 0.5 * inv2 + series;
}

// Sign of Gamma(x) for x not a nonpositive integer.
double gamma_sign(double x) {
  if (x > 0.0) {
    return 1.0;
  }
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1.0 : -1.0;
}

// 4^n / C(2n, n) through log-Gamma.
double central_ratio_real(std::int64_t n) {
  const double nn = static_cast<double>(n);
  return std::exp(2.0 * nn * std::numbers::ln2 - std::lgamma(2.0 * nn + 1.0) +
                  2.0 * std::lgamma(nn + 1.0));
}

bool near(double x, double target, double eps) { return std::abs(x - target) < eps; }

void check_real_m(double m, double eps = 1e-9) {
  if (!std::isfinite(m)) {
    throw DomainError("m must be finite");
  }
  if (near(m, -1.5, eps)) {
    throw DomainError("m = -3/2 is excluded");
  }
  const double r = std::round(m);
  if (r <= -1.0 && near(m, r, eps)) {
    throw DomainError("m = " + std::to_string(m) + " is a negative integer");
  }
}

double cbgen_lhs(double m, std::int64_t n) {
  double sum = 0.0, u = 1.0, b = 1.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += u * b;
    u *= 2.0 * static_cast<double>(k + 1) / static_cast<double>(2 * k + 1);
    b *= (m + static_cast<double>(k + 1)) / static_cast<double>(k + 1);
  }
  return sum;
}

double cbgen_rhs(double m, std::int64_t n) {
  const double t = 2.0 * m + 3.0;
  return ((m + static_cast<double>(n + 1)) * binom_real(m, n) * 2.0 * central_ratio_real(n) + 1.0) /
         t;
}

// d/dm of the cb-gen left side: sum u_k C(m+k,k) (H_{m+k} - H_m).
double cbgen_lhs_derivative(double m, std::int64_t n) {
  const double hm = harmonic_num(m);
  double sum = 0.0, u = 1.0, b = 1.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += u * b * (harmonic_num(m + static_cast<double>(k)) - hm);
    u *= 2.0 * static_cast<double>(k + 1) / static_cast<double>(2 * k + 1);
    b *= (m + static_cast<double>(k + 1)) / static_cast<double>(k + 1);
  }
  return sum;
}

double thm21_lhs(double m, std::int64_t n) {
  double sum = 0.0, u = 1.0, b = 1.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += u * b * harmonic_num(m + static_cast<double>(k));
    u *= 2.0 * static_cast<double>(k + 1) / static_cast<double>(2 * k + 1);
    b *= (m + static_cast<double>(k + 1)) / static_cast<double>(k + 1);
  }
  return sum;
}

double thm21_rhs(double m, std::int64_t n) {
  const double t = 2.0 * m + 3.0;
  const double g = binom_real(m, n) * central_ratio_real(n);
  const double nn = static_cast<double>(n);
  return (2.0 * g * (m + nn + 1.0) * harmonic_num(m + nn) + harmonic_num(m)) / t -
         2.0 / (t * t) * (g * (2.0 * nn - 1.0) + 1.0);
}

double thm41_lhs(double m, std::int64_t n) {
  double sum = 0.0, inv_u = 1.0, e = 1.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    inv_u *= (2.0 * kk - 1.0) / (2.0 * kk);
    e *= (m + 1.0 + kk) / kk;
    sum += inv_u / ((2.0 * kk - 1.0) * e) * harmonic_num(m + kk + 1.0);
  }
  return sum;
}

double thm41_rhs(double m, std::int64_t n) {
  const double t = 2.0 * m + 3.0;
  const double nn = static_cast<double>(n);
  return (4.0 * m + 5.0) / ((m + 1.0) * t * t) + harmonic_num(m) / t -
         1.0 / (central_ratio_real(n) * t * binom_real(m + 1.0, n)) *
             (harmonic_num(m + nn + 1.0) + 2.0 / t);
}

double thm51_lhs(double m, std::int64_t n) {
  double sum = 0.0, u = 1.0, b = 1.0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double z = m + static_cast<double>(k);
    const double h = harmonic_num(z);
    sum += u * b * (h * h - harmonic2_num(z));
    u *= 2.0 * static_cast<double>(k + 1) / static_cast<double>(2 * k + 1);
    b *= (m + static_cast<double>(k + 1)) / static_cast<double>(k + 1);
  }
  return sum;
}

double thm51_rhs(double m, std::int64_t n) {
  const double t = 2.0 * m + 3.0;
  const double nn = static_cast<double>(n);
  const double g = binom_real(m, n) / binom_real(nn, n); // C(m+n,n)/C(2n,n)
  const double p2 = std::pow(2.0, 2.0 * nn);
  const double hm = harmonic_num(m), h2m = harmonic2_num(m);
  const double hmn = harmonic_num(m + nn), h2mn = harmonic2_num(m + nn);
  const double a = hm * hm - h2m + 2.0 * p2 * g * (hmn + (m + nn + 1.0) * (hmn * hmn - h2mn));
  const double b = 4.0 * p2 * (m + nn + 1.0) * g * hmn + 4.0 * hm + 2.0 * p2 * (2.0 * nn - 1.0) * g * hmn;
  const double c = p2 * (2.0 * nn - 1.0) * g + 1.0;
  return a / t - b / (t * t) + 8.0 * c / (t * t * t);
}

struct NumericIdentity {
  const char *id;
  std::int64_t n_min;
  double (*lhs)(double, std::int64_t);
  double (*rhs)(double, std::int64_t);
};

constexpr std::array<NumericIdentity, 4> kNumeric = {{
    {"I-cb-gen", 0, cbgen_lhs, cbgen_rhs},
    {"I-thm21", 0, thm21_lhs, thm21_rhs},
    {"I-thm41", 1, thm41_lhs, thm41_rhs},
    {"I-thm51", 1, thm51_lhs, thm51_rhs},
}};

const NumericIdentity &numeric_identity(std::string_view id) {
  for (const auto &ni : kNumeric) {
    if (id == ni.id) {
      return ni;
    }
  }
  throw DomainError("no numeric evaluation for identity " + std::string(id));
}

} // namespace

double digamma(double x) {
  check_pole(x, "digamma");
  if (x < 0.0) {
    return digamma(1.0 - x) - kPi / std::tan(kPi * x);
  }
  double acc = 0.0;
  while (x < kShift) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

double trigamma(double x) {
  check_pole(x, "trigamma");
  if (x < 0.0) {
    const double s = std::sin(kPi * x);
    return -trigamma(1.0 - x) + kPi * kPi / (s * s);
  }
  double acc = 0.0;
  while (x < kShift) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  return acc + trigamma_asymptotic(x);
}

double harmonic_num(double z) { return digamma(z + 1.0) + kEulerGamma; }

double harmonic2_num(double z) { return kZeta2 - trigamma(z + 1.0); }

double binom_real(double m, std::int64_t k) {
  const double kk = static_cast<double>(k);
  for (double x : {m + 1.0, m + kk + 1.0}) {
    const double r = std::round(x);
    if (r <= 0.0 && near(x, r, 1e-9)) {
      throw DomainError("binom_real: Gamma pole at " + std::to_string(x));
    }
  }
  const double sign = gamma_sign(m + kk + 1.0) * gamma_sign(m + 1.0);
  return sign * std::exp(std::lgamma(m + kk + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(m + 1.0));
}

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

const std::vector<std::string> &numeric_identities() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto &ni : kNumeric) {
      v.emplace_back(ni.id);
    }
    return v;
  }();
  return ids;
}

NumericReport verify_numeric(std::string_view id, double m, std::int64_t n, double tol) {
  const NumericIdentity &ni = numeric_identity(id);
  check_real_m(m);
  if (n < ni.n_min) {
    throw DomainError(std::string(id) + ": n below n_min");
  }
  NumericReport r;
  r.identity = ni.id;
  r.m = m;
  r.n = n;
  r.tol = tol;
  r.lhs = ni.lhs(m, n);
  r.rhs = ni.rhs(m, n);
  r.rel_err = relative_error(r.lhs, r.rhs);
  r.pass = r.rel_err <= tol;
  return r;
}

std::vector<NumericReport> random_numeric_suite(std::uint64_t seed, int count, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> m_dist(-1.45, 10.0);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 15);
  std::vector<NumericReport> out;
  for (int i = 0; i < count;) {
    const double m = m_dist(rng);
    const std::int64_t n = n_dist(rng);
    if (near(m, -1.5, 1e-3) || near(m, -1.0, 1e-3)) {
      continue;
    }
    for (const auto &ni : kNumeric) {
      out.push_back(verify_numeric(ni.id, m, n, tol));
    }
    ++i;
  }
  return out;
}

DerivativeKind parse_derivative_kind(std::string_view name) {
  if (name == "harmonic") {
    return DerivativeKind::Harmonic;
  }
  if (name == "binomial") {
    return DerivativeKind::Binomial;
  }
  if (name == "central-sum") {
    return DerivativeKind::CentralSum;
  }
  throw DomainError("unknown derivative kind " + std::string(name));
}

std::string_view to_string(DerivativeKind kind) {
  switch (kind) {
  case DerivativeKind::Harmonic:
    return "harmonic";
  case DerivativeKind::Binomial:
    return "binomial";
  case DerivativeKind::CentralSum:
    return "central-sum";
  }
  return "";
}

double derivative_check(DerivativeKind kind, double m, double h, std::int64_t n) {
  if (!(h >= 1e-7 && h <= 1e-4)) {
    throw DomainError("derivative_check: h must lie in [1e-7, 1e-4]");
  }
  for (double x : {m, m - h, m + h}) {
    check_real_m(x);
  }
  auto central = [h](auto &&f) { return (f(+h) - f(-h)) / (2.0 * h); };

  switch (kind) {
  case DerivativeKind::Harmonic: {
    const double fd = central([m](double s) { return harmonic_num(m + s); });
    return relative_error(fd, kZeta2 - harmonic2_num(m));
  }
  case DerivativeKind::Binomial: {
    double worst = 0.0;
    const double hm = harmonic_num(m);
    for (std::int64_t k = 0; k <= 20; ++k) {
      const double fd = central([m, k](double s) { return binom_real(m + s, k); });
      const double analytic =
          binom_real(m, k) * (harmonic_num(m + static_cast<double>(k)) - hm);
      worst = std::max(worst, relative_error(fd, analytic));
    }
    return worst;
  }
  case DerivativeKind::CentralSum: {
    if (n < 0) {
      throw DomainError("derivative_check: n must be nonnegative");
    }
    const double fd_lhs = central([m, n](double s) { return cbgen_lhs(m + s, n); });
    const double fd_rhs = central([m, n](double s) { return cbgen_rhs(m + s, n); });
    const double analytic = cbgen_lhs_derivative(m, n);
    // The harmonic family's closed form gives the same derivative:
    // d/dm LHS = sum u_k b_k H_{k+m} - H_m sum u_k b_k.
    const double via_closed_forms = thm21_rhs(m, n) - harmonic_num(m) * cbgen_rhs(m, n);
    return std::max({relative_error(fd_lhs, fd_rhs), relative_error(fd_lhs, analytic),
                     relative_error(fd_rhs, via_closed_forms)});
  }
  }
  return 0.0;
}

ResidualSum residual_sum(std::int64_t n, bool with_exact) {
  if (n < 1) {
    throw DomainError("residual_sum: n must be positive");
  }
  ResidualSum r;
  r.n = n;
  double u = 1.0, sum = 0.0, comp = 0.0, term = 0.0;
  Rational exact, uq(1);
  for (std::int64_t j = 1; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    u *= 2.0 * jj / (2.0 * jj - 1.0);
    term = u / (jj * jj);
    // Kahan
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (with_exact) {
      uq *= Rational(2 * j, 2 * j - 1);
      exact += uq / Rational(j * j);
    }
  }
  r.exact = std::move(exact);
  r.numeric = sum;
  r.last_term = term;
  r.tail_bound = 2.0 * static_cast<double>(n) * term;
  return r;
}

double half_integer_order2_deviation(int count) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const double exact = harmonic2_exact(ExactParam::from_twice(2 * k + 1)).to_double();
    const double numeric = harmonic2_num(static_cast<double>(k) + 0.5);
    worst = std::max(worst, std::abs(exact - numeric) / std::abs(numeric));
  }
  return worst;
}

bool half_integer_order2_gate() { return half_integer_order2_deviation() <= 1e-10; }

} // namespace hbe
