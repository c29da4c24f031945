#include "hbe/recursions.hpp"

#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"
#include "hbe/linear_solve.hpp"

namespace hbe {

namespace {

using R = Rational;

void require(bool ok, const std::string &what) {
  if (!ok) {
    throw DomainError(what);
  }
}

// 2^{2n+1} / C(2n, n)
R doubled_central_ratio(std::int64_t n) { return pow2(2 * n + 1) / binom_nat(2 * n, n); }

R ipow(std::int64_t base, std::int64_t e) { return R(base).pow(e); }

} // namespace

Rational c_coeff(std::int64_t d, std::int64_t j) {
  require(d >= 1 && j >= 1 && j <= d,
          "c_coeff: need 1 <= j <= d, got d = " + std::to_string(d) + ", j = " + std::to_string(j));
  return binom_nat(d + 1, j + 1) + binom_nat(d, j + 1);
}

std::vector<Rational> u_table(std::int64_t d, std::int64_t n) {
  require(d >= 0, "U_d: d must be nonnegative");
  require(n >= 1, "U_d: n must be positive");
  const R lead = R(n + 1) * doubled_central_ratio(n);
  std::vector<R> u(static_cast<std::size_t>(d + 1));
  u[0] = (lead - R(2)) / R(3);
  for (std::int64_t e = 1; e <= d; ++e) {
    R acc = lead * ipow(n, e);
    for (std::int64_t j = 1; j <= e; ++j) {
      const R term = c_coeff(e, j) * u[e - j];
      acc += (j % 2 == 0) ? -term : term; // minus (-1)^j c U
    }
    u[e] = acc / R(2 * e + 3);
  }
  return u;
}

std::vector<Rational> v_table(std::int64_t d, std::int64_t n) {
  const std::vector<R> u = u_table(d, n);
  const R w = doubled_central_ratio(n);
  const R h = harmonic(n);
  const R lead = R(n + 1) * w * (h + R(1, n + 1));
  std::vector<R> v(static_cast<std::size_t>(d + 1));
  v[0] = R(-2, 9) + w / R(3) * (R(n + 1) * h - R(2 * n - 1, 3));
  for (std::int64_t e = 1; e <= d; ++e) {
    R acc = lead * ipow(n, e) - R(2) * u[e];
    for (std::int64_t j = 1; j <= e; ++j) {
      const R term = c_coeff(e, j) * v[e - j];
      acc += (j % 2 == 0) ? -term : term;
    }
    v[e] = acc / R(2 * e + 3);
  }
  return v;
}

Rational u_rec(std::int64_t d, std::int64_t n) { return u_table(d, n).back(); }
Rational v_rec(std::int64_t d, std::int64_t n) { return v_table(d, n).back(); }

Rational u_direct(std::int64_t d, std::int64_t n) {
  require(d >= 0 && n >= 0, "U_d: negative argument");
  R sum, u = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    u *= R(2 * k, 2 * k - 1);
    sum += u * ipow(k, d);
  }
  return sum;
}

Rational v_direct(std::int64_t d, std::int64_t n) {
  require(d >= 0 && n >= 0, "V_d: negative argument");
  R sum, u = 1, h;
  for (std::int64_t k = 1; k <= n; ++k) {
    u *= R(2 * k, 2 * k - 1);
    h += R(1, k);
    sum += u * ipow(k, d) * h;
  }
  return sum;
}

Rational u_closed_small(std::int64_t d, std::int64_t n) {
  require(n >= 1, "U_d: n must be positive");
  const R w = R(n + 1) * doubled_central_ratio(n);
  switch (d) {
  case 1:
    return (R(3 * n + 1) * w - R(2)) / R(15);
  case 2:
    return (R(15 * n * n + 12 * n - 1) * w + R(2)) / R(105);
  case 3:
    return (R(105 * n * n * n + 135 * n * n + 3 * n - 9) * w + R(18)) / R(945);
  default:
    throw DomainError("u_closed_small: d must be 1, 2 or 3");
  }
}

Rational v_closed_small(std::int64_t d, std::int64_t n) {
  require(n >= 1, "V_d: n must be positive");
  const R w = doubled_central_ratio(n);
  const R h = harmonic(n);
  switch (d) {
  case 1:
    return R(3 * n + 1) * R(n + 1) * w * h / R(15) - R(18 * n * n - 11 * n + 1) * w / R(225) +
           R(2, 225);
  case 2:
    return R(n + 1) * R(15 * n * n + 12 * n - 1) * w * h / R(105) -
           R(450 * n * n * n - 261 * n * n - 328 * n + 173) * w / R(11025) + R(346, 11025);
  default:
    throw DomainError("v_closed_small: d must be 1 or 2");
  }
}

Rational structure_normalizer(std::int64_t d) {
  R n = 1;
  for (std::int64_t j = 0; j <= d + 1; ++j) {
    n *= R(2 * j + 1);
  }
  return n;
}

Rational eval_poly(const std::vector<Rational> &coeffs, const Rational &x) {
  R acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational PolynomialFit::evaluate(std::int64_t n) const {
  const R x(n);
  const R w = doubled_central_ratio(n);
  return w / n_factor *
             (R(n + 1) * eval_poly(p, x) * harmonic(n) -
              R(2 * n - 1) * eval_poly(q, x) / n_factor) +
         c_const / (n_factor * n_factor);
}

Rational UFit::evaluate(std::int64_t n) const {
  const R w = doubled_central_ratio(n);
  return (w * R(n + 1) * eval_poly(r, R(n)) + k_const) / n_factor;
}

PolynomialFit fit_structure(std::int64_t d) {
  require(d >= 1, "fit_structure: d must be positive");
  const R nf = structure_normalizer(d);
  const R nf2 = nf * nf;
  const std::int64_t unknowns = 2 * d + 3;

  RationalMatrix a;
  std::vector<R> b;
  for (std::int64_t n = 1; n <= unknowns; ++n) {
    const R w = doubled_central_ratio(n);
    const R h = harmonic(n);
    std::vector<R> row;
    for (std::int64_t i = 0; i <= d; ++i) {
      row.push_back(w / nf * R(n + 1) * ipow(n, i) * h);
    }
    for (std::int64_t i = 0; i <= d; ++i) {
      row.push_back(-w * R(2 * n - 1) * ipow(n, i) / nf2);
    }
    row.push_back(R(1) / nf2);
    a.push_back(std::move(row));
    b.push_back(v_rec(d, n));
  }

  auto x = solve_exact(a, b);
  if (!x) {
    throw SingularSystem("fit_structure: singular system at d = " + std::to_string(d));
  }

  PolynomialFit fit;
  fit.d = d;
  fit.n_factor = nf;
  fit.p.assign(x->begin(), x->begin() + d + 1);
  fit.q.assign(x->begin() + d + 1, x->begin() + 2 * d + 2);
  fit.c_const = x->back();

  fit.residual_ok = true;
  for (std::int64_t n = unknowns + 1; n <= 2 * unknowns; ++n) {
    if (fit.evaluate(n) != v_rec(d, n)) {
      fit.residual_ok = false;
      fit.diagnostic = "ansatz fails validation at n = " + std::to_string(n);
      break;
    }
  }
  return fit;
}

UFit fit_u_structure(std::int64_t d) {
  require(d >= 1, "fit_u_structure: d must be positive");
  const R nf = structure_normalizer(d);
  const std::int64_t unknowns = d + 2;

  RationalMatrix a;
  std::vector<R> b;
  for (std::int64_t n = 1; n <= unknowns; ++n) {
    const R w = doubled_central_ratio(n);
    std::vector<R> row;
    for (std::int64_t i = 0; i <= d; ++i) {
      row.push_back(w * R(n + 1) * ipow(n, i) / nf);
    }
    row.push_back(R(1) / nf);
    a.push_back(std::move(row));
    b.push_back(u_rec(d, n));
  }

  auto x = solve_exact(a, b);
  if (!x) {
    throw SingularSystem("fit_u_structure: singular system at d = " + std::to_string(d));
  }

  UFit fit;
  fit.d = d;
  fit.n_factor = nf;
  fit.r.assign(x->begin(), x->begin() + d + 1);
  fit.k_const = x->back();

  mpz_class lcd = 1;
  for (const R &c : *x) {
    const R unnormalized = c / nf;
    mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), unnormalized.denominator().get_mpz_t());
  }
  fit.minimal_denominator = R(lcd);

  fit.residual_ok = true;
  for (std::int64_t n = unknowns + 1; n <= 2 * unknowns; ++n) {
    if (fit.evaluate(n) != u_rec(d, n)) {
      fit.residual_ok = false;
      fit.diagnostic = "ansatz fails validation at n = " + std::to_string(n);
      break;
    }
  }
  return fit;
}

} // namespace hbe
