// The built-in identity catalog. Every left side is summed term by term with
// running ratios for the binomial factors; every right side is the closed
// form, evaluated with single binomial and harmonic evaluations.

#include "hbe/catalog.hpp"
#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"

namespace hbe {

namespace {

using R = Rational;

R q(std::int64_t a, std::int64_t b = 1) { return R(a, b); }

// 4^n / C(2n, n)
R central_ratio(std::int64_t n) { return pow2(2 * n) / binom_nat(2 * n, n); }

// Steps u_k = 4^k / C(2k, k) to u_{k+1}.
void advance_central(R &u, std::int64_t k) { u *= q(2 * (k + 1), 2 * k + 1); }

const ExactParam &param(const EvalPoint &p) { return *p.m; }

bool any_m(const ExactParam &) { return true; }
bool integer_m(const ExactParam &m) { return m.is_integer(); }
bool positive_integer_m(const ExactParam &m) { return m.is_integer() && m.twice() >= 2; }

Identity make(std::string id, std::string title, std::string source, std::int64_t n_min,
              Ring ring, SideEvaluator lhs, SideEvaluator rhs,
              std::function<bool(const ExactParam &)> m_domain = nullptr) {
  IdentityDescriptor d;
  d.id = std::move(id);
  d.title = std::move(title);
  d.source = std::move(source);
  d.requires_m = static_cast<bool>(m_domain);
  d.m_domain = std::move(m_domain);
  d.n_min = n_min;
  d.ring = ring;
  return Identity{std::move(d), std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Reciprocal binomial sums

SideValue rockett_lhs(const EvalPoint &p) {
  const auto n = p.n;
  R sum, c = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += c.reciprocal();
    c *= q(n - k, k + 1);
  }
  return {sum, n + 1};
}

SideValue rockett_rhs(const EvalPoint &p) {
  const auto n = p.n;
  R inner;
  for (std::int64_t k = 1; k <= n + 1; ++k) {
    inner += pow2(k) / q(k);
  }
  return {q(n + 1) / pow2(n + 1) * inner, n + 1};
}

SideValue cb0_lhs(const EvalPoint &p) {
  R sum, u = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u;
    advance_central(u, k);
  }
  return {sum, p.n + 1};
}

// Catalan form: (2^{2n+1}/C_n + 1)/3.
SideValue cb0_rhs(const EvalPoint &p) {
  return {q(1, 3) * (pow2(2 * p.n + 1) / catalan(p.n) + q(1)), 1};
}

SideValue cbgen_lhs(const EvalPoint &p) {
  const R m = param(p).value();
  R sum, u = 1, b = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u * b;
    advance_central(u, k);
    b *= (m + q(k + 1)) / q(k + 1);
  }
  return {sum, p.n + 1};
}

SideValue cbgen_rhs(const EvalPoint &p) {
  const R m = param(p).value();
  const auto n = p.n;
  const R g = binom_gen(m, n) / binom_nat(2 * n, n);
  return {((m + q(n + 1)) * g * pow2(2 * n + 1) + q(1)) / (q(2) * m + q(3)), 1};
}

// ---------------------------------------------------------------------------
// First harmonic family

SideValue thm21_lhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m = mp.value();
  SymValue sum, h = harmonic_exact(mp);
  R u = 1, b = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += (u * b) * h;
    advance_central(u, k);
    b *= (m + q(k + 1)) / q(k + 1);
    h += (m + q(k + 1)).reciprocal();
  }
  return {sum, p.n + 1};
}

SideValue thm21_rhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m = mp.value();
  const auto n = p.n;
  const R t = q(2) * m + q(3);
  const R g = binom_gen(m, n) / binom_nat(2 * n, n);
  const SymValue h_mn = harmonic_exact(mp.shifted(n));
  const SymValue h_m = harmonic_exact(mp);
  SymValue v = (pow2(2 * n + 1) * (m + q(n + 1)) * g * h_mn + h_m) / t;
  v -= SymValue(q(2) / (t * t) * (pow2(2 * n) * q(2 * n - 1) * g + q(1)));
  return {v, 1};
}

SideValue har_lhs(const EvalPoint &p) {
  R sum, u = 1, h;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u * h;
    advance_central(u, k);
    h += q(1, k + 1);
  }
  return {sum, p.n + 1};
}

SideValue har_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R w = q(2) * central_ratio(n);
  return {q(-2, 9) + w / q(3) * (q(n + 1) * harmonic(n) - q(2 * n - 1, 3)), 1};
}

SideValue harmn_lhs(const EvalPoint &p) {
  const auto n = p.n;
  R sum, u = 1, c = 1, h = harmonic(n);
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += u * c * h;
    advance_central(u, k);
    c *= q(n + k + 1, k + 1);
    h += q(1, n + k + 1);
  }
  return {sum, n + 1};
}

SideValue harmn_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R t = q(2 * n + 3);
  const R v = pow2(2 * n + 1) / t * (q(2 * n + 1) * harmonic(2 * n) - q(2 * n - 1) / t) +
              (harmonic(n) - q(2) / t) / t;
  return {v, 1};
}

SideValue ohar_lhs(const EvalPoint &p) {
  R sum, u = 1, o;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u * o;
    advance_central(u, k);
    o += q(1, 2 * k + 1);
  }
  return {sum, p.n + 1};
}

SideValue ohar_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(2, 9) + q(2, 9) * central_ratio(n) * q(n + 1) * (q(3) * odd_harmonic(n) - q(1)), 1};
}

SideValue evenhar_lhs(const EvalPoint &p) {
  R sum, u = 1, h;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u * h;
    advance_central(u, k);
    h += q(1, 2 * k + 1) + q(1, 2 * k + 2);
  }
  return {sum, p.n + 1};
}

SideValue evenhar_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(1, 9) + central_ratio(n) / q(3) * (q(2 * (n + 1)) * harmonic(2 * n) - q(4 * n + 1, 3)),
          1};
}

SideValue o1_lhs(const EvalPoint &p) {
  R sum, o = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += q(2 * k + 1) * o;
    o += q(1, 2 * k + 3);
  }
  return {sum, p.n + 1};
}

SideValue o1_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(1, 4) * (q((2 * n + 1) * (2 * n + 3)) * odd_harmonic(n + 1) - q((n - 1) * (n + 1))),
          1};
}

SideValue o2_lhs(const EvalPoint &p) {
  R sum, o;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += o;
    o += q(1, 2 * k + 1);
  }
  return {sum, p.n + 1};
}

SideValue o2_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(2 * n + 1, 2) * odd_harmonic(n) - q(n, 2), 1};
}

SideValue chujin_lhs(const EvalPoint &p) {
  const auto n = p.n;
  const std::int64_t m = param(p).floor();
  R sum, c = 1, b = 1, h;
  for (std::int64_t k = 0; k <= n; ++k) {
    R term = c / b * h;
    sum += (k % 2 == 0) ? term : -term;
    c *= q(n - k, k + 1);
    b *= q(m + k + 1, k + 1);
    h += q(1, k + 1);
  }
  return {sum, n + 1};
}

SideValue chujin_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const std::int64_t m = param(p).floor();
  return {q(m, n + m) * (harmonic(m - 1) - harmonic(n + m - 1)), 1};
}

// ---------------------------------------------------------------------------
// Second harmonic family

SideValue cb2_lhs(const EvalPoint &p) {
  const auto n = p.n;
  const R r = param(p).value() + q(n + 1);
  R sum, g = 1, c = 1, four = 1;
  R central = binom_nat(2 * n, n); // C(2(n-k), n-k)
  for (std::int64_t k = 0; k <= n - 1; ++k) {
    const std::int64_t j = n - k;
    sum += four / q(2 * j - 1) * g * central / c;
    g *= (r - q(k)) / q(k + 1);
    c *= q(n - k, k + 1);
    four *= q(4);
    central *= q(j, 2 * (2 * j - 1));
  }
  return {sum, n};
}

SideValue cb2_rhs(const EvalPoint &p) {
  const R m = param(p).value();
  const auto n = p.n;
  const R t = q(2) * m + q(3);
  const R v = pow2(2 * n) * (m + q(n + 1)) / ((m + q(1)) * t) * binom_gen(m, n) -
              binom_nat(2 * n, n) / t;
  return {v, 1};
}

SideValue thm41_lhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m1 = mp.value() + q(1);
  SymValue sum, h = harmonic_exact(mp.shifted(1));
  R inv_u = 1, e = 1; // 4^{-k} C(2k,k), C(m+1+k, k)
  for (std::int64_t k = 1; k <= p.n; ++k) {
    inv_u *= q(2 * k - 1, 2 * k);
    e *= (m1 + q(k)) / q(k);
    h += (m1 + q(k)).reciprocal();
    sum += (inv_u / (q(2 * k - 1) * e)) * h;
  }
  return {sum, p.n};
}

SideValue thm41_rhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m = mp.value();
  const auto n = p.n;
  const R t = q(2) * m + q(3);
  SymValue v = SymValue((q(4) * m + q(5)) / ((m + q(1)) * t * t)) + harmonic_exact(mp) / t;
  const R scale = binom_nat(2 * n, n) / (pow2(2 * n) * t * binom_gen(m + q(1), n));
  v -= scale * (harmonic_exact(mp.shifted(n + 1)) + SymValue(q(2) / t));
  return {v, 1};
}

// 4^{-k} C(2k,k) / (2k-1) summed against a weight and a harmonic number.
template <class Weight, class Harm>
SideValue second_family_sum(std::int64_t n, Weight weight, Harm harm) {
  R sum, inv_u = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    inv_u *= q(2 * k - 1, 2 * k);
    sum += inv_u / q(2 * k - 1) * weight(k) * harm(k);
  }
  return {sum, n};
}

SideValue c41a_lhs(const EvalPoint &p) {
  R h = 1; // H_{k+1} at k = 0
  return second_family_sum(
      p.n, [](std::int64_t k) { return q(1, k + 1); },
      [&h](std::int64_t k) { return h += q(1, k + 1); });
}

SideValue c41a_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(5, 9) - central_ratio(n).reciprocal() / q(3 * (n + 1)) * (harmonic(n + 1) + q(2, 3)),
          1};
}

SideValue c41b_lhs(const EvalPoint &p) {
  R h = q(3, 2); // H_{k+2} at k = 0
  return second_family_sum(
      p.n, [](std::int64_t k) { return q(1, (k + 1) * (k + 2)); },
      [&h](std::int64_t k) { return h += q(1, k + 2); });
}

SideValue c41b_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {q(19, 100) - central_ratio(n).reciprocal() / q(5 * (n + 1) * (n + 2)) *
                           (harmonic(n + 2) + q(2, 5)),
          1};
}

SideValue c42_lhs(const EvalPoint &p) {
  const auto n = p.n;
  R c = 1, h = harmonic(n);
  return second_family_sum(
      n,
      [&c, n](std::int64_t k) {
        c *= q(n + k, k);
        return c.reciprocal();
      },
      [&h, n](std::int64_t k) { return h += q(1, n + k); });
}

SideValue c42_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R t = q(2 * n + 1);
  return {(harmonic(n) + q(2) / t) / t - pow2(-2 * n) / t * (harmonic(2 * n) + q(2) / t), 1};
}

SideValue riordan_lhs(const EvalPoint &p) {
  R sum, inv_u = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += inv_u / q(2 * k - 1);
    inv_u *= q(2 * k + 1, 2 * k + 2);
  }
  return {sum, p.n + 1};
}

SideValue riordan_rhs(const EvalPoint &p) { return {-central_ratio(p.n).reciprocal(), 1}; }

// ---------------------------------------------------------------------------
// Order-2 family

SideValue thm51_lhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m = mp.value();
  SymValue sum, h = harmonic_exact(mp), h2 = harmonic2_exact(mp);
  R u = 1, b = 1;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += (u * b) * (h * h - h2);
    advance_central(u, k);
    b *= (m + q(k + 1)) / q(k + 1);
    const R inv = (m + q(k + 1)).reciprocal();
    h += inv;
    h2 += inv * inv;
  }
  return {sum, p.n + 1};
}

SideValue thm51_rhs(const EvalPoint &p) {
  const ExactParam &mp = param(p);
  const R m = mp.value();
  const auto n = p.n;
  const R t = q(2) * m + q(3);
  const R g = binom_gen(m, n) / binom_nat(2 * n, n);
  const SymValue h_m = harmonic_exact(mp), h2_m = harmonic2_exact(mp);
  const SymValue h_mn = harmonic_exact(mp.shifted(n)), h2_mn = harmonic2_exact(mp.shifted(n));

  const SymValue a =
      h_m * h_m - h2_m + pow2(2 * n + 1) * g * (h_mn + (m + q(n + 1)) * (h_mn * h_mn - h2_mn));
  const SymValue b = pow2(2 * n + 2) * (m + q(n + 1)) * g * h_mn + q(4) * h_m +
                     pow2(2 * n + 1) * q(2 * n - 1) * g * h_mn;
  const R c = pow2(2 * n) * q(2 * n - 1) * g + q(1);
  return {a / t - b / (t * t) + SymValue(q(8) * c / (t * t * t)), 1};
}

SideValue thm510_lhs(const EvalPoint &p) {
  R sum, u = 1, h, h2;
  for (std::int64_t k = 0; k <= p.n; ++k) {
    sum += u * (h * h - h2);
    advance_central(u, k);
    h += q(1, k + 1);
    h2 += q(1, (k + 1) * (k + 1));
  }
  return {sum, p.n + 1};
}

SideValue thm510_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R u = central_ratio(n);
  const R h = harmonic(n), h2 = harmonic2(n);
  const R v = q(2) * u / q(3) * (q(n + 1) * (h * h - h2) - q(2, 3) * q(2 * n - 1) * h) +
              q(8, 27) * (q(2 * n - 1) * u + q(1));
  return {v, 1};
}

// sum_{k=1..n} 4^k / (k^2 C(2k,k)), carried on the right sides of the
// squared and second-order harmonic sums.
R residual(std::int64_t n) {
  R sum, u = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    advance_central(u, k - 1);
    sum += u / q(k * k);
  }
  return sum;
}

SideValue hsq_lhs(const EvalPoint &p) {
  R sum, u = 1, h;
  for (std::int64_t k = 1; k <= p.n; ++k) {
    advance_central(u, k - 1);
    h += q(1, k);
    sum += u * h * h;
  }
  return {sum, p.n};
}

SideValue hsq_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R w = q(2) * central_ratio(n);
  const R h = harmonic(n);
  const R v = q(44, 27) +
              w / q(3) * (q(n + 1) * h * h - q(2 * (2 * n - 1), 3) * h + q(8 * n - 22, 9)) +
              residual(n) / q(3);
  return {v, n};
}

SideValue h2o_lhs(const EvalPoint &p) {
  R sum, u = 1, h2;
  for (std::int64_t k = 1; k <= p.n; ++k) {
    advance_central(u, k - 1);
    h2 += q(1, k * k);
    sum += u * h2;
  }
  return {sum, p.n};
}

SideValue h2o_rhs(const EvalPoint &p) {
  const auto n = p.n;
  const R w = q(2) * central_ratio(n);
  return {q(4, 3) + w / q(3) * (q(n + 1) * harmonic2(n) - q(2)) + residual(n) / q(3), n};
}

SideValue parker_lhs(const EvalPoint &p) {
  R sum, u = 1;
  for (std::int64_t j = 1; j <= p.n; ++j) {
    advance_central(u, j - 1);
    sum += u / q(j);
  }
  return {sum, p.n};
}

SideValue parker_rhs(const EvalPoint &p) {
  return {q(2) * (central_ratio(p.n) - q(1)), 1};
}

// H_N = H_{floor(N/2)}/2 + O_{ceil(N/2)}: both parity cases in one index.
SideValue haroddhar_lhs(const EvalPoint &p) {
  R h;
  for (std::int64_t k = 1; k <= p.n; ++k) {
    h += q(1, k);
  }
  return {h, p.n};
}

SideValue haroddhar_rhs(const EvalPoint &p) {
  const auto n = p.n;
  return {harmonic(n / 2) / q(2) + odd_harmonic((n + 1) / 2), 1};
}

} // namespace

Catalog make_catalog(const CatalogOptions &options) {
  Catalog c;
  const auto sym = Ring::SymValue;
  const auto rat = Ring::Rational;
  c.add(make("I-rockett", "sum 1/C(n,k) = (n+1)/2^{n+1} sum_{k=1}^{n+1} 2^k/k",
             "Rockett's reciprocal binomial sum", 0, rat, rockett_lhs, rockett_rhs));
  c.add(make("I-cb0", "sum 4^k/C(2k,k) = ((n+1)2^{2n+1}/C(2n,n) + 1)/3",
             "reciprocal central binomial sum (Catalan form)", 0, rat, cb0_lhs, cb0_rhs));
  c.add(make("I-cb-gen", "sum 4^k C(m+k,k)/C(2k,k), generalized central binomial sum",
             "generalized central binomial sum", 0, rat, cbgen_lhs, cbgen_rhs, any_m));
  c.add(make("I-thm21", "sum 4^k C(m+k,k)/C(2k,k) H_{k+m}",
             "first harmonic family, general m", 0, sym, thm21_lhs, thm21_rhs, any_m));
  c.add(make("I-har", "sum 4^k/C(2k,k) H_k", "first harmonic family at m = 0", 0, rat, har_lhs,
             har_rhs));
  c.add(make("I-har-mn", "sum 4^k/C(2k,k) C(n+k,k) H_{n+k}", "first harmonic family at m = n", 0,
             rat, harmn_lhs, harmn_rhs));
  c.add(make("I-ohar", "sum 4^k/C(2k,k) O_k", "Campbell; Batir-Sofo odd harmonic sum", 0, rat,
             ohar_lhs, ohar_rhs));
  c.add(make("I-evenhar", "sum 4^k/C(2k,k) H_{2k}", "even-index harmonic sum", 0, rat,
             evenhar_lhs, evenhar_rhs));
  c.add(make("I-o1", "sum (2k+1) O_{k+1}", "first harmonic family at m = 1/2", 0, rat, o1_lhs,
             o1_rhs));
  c.add(make("I-o2", "sum O_k = (n+1/2) O_n - n/2", "first harmonic family at m = -1/2", 0, rat,
             o2_lhs, o2_rhs));
  c.add(make("I-chujin", "sum (-1)^k C(n,k)/C(m+k,k) H_k = m/(n+m) (H_{m-1} - H_{n+m-1})",
             "Chu; Jin-Du alternating sum", 0, rat, chujin_lhs, chujin_rhs, positive_integer_m));
  c.add(make("I-cb2", "sum_{k<n} 4^k C(m+n+1,k) C(2(n-k),n-k) / ((2(n-k)-1) C(n,k))",
             "second family base identity", 0, rat, cb2_lhs, cb2_rhs, any_m));
  c.add(make("I-thm41", "sum 4^{-k}/(2k-1) C(2k,k)/C(m+k+1,k) H_{m+k+1}",
             "second harmonic family, general m", 1, sym, thm41_lhs, thm41_rhs, any_m));
  c.add(make("I-c41a", "sum 4^{-k}/(2k-1) C(2k,k)/(k+1) H_{k+1}",
             "second harmonic family at m = 0", 1, rat, c41a_lhs, c41a_rhs));
  c.add(make("I-c41b", "sum 4^{-k}/(2k-1) C(2k,k)/((k+1)(k+2)) H_{k+2}",
             "second harmonic family at m = 1", 1, rat, c41b_lhs, c41b_rhs));
  c.add(make("I-c42", "sum 4^{-k}/(2k-1) C(2k,k)/C(n+k,k) H_{n+k}",
             "second harmonic family at m = n-1", 1, rat, c42_lhs, c42_rhs));
  c.add(make("I-riordan", "sum 4^{-k}/(2k-1) C(2k,k) = -4^{-n} C(2n,n)", "Riordan", 0, rat,
             riordan_lhs, riordan_rhs));
  c.add(make("I-thm51", "sum 4^k C(m+k,k)/C(2k,k) (H_{k+m}^2 - H_{k+m}^(2))",
             "order-2 harmonic family, general m", 1, sym, thm51_lhs, thm51_rhs,
             options.thm51_half_integer ? std::function<bool(const ExactParam &)>(any_m)
                                        : std::function<bool(const ExactParam &)>(integer_m)));
  c.add(make("I-thm51-0", "sum 4^k/C(2k,k) (H_k^2 - H_k^(2))", "order-2 family at m = 0", 1,
             rat, thm510_lhs, thm510_rhs));
  c.add(make("I-hsq", "sum 4^k/C(2k,k) H_k^2 (with residual sum)", "squared harmonic sum", 1,
             rat, hsq_lhs, hsq_rhs));
  c.add(make("I-h2o", "sum 4^k/C(2k,k) H_k^(2) (with residual sum)",
             "second-order harmonic sum", 1, rat, h2o_lhs, h2o_rhs));
  c.add(make("I-parker", "sum 4^j/(j C(2j,j)) = 2(4^n/C(2n,n) - 1)", "Parker's formula", 1, rat,
             parker_lhs, parker_rhs));
  c.add(make("I-haroddhar", "H_N = H_{floor(N/2)}/2 + O_{ceil(N/2)}",
             "harmonic / odd harmonic relations", 0, rat, haroddhar_lhs, haroddhar_rhs));
  return c;
}

} // namespace hbe
