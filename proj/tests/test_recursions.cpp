#include <doctest.h>

#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"
#include "hbe/recursions.hpp"
#include "oracles.hpp"

using namespace hbe;

namespace {

std::vector<Rational> rv(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("c_coeff") {
  CHECK(c_coeff(1, 1) == Rational(1));
  CHECK(c_coeff(2, 1) == Rational(4));
  CHECK(c_coeff(2, 2) == Rational(1));
  CHECK(c_coeff(3, 1) == Rational(9));
  for (std::int64_t d = 2; d <= 12; ++d) {
    CHECK(c_coeff(d, 1) == Rational(2) * binom_nat(d, 2) + Rational(d));
    CHECK(c_coeff(d, d) == Rational(1));
  }
  CHECK_THROWS_AS(c_coeff(0, 1), DomainError);
  CHECK_THROWS_AS(c_coeff(3, 0), DomainError);
  CHECK_THROWS_AS(c_coeff(3, 4), DomainError);
}

TEST_CASE("coefficient expansion of the summation-by-parts step") {
  for (std::int64_t d = 1; d <= 8; ++d) {
    for (std::int64_t k = 1; k <= 30; ++k) {
      const Rational lhs = Rational(2 * k + 1) * Rational(k).pow(d) -
                           Rational(2 * k - 1) * Rational(k - 1).pow(d);
      Rational rhs = Rational(2 * d + 2) * Rational(k).pow(d);
      for (std::int64_t j = 1; j <= d; ++j) {
        const Rational t = c_coeff(d, j) * Rational(k).pow(d - j);
        rhs += (j % 2 == 0) ? t : -t;
      }
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("U and V spot values") {
  CHECK(u_rec(1, 2) == Rational(22, 3));
  CHECK(u_rec(0, 1) == Rational(2));
  CHECK(u_rec(3, 1) == Rational(2));
  CHECK(v_rec(0, 2) == Rational(6));
  CHECK(v_rec(1, 1) == Rational(2));
  CHECK(v_rec(2, 1) == Rational(2));
  CHECK_THROWS_AS(u_rec(1, 0), DomainError);
  CHECK_THROWS_AS(v_rec(-1, 3), DomainError);
}

TEST_CASE("recursions equal independent direct summation, d <= 6, n <= 100") {
  for (long n = 1; n <= 100; ++n) {
    const auto u = u_table(6, n);
    const auto v = v_table(6, n);
    for (long d = 0; d <= 6; ++d) {
      INFO("d=" << d << " n=" << n);
      REQUIRE(u[d] == oracle::to_rational(oracle::U(d, n)));
      REQUIRE(v[d] == oracle::to_rational(oracle::V(d, n)));
    }
  }
  CHECK(u_rec(4, 37) == u_table(4, 37)[4]);
  CHECK(v_rec(5, 41) == v_direct(5, 41));
  CHECK(u_rec(6, 41) == u_direct(6, 41));
}

TEST_CASE("explicit small forms agree with the recursions, n <= 200") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const auto u = u_table(3, n);
    const auto v = v_table(2, n);
    for (std::int64_t d = 1; d <= 3; ++d) {
      REQUIRE(u_closed_small(d, n) == u[d]);
    }
    for (std::int64_t d = 1; d <= 2; ++d) {
      REQUIRE(v_closed_small(d, n) == v[d]);
    }
  }
  CHECK_THROWS_AS(u_closed_small(4, 3), DomainError);
  CHECK_THROWS_AS(v_closed_small(3, 3), DomainError);
}

TEST_CASE("structure normalizer") {
  CHECK(structure_normalizer(1) == Rational(15));
  CHECK(structure_normalizer(2) == Rational(105));
  CHECK(structure_normalizer(3) == Rational(945));
}

TEST_CASE("fit d = 1") {
  const auto fit = fit_structure(1);
  CHECK(fit.residual_ok);
  CHECK(fit.p == rv({1, 3}));
  CHECK(fit.q == rv({-1, 9}));
  CHECK(fit.c_const == Rational(2));
  CHECK(fit.n_factor == Rational(15));
}

TEST_CASE("fit d = 2 fixes the constant term of P") {
  const auto fit = fit_structure(2);
  CHECK(fit.residual_ok);
  CHECK(fit.p == rv({-1, 12, 15}));
  CHECK(fit.q == rv({-173, -18, 225}));
  CHECK(fit.c_const == Rational(346));
  CHECK(fit.n_factor == Rational(105));

  // The +1 variant of P misses already at n = 1.
  PolynomialFit plus_one = fit;
  plus_one.p = rv({1, 12, 15});
  CHECK(plus_one.evaluate(1) != v_rec(2, 1));
  CHECK(plus_one.evaluate(1) == Rational(226, 105));
  CHECK(fit.evaluate(1) == Rational(2));
}

TEST_CASE("fits stay exact beyond the validation range, d <= 6") {
  for (std::int64_t d = 1; d <= 6; ++d) {
    const auto fit = fit_structure(d);
    INFO("d=" << d << " " << fit.diagnostic);
    REQUIRE(fit.residual_ok);
    CHECK(fit.p.size() == static_cast<std::size_t>(d + 1));
    CHECK(fit.q.size() == static_cast<std::size_t>(d + 1));
    CHECK(fit.n_factor == structure_normalizer(d));
    for (std::int64_t n = 4 * d + 7; n <= 4 * d + 16; ++n) {
      REQUIRE(fit.evaluate(n) == v_rec(d, n));
    }
  }
  CHECK_THROWS_AS(fit_structure(0), DomainError);
}

TEST_CASE("U structure fit") {
  const auto fit = fit_u_structure(3);
  CHECK(fit.residual_ok);
  CHECK(fit.r == rv({-9, 3, 135, 105}));
  CHECK(fit.k_const == Rational(18));
  CHECK(fit.n_factor == Rational(945));
  CHECK(fit.minimal_denominator == Rational(315));
  for (std::int64_t d = 1; d <= 6; ++d) {
    const auto f = fit_u_structure(d);
    REQUIRE(f.residual_ok);
    for (std::int64_t n = 1; n <= 40; ++n) {
      REQUIRE(f.evaluate(n) == u_rec(d, n));
    }
  }
}

TEST_CASE("eval_poly") {
  CHECK(eval_poly(rv({1, 2, 3}), Rational(2)) == Rational(17));
  CHECK(eval_poly({}, Rational(5)) == Rational(0));
}
