#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hbe/catalog.hpp"
#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"
#include "hbe/numeric.hpp"

using namespace hbe;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

bool close(double a, double b, double rel) { return relative_error(a, b) <= rel; }

} // namespace

TEST_CASE("digamma and trigamma special values") {
  CHECK(close(digamma(1.0), -kEulerGamma, 1e-14));
  CHECK(close(digamma(1.5) + kEulerGamma, 2.0 - 2.0 * kLn2, 1e-14));
  CHECK(close(digamma(0.5), -kEulerGamma - 2.0 * kLn2, 1e-14));
  CHECK(close(trigamma(1.0), kPi * kPi / 6.0, 1e-14));
  CHECK(close(trigamma(0.5), kPi * kPi / 2.0, 1e-14));
  CHECK(close(digamma(-0.5), -kEulerGamma - 2.0 * kLn2 + 2.0, 1e-13));
}

TEST_CASE("recurrences hold on random arguments") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(1e-3, 50.0), neg(-8.0, 0.0);
  for (int i = 0; i < 200; ++i) {
    double x = (i % 4 == 0) ? neg(rng) : pos(rng);
    if (std::abs(x - std::round(x)) < 1e-3) {
      x += 0.25;
    }
    const double scale = std::max(1.0, std::abs(digamma(x + 1.0)));
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-12 * scale * std::max(1.0, 1.0 / std::abs(x)));
    if (x > 0) {
      CHECK(close(trigamma(x) - trigamma(x + 1.0), 1.0 / (x * x), 1e-11));
    }
  }
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(digamma(0.0), PoleError);
  CHECK_THROWS_AS(digamma(-3.0), PoleError);
  CHECK_THROWS_AS(trigamma(-1.0), PoleError);
  CHECK_NOTHROW(digamma(-2.5));
}

TEST_CASE("real harmonic numbers match exact values") {
  for (std::int64_t n = 0; n <= 60; ++n) {
    CHECK(close(harmonic_num(static_cast<double>(n)), harmonic(n).to_double(), 1e-13));
    CHECK(close(harmonic2_num(static_cast<double>(n)), harmonic2(n).to_double(), 1e-13));
  }
  for (std::int64_t k = 0; k < 30; ++k) {
    const auto m = ExactParam::from_twice(2 * k + 1);
    CHECK(close(harmonic_num(m.to_double()), harmonic_exact(m).to_double(), 1e-13));
  }
}

TEST_CASE("binom_real") {
  CHECK(close(binom_real(2.5, 3), 231.0 / 16.0, 1e-13));
  CHECK(close(binom_real(10.0, 5), 3003.0, 1e-13));
  CHECK(binom_real(-1.25, 0) == 1.0);
  // C(m+k,k) for m in (-2,-1) is negative for k >= 1
  double direct = 1.0;
  for (std::int64_t k = 1; k <= 12; ++k) {
    direct *= (-1.3 + static_cast<double>(k)) / static_cast<double>(k);
    CHECK(close(binom_real(-1.3, k), direct, 1e-12));
  }
}

TEST_CASE("numeric verification at real m") {
  for (const auto &id : numeric_identities()) {
    for (double m : {-1.4, -0.73, -0.5, 0.0, 0.3, 2.5, 7.91}) {
      const auto r = verify_numeric(id, m, 9);
      INFO(id << " m=" << m << " err=" << r.rel_err);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("numeric and exact evaluations agree at integer m") {
  const auto exact = rhs_closed("I-thm21", {ExactParam::integer(4), 12}).value.to_double();
  const auto r = verify_numeric("I-thm21", 4.0, 12);
  CHECK(close(r.lhs, exact, 1e-12));
  CHECK(close(r.rhs, exact, 1e-12));

  const auto e51 = rhs_closed("I-thm51", {ExactParam::integer(3), 10}).value.to_double();
  CHECK(close(verify_numeric("I-thm51", 3.0, 10).rhs, e51, 1e-12));
}

TEST_CASE("numeric domain errors") {
  CHECK_THROWS_AS(verify_numeric("I-cb-gen", -1.0, 3), DomainError);
  CHECK_THROWS_AS(verify_numeric("I-thm21", -1.5, 3), DomainError);
  CHECK_THROWS_AS(verify_numeric("I-thm41", 0.5, 0), DomainError);
  CHECK_THROWS(verify_numeric("I-cb0", 0.5, 3));
}

TEST_CASE("random suite is seeded and passes") {
  const auto a = random_numeric_suite(42, 50);
  const auto b = random_numeric_suite(42, 50);
  REQUIRE(a.size() == 50 * numeric_identities().size());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].pass);
    CHECK(a[i].m > -1.45);
    CHECK(a[i].m < 10.0);
  }
}

TEST_CASE("derivative checks") {
  CHECK(parse_derivative_kind("harmonic") == DerivativeKind::Harmonic);
  for (double m : {0.0, 0.5, 1.7, 4.2}) {
    CHECK(derivative_check(DerivativeKind::Harmonic, m, 1e-5) < 1e-5);
    CHECK(derivative_check(DerivativeKind::Binomial, m, 1e-5) < 1e-5);
    CHECK(derivative_check(DerivativeKind::CentralSum, m, 1e-5) < 1e-5);
  }
}

TEST_CASE("residual sum") {
  CHECK(residual_sum(1).exact == Rational(2));
  CHECK(residual_sum(2).exact == Rational(8, 3));
  CHECK(close(residual_sum(2).numeric, 8.0 / 3.0, 1e-15));
  CHECK_THROWS_AS(residual_sum(0), DomainError);

  const auto big = residual_sum(10000, false);
  const double limit = kPi * kPi / 2.0;
  CHECK(big.numeric > 4.89);
  CHECK(big.numeric < 4.91);
  CHECK(big.numeric < limit);
  CHECK(big.numeric + big.tail_bound >= limit);
}

TEST_CASE("half-integer second-order harmonic gate") {
  CHECK(half_integer_order2_deviation() < 1e-12);
  CHECK(half_integer_order2_gate());
}
