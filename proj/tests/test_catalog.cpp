#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "hbe/catalog.hpp"
#include "hbe/combinatorics.hpp"
#include "hbe/errors.hpp"
#include "oracles.hpp"

using namespace hbe;

namespace {

EvalPoint at(std::int64_t n) { return {std::nullopt, n}; }
EvalPoint at(std::int64_t twice_m, std::int64_t n) { return {ExactParam::from_twice(twice_m), n}; }

SymValue lhs(const char *id, const EvalPoint &p) { return lhs_direct(id, p).value; }
SymValue rhs(const char *id, const EvalPoint &p) { return rhs_closed(id, p).value; }

using oracle::binom;
using oracle::central;
using oracle::gbinom;
using oracle::H;
using oracle::H2;
using oracle::O;
using oracle::pow4;

// Left sides written literally: every term recomputed from factorials and
// fresh harmonic sums. Integer m only.
const std::map<std::string, std::function<mpq_class(long, long)>> &literal_lhs() {
  static const std::map<std::string, std::function<mpq_class(long, long)>> table = {
      {"I-rockett",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += 1 / binom(n, k);
         return s;
       }},
      {"I-cb0",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k);
         return s;
       }},
      {"I-cb-gen",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * binom(m + k, k);
         return s;
       }},
      {"I-thm21",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * binom(m + k, k) * H(k + m);
         return s;
       }},
      {"I-har",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * H(k);
         return s;
       }},
      {"I-har-mn",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * binom(n + k, k) * H(n + k);
         return s;
       }},
      {"I-ohar",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * O(k);
         return s;
       }},
      {"I-evenhar",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * H(2 * k);
         return s;
       }},
      {"I-o1",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += (2 * k + 1) * O(k + 1);
         return s;
       }},
      {"I-o2",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += O(k);
         return s;
       }},
      {"I-chujin",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) {
           const mpq_class t = binom(n, k) / binom(m + k, k) * H(k);
           s += (k % 2 == 0) ? t : mpq_class(-t);
         }
         return s;
       }},
      {"I-cb2",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n - 1; ++k)
           s += pow4(k) / (2 * (n - k) - 1) * binom(m + n + 1, k) * binom(2 * (n - k), n - k) /
                binom(n, k);
         return s;
       }},
      {"I-thm41",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k)
           s += 1 / central(k) / (2 * k - 1) / binom(m + k + 1, k) * H(m + k + 1);
         return s;
       }},
      {"I-c41a",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k) s += 1 / central(k) / (2 * k - 1) / (k + 1) * H(k + 1);
         return s;
       }},
      {"I-c41b",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k)
           s += 1 / central(k) / (2 * k - 1) / ((k + 1) * (k + 2)) * H(k + 2);
         return s;
       }},
      {"I-c42",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k) s += 1 / central(k) / (2 * k - 1) / binom(n + k, k) * H(n + k);
         return s;
       }},
      {"I-riordan",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += 1 / central(k) / (2 * k - 1);
         return s;
       }},
      {"I-thm51",
       [](long m, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k)
           s += central(k) * binom(m + k, k) * (H(k + m) * H(k + m) - H2(k + m));
         return s;
       }},
      {"I-thm51-0",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 0; k <= n; ++k) s += central(k) * (H(k) * H(k) - H2(k));
         return s;
       }},
      {"I-hsq",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k) s += central(k) * H(k) * H(k);
         return s;
       }},
      {"I-h2o",
       [](long, long n) {
         mpq_class s = 0;
         for (long k = 1; k <= n; ++k) s += central(k) * H2(k);
         return s;
       }},
      {"I-parker",
       [](long, long n) {
         mpq_class s = 0;
         for (long j = 1; j <= n; ++j) s += central(j) / j;
         return s;
       }},
      {"I-haroddhar", [](long, long n) { return H(n); }},
  };
  return table;
}

} // namespace

TEST_CASE("registry contents") {
  const auto reg = registry();
  CHECK(reg.size() == 23);
  std::set<std::string> ids;
  for (const auto &d : reg) {
    ids.insert(d.id);
    CHECK(!d.source.empty());
  }
  CHECK(ids.size() == reg.size());
  CHECK(lookup("I-cb0").ring == Ring::Rational);
  CHECK(lookup("I-thm21").ring == Ring::SymValue);
  CHECK(lookup("I-thm21").requires_m);
  CHECK_FALSE(lookup("I-har").requires_m);
  CHECK_THROWS_AS(lookup("I-unknown"), DomainError);
}

TEST_CASE("lhs_direct / rhs_closed spot values") {
  CHECK(lhs("I-cb0", at(2)) == SymValue(Rational(17, 3)));
  CHECK(lhs_direct("I-cb0", at(2)).terms == 3);
  CHECK(lhs("I-har", at(1)) == SymValue(2));
  CHECK(lhs("I-riordan", at(0)) == SymValue(-1));
  CHECK(rhs("I-cb0", at(2)) == SymValue(Rational(17, 3)));
  CHECK(rhs("I-evenhar", at(1)) == SymValue(3));
  CHECK(rhs("I-o2", at(2)) == SymValue(Rational(7, 3)));
}

TEST_CASE("verify_point spot values") {
  auto r = verify_point("I-thm21", at(0, 1));
  CHECK(r.equal);
  CHECK(r.lhs == SymValue(2));

  r = verify_point("I-c41a", at(1));
  CHECK(r.equal);
  CHECK(r.lhs == SymValue(Rational(3, 8)));

  r = verify_point("I-chujin", at(2, 1));
  CHECK(r.equal);
  CHECK(r.lhs == SymValue(Rational(-1, 2)));

  CHECK(verify_point("I-riordan", at(1)).lhs == SymValue(Rational(-1, 2)));
  CHECK(verify_point("I-thm51-0", at(1)).lhs == SymValue(0));
  CHECK(verify_point("I-hsq", at(1)).rhs == SymValue(2));
  CHECK(verify_point("I-parker", at(1)).rhs == SymValue(2));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(lhs_direct("I-chujin", at(0, 3)), DomainError);    // m = 0
  CHECK_THROWS_AS(lhs_direct("I-chujin", at(3, 3)), DomainError);    // m = 3/2
  CHECK_THROWS_AS(lhs_direct("I-thm21", at(3)), DomainError);        // m missing
  CHECK_THROWS_AS(lhs_direct("I-cb0", at(0, 3)), DomainError);       // m given
  CHECK_THROWS_AS(rhs_closed("I-thm41", at(2, 0)), DomainError);     // n < n_min
  CHECK_THROWS_AS(verify_point("I-thm51", at(1, 2)), DomainError);   // half-integer m off by default
  const Catalog half = make_catalog({.thm51_half_integer = true});
  CHECK(verify_point("I-thm51", at(1, 2), half).equal);
}

TEST_CASE("lhs_direct matches literal term-by-term evaluation") {
  for (const auto &[id, literal] : literal_lhs()) {
    const auto &d = lookup(id);
    const long n_hi = 18;
    for (long n = d.n_min; n <= n_hi; ++n) {
      if (d.requires_m) {
        for (long m = 0; m <= 5; ++m) {
          const auto mp = ExactParam::integer(m);
          if (!d.admits(mp)) {
            continue;
          }
          INFO(id << " m=" << m << " n=" << n);
          REQUIRE(lhs_direct(id, {mp, n}).value == SymValue(oracle::to_rational(literal(m, n))));
        }
      } else {
        INFO(id << " n=" << n);
        REQUIRE(lhs_direct(id, at(n)).value == SymValue(oracle::to_rational(literal(0, n))));
      }
    }
  }
  CHECK(literal_lhs().size() == registry().size());
}

TEST_CASE("every identity holds exactly at small points") {
  const auto ms = exact_param_grid(-1, 12);
  for (const auto &d : registry()) {
    for (const auto &r : verify_range(d.id, 30, ms)) {
      INFO(r.identity << " n=" << r.point.n << " lhs=" << r.lhs << " rhs=" << r.rhs);
      REQUIRE(r.equal);
    }
  }
}

TEST_CASE("consistency chain: even harmonic = half harmonic + odd harmonic") {
  for (std::int64_t n = 0; n <= 200; ++n) {
    REQUIRE(rhs("I-evenhar", at(n)) ==
            rhs("I-har", at(n)) / Rational(2) + rhs("I-ohar", at(n)));
  }
}

TEST_CASE("specializations of the first harmonic family") {
  for (std::int64_t n = 0; n <= 200; ++n) {
    REQUIRE(rhs("I-thm21", at(0, n)) == rhs("I-har", at(n)));
    REQUIRE(rhs("I-thm21", at(2 * n, n)) == rhs("I-har-mn", at(n)));
  }
}

TEST_CASE("half-integer separation reproduces the odd harmonic sums") {
  for (std::int64_t n = 0; n <= 60; ++n) {
    const SymValue l = lhs("I-thm21", at(1, n));
    const SymValue r = rhs("I-thm21", at(1, n));
    REQUIRE(l == r);
    REQUIRE_FALSE(l.coeff(SymValue::Ln2).is_zero());
    REQUIRE(l.coeff(SymValue::Ln2) == Rational(-2 * (n + 1) * (n + 1)));
    REQUIRE(l.rational_part() == Rational(2) * lhs("I-o1", at(n)).rational_part());

    const SymValue lm = lhs("I-thm21", at(-1, n));
    REQUIRE(lm == rhs("I-thm21", at(-1, n)));
    REQUIRE(lm.rational_part() == Rational(2) * lhs("I-o2", at(n)).rational_part());
  }
}

TEST_CASE("catalan and binomial forms of the central sum agree") {
  for (std::int64_t n = 0; n <= 100; ++n) {
    const Rational binomial_form =
        (Rational(n + 1) * pow2(2 * n + 1) / binom_nat(2 * n, n) + Rational(1)) / Rational(3);
    REQUIRE(rhs("I-cb0", at(n)) == SymValue(binomial_form));
  }
}

TEST_CASE("verify_range is deterministic across thread counts") {
  const std::vector<ExactParam> ms = {ExactParam::from_twice(5), ExactParam::from_twice(-1),
                                      ExactParam::integer(3), ExactParam::from_twice(5)};
  const auto one = verify_range("I-thm21", 25, ms, default_catalog(), 1);
  const auto many = verify_range("I-thm21", 25, ms, default_catalog(), 4);
  REQUIRE(one.size() == 3 * 26);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].point == many[i].point);
    CHECK(one[i].lhs == many[i].lhs);
    CHECK(one[i].rhs == many[i].rhs);
  }
  // sorted by (m, n)
  CHECK(one.front().point.m->twice() == -1);
  CHECK(one.back().point.m->twice() == 6);
  CHECK(one.back().point.n == 25);
}

TEST_CASE("m_set is ignored for identities without m") {
  const auto reports = verify_range("I-cb0", 10, exact_param_grid(-1, 4));
  CHECK(reports.size() == 11);
  CHECK_FALSE(reports.front().point.m.has_value());
}

TEST_CASE("closed forms do a bounded number of summed terms") {
  CHECK(rhs_closed("I-cb0", at(500)).terms == 1);
  CHECK(lhs_direct("I-cb0", at(500)).terms == 501);
}
