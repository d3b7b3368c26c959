#include <set>

#include "doctest.h"

#include "dwb/cyclo.hpp"
#include "dwb/kernels.hpp"
#include "oracles.hpp"

using namespace dwb;

namespace {

// Phi_n mod T^prec from the reference division.
Polynomial reference_series(long n, std::size_t prec) {
  return oracle::to_poly(oracle::cyclotomic(n)).truncate(prec);
}

long brute_order(const Integer& x, const Integer& n) {
  Integer v = mod(x, n);
  long k = 1;
  while (v != 1) {
    v = mod(v * x, n);
    ++k;
  }
  return k;
}

}  // namespace

TEST_SUITE("cyclo") {

TEST_CASE("cyclotomics match the reference division") {
  const auto table = cyclotomic_table(200);
  for (long n = 1; n <= 200; ++n) {
    const Polynomial ref = oracle::to_poly(oracle::cyclotomic(n));
    CHECK(cyclotomic(n) == ref);
    CHECK(table[n] == ref);
  }
  CHECK(cyclotomic(12).to_string() == "1 - T^2 + T^4");
}

TEST_CASE("truncated series") {
  for (long n : {2L, 6L, 20L, 105L, 210L}) {
    CHECK(cyclotomic_series(n, 30) == reference_series(n, 30));
  }
}

TEST_CASE("special-form decomposition") {
  for (long n = 2; n <= 3000; ++n) {
    const auto want = oracle::special_split(n);
    const auto got = special_form(n);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->p == want->first);
      CHECK(got->m == want->second);
      CHECK(got->n == n);
    }
  }
  CHECK_THROWS_AS(make_special(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_special(9, 2), std::invalid_argument);
}

TEST_CASE("indices congruent to 1 + s T^d") {
  CHECK(find_special_congruent(1, -1, 1) == std::vector<long>{6});
  CHECK(find_special_congruent(2, -1, 1) == std::vector<long>{20});
  CHECK(find_special_congruent(1, 1, 1) == std::vector<long>{2});
  for (long d = 1; d <= 4; ++d) {
    for (int s : {-1, 1}) {
      const auto found = find_special_congruent(d, s, 4);
      CHECK(found.size() == 4);
      Polynomial target = Polynomial(1) + Polynomial::monomial(s, d);
      for (long n : found) {
        CHECK(special_form(n).has_value());
        CHECK_MESSAGE(reference_series(n, 2 * d) == target, "d=", d, " s=", s, " n=", n);
      }
    }
  }
  const auto avoided = find_special_congruent(1, 1, 3, {2, 3});
  CHECK(avoided == std::vector<long>{5, 7, 11});
}

TEST_CASE("forweak products reproduce F modulo T^d") {
  for (const char* text : {"1 + 2T - T^3", "-1 + T", "1 - 3T + T^2", "1 + T^2"}) {
    const Polynomial F = Polynomial::parse(text);
    for (long d = 1; d <= 4; ++d) {
      const ForweakResult r = forweak_approx(F, d);
      CHECK(in_special_set(r.product));
      std::set<long> seen;
      Polynomial M = Polynomial(r.product.sign);
      for (const auto& idx : r.product.indices) {
        CHECK(seen.insert(idx.n).second);
        M = (M * reference_series(idx.n, d)).truncate(d);
      }
      CHECK_MESSAGE(M == F.truncate(d), "F=", text, " d=", d);
      for (const auto& c : r.checks) CHECK(c.status == Status::pass);
    }
  }
  CHECK_THROWS_AS(forweak_approx(Polynomial::parse("2 + T"), 3), std::invalid_argument);
}

TEST_CASE("approximation point for (3,2) and (5,1)") {
  const ApproxPoint pt = approx_point({make_special(3, 2), make_special(5, 1)});
  CHECK(pt.c == 26);
  REQUIRE(pt.records.size() == 2);
  for (const auto& r : pt.records) {
    Integer q = 1;
    for (long i = 0; i <= euler_phi(r.index.m); ++i) q *= r.index.p;
    CHECK(brute_order(pt.c, q) == r.index.m);
    CHECK(r.measured == Valuation(1));
    const Rational value = reference_series(r.index.n, 64).eval(Rational(pt.c));
    CHECK(ord_p(value, r.index.p) == r.measured);
  }
  CHECK_THROWS_AS(approx_point({make_special(3, 2), make_special(7, 3)}), std::invalid_argument);
}

TEST_CASE("values at 1") {
  for (const auto& c : ap1_checks(60, 13)) CHECK(c.status == Status::pass);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long q = p; q <= 200; q *= p) CHECK(oracle::value_at_one(oracle::cyclotomic(q)) == p);
  }
}

TEST_CASE("resultant table and the reported violations") {
  const auto table = cyclotomic_resultant_table(24, Exec::serial);
  for (long m = 1; m <= 12; ++m) {
    for (long r = 1; r <= 12; ++r) {
      if (r == m) continue;
      CHECK(table[m][r] == oracle::sylvester_resultant(cyclotomic(m), cyclotomic(r)));
    }
  }
  for (const auto& v : nondivisibility_violations(table, 24, 7)) {
    CHECK(v.m % v.p != 0);
    CHECK(v.r != v.m);
    CHECK(mpz_divisible_ui_p(Rational(abs(v.res)).get_num().get_mpz_t(), v.p) != 0);
    CHECK(v.res == oracle::sylvester_resultant(cyclotomic(v.m), cyclotomic(v.r)));
    CHECK_FALSE((v.r_is_m_pa && v.m_divides_pa1));
  }
}

TEST_CASE("norm probe for 21 = 7*3") {
  const PdividesProbe probe = pdivides_probe(make_special(7, 3));
  CHECK(probe.norm == abs(oracle::sylvester_resultant(cyclotomic(3), cyclotomic(21))));
  CHECK(probe.norm == 49);
  CHECK(probe.norm_exponent == 2);
  CHECK(probe.target == 2);
}

TEST_CASE("shadow of the product for (3,2) and (5,1)") {
  for (const auto& c : alpha_shadow_check({make_special(3, 2), make_special(5, 1)})) {
    if (c.status != Status::measured) CHECK_MESSAGE(c.status == Status::pass, c.name, ": ", c.details);
  }
}

}  // TEST_SUITE
