#include <random>
#include <set>

#include "doctest.h"

#include "dwb/parcheck.hpp"
#include "oracles.hpp"

using namespace dwb;

namespace {

Polynomial from_longs(const std::vector<long>& c) {
  std::vector<Rational> q(c.begin(), c.end());
  return Polynomial(q);
}

}  // namespace

TEST_SUITE("parcheck") {

TEST_CASE("enumeration examples") {
  CHECK(theta(1).is_zero());
  CHECK(theta(2) == Polynomial(-1));
  CHECK(theta(7) == Polynomial::variable());
  CHECK(theta_inverse(Polynomial::parse("T + 1")) == 28);
  CHECK_THROWS_AS(theta(0), std::invalid_argument);
  CHECK_THROWS_AS(theta_inverse(Polynomial::parse("1/2 T")), std::invalid_argument);
}

TEST_CASE("enumeration matches the documented decoding and is injective") {
  std::set<std::string> seen;
  for (long n = 1; n <= 5000; ++n) {
    const Polynomial p = theta(n);
    CHECK(p == from_longs(oracle::theta_coefficients(n)));
    CHECK(theta_inverse(p) == n);
    CHECK(seen.insert(p.to_string()).second);
  }
  // Every polynomial of degree <= 2 with coefficients in [-2, 2] has an index.
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) {
        const Polynomial p = from_longs({a, b, c});
        CHECK(theta(theta_inverse(p)) == p);
      }
    }
  }
  const Integer big("123456789012345678901234567890");
  CHECK(theta_inverse(theta(big)) == big);
}

TEST_CASE("Chebyshev Y from the binomial expansion") {
  for (long n = 0; n <= 10; ++n) {
    const auto [f, g] = oracle::pell_binomial(Polynomial::variable(), n);
    CHECK(chebyshev_Y(n).g == g);
    CHECK(chebyshev_Y(n).f == f);
  }
}

TEST_CASE("positivity against sampled values") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::vector<long> c(1 + rng() % 5);
    for (auto& v : c) v = static_cast<long>(rng() % 11) - 5;
    const Polynomial F = from_longs(c);
    if (oracle::grid_finds_negative(F, 6, 4)) CHECK_FALSE(pos_check(F));
    const Polynomial sq = F * F + Polynomial(static_cast<long>(rng() % 3));
    CHECK(pos_check(sq));
  }
  CHECK(pos_check(Polynomial::parse("T^2 - 2T + 1")));
  CHECK_FALSE(pos_check(Polynomial::parse("T^2 - 2T + 1 - 1/1000")));
  CHECK_FALSE(pos_check(Polynomial::parse("T^3")));
}

TEST_CASE("five squares") {
  const Polynomial F = Polynomial::parse("7 + T^2");
  const FiveSquaresResult r = five_squares_search(F, 3, Exec::serial);
  REQUIRE(r.found);
  CHECK(r.g == 1);
  Polynomial sum;
  for (const auto& part : r.parts) sum += part * part;
  CHECK(sum == Polynomial(Rational(r.g * r.g)) * F);
  CHECK(five_squares_verify(1, F, r.parts));
  const FiveSquaresResult par = five_squares_search(F, 3, Exec::parallel);
  CHECK(par.count == r.count);
  CHECK(par.g == r.g);
  CHECK_FALSE(five_squares_search(Polynomial::parse("-1 + T^2"), 3).found);
}

TEST_CASE("tuples for small indices are accepted and pin the polynomial down") {
  for (long n = 1; n <= 40; ++n) {
    const ParTuple t = par_find(n);
    const ParVerdict v = par_eval(t);
    CHECK_MESSAGE(v.accepted, "n=", n);
    CHECK(reconstruct_check(theta(n), t).accepted);
    CHECK_FALSE(reconstruct_check(theta(n) + Polynomial(1), t).accepted);
    const PerturbationSummary s = perturbation_sweep(t, 9);
    CHECK(s.tried > 0);
    CHECK(s.rejected == s.tried);
  }
}

TEST_CASE("tuple for P = T") {
  const ParTuple t = par_find(7);
  CHECK(t.d == 1);
  CHECK(t.c == 2);
  CHECK(t.v == theta(7).eval(Rational(2 * t.b + 2 * t.c + t.d)));
  ParTuple wrong = t;
  wrong.v += 1;
  CHECK_FALSE(par_eval(wrong).accepted);
  wrong = t;
  wrong.c += 1;
  CHECK_FALSE(par_eval(wrong).accepted);
}

}  // TEST_SUITE
