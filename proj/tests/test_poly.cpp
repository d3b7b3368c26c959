#include <random>

#include "doctest.h"

#include "dwb/poly.hpp"
#include "oracles.hpp"

using namespace dwb;

namespace {

Polynomial random_poly(std::mt19937_64& rng, long deg, long height) {
  std::vector<Rational> c;
  for (long i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % (2 * height + 1)) - height);
  return Polynomial(c);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("parse and print round trip") {
  CHECK(Polynomial::parse("3 - 2*t^2 + t").to_string("t") == "3 + t - 2*t^2");
  CHECK(Polynomial::parse("1/2x") == Polynomial(Rational(1, 2)) * Polynomial::variable());
  CHECK(Polynomial::parse("T^3-T").to_string() == "-T + T^3");
  CHECK(Polynomial::parse("0").is_zero());
  CHECK_THROWS_AS(Polynomial::parse("t+("), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_poly(rng, 5, 9);
    CHECK(Polynomial::parse(f.to_string()) == f);
  }
}

TEST_CASE("division identity and gcd") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Polynomial f = random_poly(rng, 6, 5);
    Polynomial g = random_poly(rng, 3, 5);
    if (g.is_zero()) continue;
    const DivMod qr = divmod(f, g);
    CHECK(qr.quotient * g + qr.remainder == f);
    CHECK(degree_less(qr.remainder.degree(), g.degree()));
    const Polynomial h = random_poly(rng, 2, 3);
    if (h.is_zero()) continue;
    const Polynomial d = gcd(f * h, g * h);
    CHECK(divides(h, d));
    CHECK(divides(d, f * h));
  }
}

TEST_CASE("resultant against the Sylvester determinant") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Polynomial f = random_poly(rng, 1 + static_cast<long>(rng() % 4), 6);
    const Polynomial g = random_poly(rng, 1 + static_cast<long>(rng() % 4), 6);
    if (f.degree_or_zero() == 0 || g.degree_or_zero() == 0) continue;
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("real root counts for products of linear factors") {
  // (T - 1)(T + 2)(2T - 1)(T^2 + 1)
  const Polynomial f = Polynomial::from_ints({-1, 1}) * Polynomial::from_ints({2, 1}) *
                       Polynomial::from_ints({-1, 2}) * Polynomial::from_ints({1, 0, 1});
  CHECK(sturm_real_roots(f) == 3);
  CHECK(sturm_real_roots(f, 0, 2) == 2);
  const auto roots = rational_roots(f);
  CHECK(roots.size() == 3);
  for (const auto& r : roots) {
    CHECK(f.eval(r) == 0);
    CHECK(abs(r) <= cauchy_bound(f));
  }
}

TEST_CASE("squarefree part removes repeated factors") {
  const Polynomial a = Polynomial::from_ints({-1, 1});
  const Polynomial b = Polynomial::from_ints({1, 0, 1});
  const Polynomial f = a * a * a * b;
  CHECK(squarefree_part(f).monic() == (a * b).monic());
  long total = 0;
  for (const auto& [g, e] : squarefree_decomposition(f)) total += static_cast<long>(g.degree_or_zero()) * e;
  CHECK(total == 5);
}

TEST_CASE("small factorization") {
  CHECK(is_irreducible_small(Polynomial::from_ints({2, 0, 1})));
  CHECK_FALSE(is_irreducible_small(Polynomial::from_ints({-4, 0, 1})));
}

}  // TEST_SUITE
