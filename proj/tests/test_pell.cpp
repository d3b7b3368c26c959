#include "doctest.h"

#include "dwb/pell.hpp"
#include "oracles.hpp"

using namespace dwb;

TEST_SUITE("pell") {

TEST_CASE("pairs for s = t, n = 3 and n = 0") {
  const Polynomial t = Polynomial::parse("t");
  const PellPair p3 = pell_pair(t, 3);
  CHECK(p3.f == Polynomial::parse("4t^3 - 3t"));
  CHECK(p3.g == Polynomial::parse("4t^2 - 1"));
  const PellPair p0 = pell_pair(t, 0);
  CHECK(p0.f == Polynomial(1));
  CHECK(p0.g.is_zero());
}

TEST_CASE("pairs agree with the binomial expansion") {
  for (const char* text : {"t", "2t", "t^2", "3t+1"}) {
    const Polynomial s = Polynomial::parse(text);
    for (long n = 0; n <= 12; ++n) {
      const auto [f, g] = oracle::pell_binomial(s, n);
      const PellPair p = pell_pair(s, n);
      CHECK(p.f == f);
      CHECK(p.g == g);
      const PellPair q = pell_pair(s, -n);
      CHECK(q.f == f);
      CHECK(q.g == -g);
    }
  }
}

TEST_CASE("divisibility law against brute divisibility of binomial pairs") {
  const Polynomial s = Polynomial::parse("t^2");
  std::vector<Polynomial> g(13);
  for (long n = 1; n <= 12; ++n) g[n] = oracle::pell_binomial(s, n).second;
  for (long l = 1; l <= 12; ++l) {
    for (long n = 1; n <= 12; ++n) {
      CHECK(divides(g[l], g[n]) == (n % l == 0));
      CHECK(check_divisibility_law(l, n, s).status == Status::pass);
    }
  }
}

TEST_CASE("degree law") {
  for (long n = 1; n <= 10; ++n) CHECK(check_degree_law(Polynomial::parse("3t+1"), n).status == Status::pass);
}

TEST_CASE("recognition inverts generation") {
  const Polynomial s = Polynomial::parse("2t");
  for (long n = -8; n <= 8; ++n) {
    const PellPair p = pell_pair(s, n);
    const auto idx = recognize_solution(-p.f, -p.g, s);
    REQUIRE(idx.has_value());
    CHECK(idx->n == n);
    CHECK(idx->sign == -1);
  }
  CHECK_THROWS_AS(recognize_solution(Polynomial(2), Polynomial(0), s), std::invalid_argument);
  CHECK_THROWS_AS(pell_pair(Polynomial(3), 2), std::invalid_argument);
}

TEST_CASE("eps powers modulo t - 1 and eps - 1") {
  for (long n = 0; n <= 10; ++n) {
    CHECK(wn_congruence(n).status == Status::pass);
    CHECK(eps_quotient(n).congruence.status == Status::pass);
  }
}

}  // TEST_SUITE
