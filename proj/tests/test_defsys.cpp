#include <cstdlib>

#include "doctest.h"

#include "dwb/defsys.hpp"

using namespace dwb;

namespace {

std::string field(const Fields& f, const std::string& key) {
  for (const auto& [k, v] : f) {
    if (k == key) return v;
  }
  return {};
}

// |result| = |base|^|exp| by repeated multiplication.
bool power_oracle(long base, long exp, long result) {
  long long v = 1;
  for (long i = 0; i < std::labs(exp); ++i) v *= std::labs(base);
  return v == std::labs(result);
}

}  // namespace

TEST_SUITE("defsys") {

TEST_CASE("integers have exactly one witness") {
  const SingleFoldInt sys(50);
  for (long c = -6; c <= 6; ++c) {
    const WitnessReport r = sys.check(Polynomial(c));
    CHECK(r.verdict == Verdict::accepted);
    CHECK(r.fold_count == 1);
  }
  CHECK(singlefold_int(Polynomial(Rational(1, 2)), 50).verdict == Verdict::refuted_to_bound);
  CHECK(singlefold_int(Polynomial::parse("t^2+1"), 50).verdict == Verdict::refuted_to_bound);
}

TEST_CASE("exponentiation example 2^3 = 8") {
  const WitnessReport r = exp_system(2, 8, 3, 8);
  REQUIRE(r.verdict == Verdict::accepted);
  CHECK(r.fold_count == 1);
  CHECK(field(r.witnesses[0], "n") == "3");
}

TEST_CASE("exponentiation matches the power oracle on a small grid") {
  for (long e = -3; e <= 3; ++e) {
    const ExpSystem sys(e, 6);
    for (long b = -4; b <= 4; ++b) {
      if (b == 0) continue;
      for (long c = -70; c <= 70; ++c) {
        const bool want = power_oracle(b, e, c);
        CHECK_MESSAGE(sys.quick_accepts(b, c) == want, "b=", b, " e=", e, " c=", c);
        if (want) {
          const WitnessReport r = sys.check(b, c);
          CHECK(r.verdict == Verdict::accepted);
          CHECK(r.fold_count == 1);
        }
      }
    }
  }
  CHECK_THROWS_AS(exp_system(0, 1, 1, 4), std::invalid_argument);
}

TEST_CASE("odd-integer witnesses satisfy all seven relations") {
  for (long r = -7; r <= 7; r += 2) {
    const auto checks = odd_integer_relations(odd_integer_witness(r));
    CHECK(checks.size() == 7);
    for (const auto& c : checks) CHECK_MESSAGE(c.status == Status::pass, "r=", r, " ", c.name);
    CHECK(odd_integer_construct(r).verdict == Verdict::accepted);
  }
  CHECK_THROWS_AS(odd_integer_witness(4), std::invalid_argument);
  CHECK(odd_integer_check(Polynomial(4), 10).verdict == Verdict::refuted_to_bound);
  CHECK(odd_integer_check(Polynomial::parse("x^2+1"), 10).verdict == Verdict::refuted_to_bound);
}

TEST_CASE("non-negativity gadget accepts d >= 0 and the -1 anomaly") {
  for (long d = -6; d <= 6; ++d) {
    const WitnessReport r = nonneg_gadget(d, 8);
    const bool want = d >= 0 || d == -1;
    CHECK_MESSAGE((r.verdict == Verdict::accepted) == want, "d=", d);
  }
  bool measured = false;
  for (const auto& c : nonneg_gadget(-1, 8).checks) measured = measured || c.status == Status::measured;
  CHECK(measured);
}

TEST_CASE("constants system") {
  const WitnessReport a = constants_system(Polynomial(3), RingDescriptor::rationals(), 2);
  CHECK(a.verdict == Verdict::accepted);
  CHECK(a.checks.size() == 3);
  CHECK(constants_system(Polynomial::parse("t"), RingDescriptor::rationals(), 2).verdict == Verdict::refuted);
  CHECK(constants_system(Polynomial(Rational(1, 2)), RingDescriptor::localized({2}), 2).verdict ==
        Verdict::invalid);
}

TEST_CASE("combining conditions through a monic form without rational roots") {
  const Polynomial f = Polynomial::parse("t");
  const Polynomial g = Polynomial::parse("t-1");
  const Polynomial h = Polynomial::from_ints({1, 0, 1});
  CHECK(combine_and(f, g, h) == f * f + g * g);
  CHECK_THROWS_AS(combine_and(f, g, Polynomial::from_ints({-1, 0, 1})), std::invalid_argument);
}

}  // TEST_SUITE
