#include "doctest.h"

#include "dwb/kernels.hpp"

using namespace dwb;

TEST_SUITE("kernels") {

TEST_CASE("hilbert sweep: parallel equals serial, no mismatches") {
  const HilbertSweep s = hilbert_sweep(6, {2, 3, 5}, Exec::serial);
  const HilbertSweep p = hilbert_sweep(6, {2, 3, 5}, Exec::parallel);
  CHECK(s.cases == p.cases);
  CHECK(s.cases == 12 * 12 * 4);
  CHECK(s.mismatches == 0);
  CHECK(p.mismatches == 0);
}

TEST_CASE("exponent grid: parallel equals serial") {
  const ExpGrid s = exp_grid_sweep(5, 3, 200, 6, Exec::serial);
  const ExpGrid p = exp_grid_sweep(5, 3, 200, 6, Exec::parallel);
  CHECK(s.cells == p.cells);
  CHECK(s.mismatches.size() == 0);
  REQUIRE(s.accepted.size() == p.accepted.size());
  for (std::size_t i = 0; i < s.accepted.size(); ++i) {
    CHECK(s.accepted[i].base == p.accepted[i].base);
    CHECK(s.accepted[i].exponent == p.accepted[i].exponent);
    CHECK(s.accepted[i].result == p.accepted[i].result);
  }
}

TEST_CASE("resultant table: parallel equals serial") {
  CHECK(cyclotomic_resultant_table(20, Exec::serial) == cyclotomic_resultant_table(20, Exec::parallel));
}

TEST_CASE("round trips") {
  CHECK(theta_roundtrip_failures(3000, Exec::parallel).empty());
  CHECK(theta_roundtrip_failures(3000, Exec::serial).empty());
  CHECK(four_squares_failures(3000, Exec::parallel).empty());
}

}  // TEST_SUITE
