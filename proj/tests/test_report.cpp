#include "doctest.h"

#include "dwb/report.hpp"

using namespace dwb;

TEST_SUITE("report") {

TEST_CASE("exit status follows failing checks only") {
  Report r;
  r.command = "x";
  r.checks = {{"b", Status::measured, ""}, {"a", Status::exhausted, ""}};
  CHECK(exit_code(r) == 0);
  r.checks.push_back({"c", Status::fail, "bad"});
  CHECK(exit_code(r) == 1);
  CHECK(to_json(r)["exit_status"] == 1);
}

TEST_CASE("checks are sorted and elapsed is optional") {
  Report r;
  r.command = "x";
  r.checks = {{"zeta", Status::pass, ""}, {"alpha", Status::pass, "1"}, {"alpha", Status::pass, "2"}};
  const json j = to_json(r);
  CHECK(j["checks"][0]["name"] == "alpha");
  CHECK(j["checks"][0]["details"] == "1");
  CHECK(j["checks"][2]["name"] == "zeta");
  CHECK_FALSE(j.contains("elapsed"));
  r.elapsed = 0.5;
  CHECK(to_json(r)["elapsed"] == 0.5);
  CHECK(render_text(r).find("[pass] zeta") != std::string::npos);
}

}  // TEST_SUITE
