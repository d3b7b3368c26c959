#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwb/check.hpp"
#include "dwb/exec.hpp"

namespace dwb {

enum class Profile { quick, full };

struct AcceptanceOptions {
  Profile profile = Profile::full;
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const { return all_pass(checks); }
};

constexpr int kCriterionCount = 13;

/// Criterion ids run from 1 to kCriterionCount. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace dwb
