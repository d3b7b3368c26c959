#pragma once

#include <string>
#include <vector>

namespace dwb {

/// Outcome of one named check. `measured` records a value without judging
/// it; `exhausted` marks a bounded search that ran out before deciding.
enum class Status { pass, fail, measured, exhausted };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string details;
};

inline Check make_check(std::string name, bool ok, std::string details = {}) {
  return {std::move(name), ok ? Status::pass : Status::fail, std::move(details)};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (c.status == Status::fail) return false;
  }
  return true;
}

}  // namespace dwb
