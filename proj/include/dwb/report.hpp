#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dwb/check.hpp"

namespace dwb {

using json = nlohmann::json;

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<Check> checks;
  std::optional<double> elapsed;  ///< seconds; only emitted when set
};

/// 0 iff no check failed.
int exit_code(const Report& r);

/// Checks sorted by name (stable), keys sorted.
json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

json to_json(const Check& c);

}  // namespace dwb
