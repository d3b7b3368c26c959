#include "dwb/report.hpp"

#include <algorithm>
#include <sstream>

namespace dwb {

int exit_code(const Report& r) { return all_pass(r.checks) ? 0 : 1; }

json to_json(const Check& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
}

namespace {

std::vector<Check> sorted_checks(const Report& r) {
  std::vector<Check> out = r.checks;
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

}  // namespace

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : sorted_checks(r)) checks.push_back(to_json(c));
  json out = {{"command", r.command},
              {"inputs", r.inputs},
              {"result", r.result},
              {"checks", checks},
              {"exit_status", exit_code(r)}};
  if (r.elapsed) out["elapsed"] = *r.elapsed;
  return out;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& [k, v] : r.inputs.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  os << "\n";
  if (!r.result.empty()) os << r.result.dump(2) << "\n";
  for (const auto& c : sorted_checks(r)) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    os << "\n";
  }
  if (r.elapsed) os << "elapsed " << *r.elapsed << " s\n";
  os << (exit_code(r) == 0 ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace dwb
