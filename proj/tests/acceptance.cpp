// One line per acceptance criterion; exits 1 if any criterion fails.
#include <cstdio>
#include <cstring>
#include <string>

#include "dwb/acceptance.hpp"

int main(int argc, char** argv) {
  dwb::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      opts.profile = dwb::Profile::quick;
    } else if (std::strcmp(argv[i], "--serial") == 0) {
      opts.exec = dwb::Exec::serial;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--serial] [--seed N]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  for (int id = 1; id <= dwb::kCriterionCount; ++id) {
    const dwb::CriterionResult r = dwb::run_criterion(id, opts);
    std::string summary;
    for (const auto& c : r.checks) {
      if (!summary.empty()) summary += " | ";
      summary += c.name + " [" + dwb::to_string(c.status) + "]";
      if (c.status != dwb::Status::pass) summary += " " + c.details.substr(0, 160);
    }
    std::printf("%s %02d %-26s %7.2fs  %s\n", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                summary.c_str());
    std::fflush(stdout);
    failed += r.passed() ? 0 : 1;
  }
  std::printf("%d/%d criteria pass\n", dwb::kCriterionCount - failed, dwb::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
