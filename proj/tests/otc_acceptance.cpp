// Acceptance suite: runs every criterion and prints one pass/fail line per
// criterion.  Exit status 0 iff all criteria pass.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "otc/verify.hpp"

int main(int argc, char** argv) {
  otc::VerifyOptions opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
    if (arg == "--workers" && i + 1 < argc) opts.workers = std::atoi(argv[++i]);
  }
  if (opts.workers == 0) {
    if (const char* env = std::getenv("OTC_WORKERS"))
      opts.workers = std::atoi(env);
  }

  std::vector<otc::CheckResult> criteria;
  std::vector<otc::CheckResult> extras;
  for (const auto& suite : otc::verify_all(opts)) {
    for (const auto& c : suite.checks)
      (c.id.empty() ? extras : criteria).push_back(c);
  }
  std::sort(criteria.begin(), criteria.end(),
            [](const otc::CheckResult& a, const otc::CheckResult& b) {
              return a.id.size() != b.id.size() ? a.id.size() < b.id.size()
                                                : a.id < b.id;
            });

  int failures = 0;
  for (const auto& c : criteria) {
    if (!c.pass) ++failures;
    std::printf("[%s] %s %s (%.2fs): %s\n", c.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.name.c_str(), c.seconds, c.detail.c_str());
  }
  for (const auto& c : extras) {
    if (!c.pass) ++failures;
    std::printf("[%s] -- %s (%.2fs): %s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.seconds, c.detail.c_str());
  }
  std::printf("%d/%zu checks passed\n",
              static_cast<int>(criteria.size() + extras.size()) - failures,
              criteria.size() + extras.size());
  return failures == 0 ? 0 : 1;
}
