#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace otc {

struct CheckResult {
  std::string id;      // criterion tag, e.g. "C1"; empty for auxiliary checks
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  int workers = 0;  // 0 = hardware concurrency
};

// Suites exposed by the CLI (`verify <suite>`); each check corresponds to an
// acceptance criterion, see README.
SuiteResult verify_paper_example(const VerifyOptions& opts = {});
SuiteResult verify_pfaffian_identities(const VerifyOptions& opts = {});
SuiteResult verify_newform_props(const VerifyOptions& opts = {});
SuiteResult verify_theorem_smalld(const VerifyOptions& opts = {});
SuiteResult verify_order_axioms(const VerifyOptions& opts = {});

const std::vector<std::string>& verify_suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});
std::vector<SuiteResult> verify_all(const VerifyOptions& opts = {});

}  // namespace otc
