#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qlag/permstats.hpp"

namespace qlag {

enum class CheckStatus { Pass, Fail, Note };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string lhs;
  std::string rhs;
};

struct VerifyOptions {
  int max_n = 0;  // 0: the suite's own default
  std::uint64_t seed = 42;
  int samples = 20;
  int cap = kDefaultCap;
};

/// Suite names accepted by run_suite, "all" included.
const std::vector<std::string>& suite_names();

/// Runs one identity suite. Results are sorted by check name. Notes record
/// observations that are not claims and never count as failures.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
std::string_view status_text(CheckStatus s);

/// Golden-file form: "case,lhs,rhs,equal".
void write_golden_csv(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace qlag
