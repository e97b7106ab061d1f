// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wmono::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  int budget = 200;  // decomposition-search budget, >= 100
  std::map<std::string, double> tolerances;
  std::string out_path;

  double tol(const std::string& name, double fallback) const;
  void validate() const;  // throws std::domain_error on budget < 100 etc.
};

/// Outcome of one randomized suite.  `worst` is the extreme value of
/// `worst_kind` seen across all checks (minimum margin for inequality
/// suites, maximum deviation for agreement suites).
struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  double worst = 0.0;
  std::string worst_kind;
};

/// lemma1, thm1, thm2, thm3, thm4, eq1, eq3 — the randomized corpora.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const RunConfig& config);

}  // namespace wmono::cli
