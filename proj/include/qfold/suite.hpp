#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qfold/report.hpp"

namespace qf {

struct SuiteOptions {
  int jobs = 1;
  bool verbose = false;
};

// One named group of the full verification battery.
struct SuiteItem {
  std::string id;
  Report report;
  double seconds = 0;
};

struct SuiteResult {
  std::vector<SuiteItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.report.all_pass()) return false;
    return true;
  }
};

// Runs every verification group end to end; ids are stable and the per-group
// checks are exact identities.
SuiteResult run_full_suite(const SuiteOptions& opt);
SuiteResult run_suite_group(const std::string& id, const SuiteOptions& opt);
std::vector<std::string> suite_group_ids();

// Deterministic worker pool: fn(k) for k = 0..n-1, results joined in order.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

} // namespace qf
