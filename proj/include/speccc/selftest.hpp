#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace speccc::selftest {

struct Options {
  unsigned seed = 1;
  int lasso_formulas = 200;
  int synthesis_specs = 60;
  int max_theta = 20;
  int max_bound = 4;
};

struct SuiteResult {
  std::string name;
  int checked = 0;
  int skipped = 0;  // inconclusive oracle or Unknown verdict
  std::vector<std::string> disagreements;

  bool passed() const { return disagreements.empty() && checked > 0; }
};

/// Automaton vs lasso evaluation on random formulas.
SuiteResult lasso_agreement(const Options& options);
/// Bounded synthesis vs exhaustive machine enumeration.
SuiteResult synthesis_agreement(const Options& options);
/// Time abstraction optimizer vs full grid search.
SuiteResult time_profile_agreement(const Options& options);

/// Runs every suite, prints one line each, returns true when all pass.
bool run_all(const Options& options, std::ostream& out);

}  // namespace speccc::selftest
