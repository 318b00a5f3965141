#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speccc/ltl.hpp"
#include "speccc/synthesis.hpp"

namespace speccc::oracles {

/// Ultimately periodic word prefix . loop^omega. Bit i of a valuation is
/// the value of atoms[i].
struct Lasso {
  std::vector<std::string> atoms;
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> loop;
};

/// Direct fixpoint evaluation of LTL on a lasso. Accepts every operator
/// except TimedNext. Atoms missing from lasso.atoms are false.
bool eval_ltl_on_lasso(const ltl::Formula& formula, const Lasso& lasso);

enum class BruteForceResult { Realizable, Unrealizable, Inconclusive };

struct BruteForceOptions {
  int max_states = 3;
  /// Machine sizes whose enumeration would exceed this count are skipped.
  std::uint64_t max_machines = 200000;
};

/// Exhaustive search over explicit Mealy machines (system) and Moore
/// machines (environment) up to max_states states, each certified by a
/// product emptiness check. Meant for at most three atoms.
BruteForceResult brute_force_realizability(const ltl::Formula& formula,
                                           const synthesis::Signature& signature,
                                           const BruteForceOptions& options = {});

/// The unique play of a Moore environment against a Mealy system, as a
/// lasso over inputs followed by outputs.
Lasso play(const synthesis::MooreMachine& environment, const synthesis::MealyMachine& system);

struct GridOptimum {
  int total_reduced = 0;
  int total_error = 0;
  int divisor = 0;
};

/// Full-grid search for the time abstraction optimum: every divisor in
/// 1..max+bound, every reduced length per duration, every combination
/// within the error bound. Signs: +1 error >= 0, -1 error <= 0, 0 exact.
GridOptimum brute_force_time_profile(const std::vector<int>& thetas, int bound,
                                     const std::vector<int>& signs);

}  // namespace speccc::oracles
