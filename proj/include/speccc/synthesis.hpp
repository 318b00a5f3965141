#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "speccc/automata.hpp"
#include "speccc/ltl.hpp"

namespace speccc::synthesis {

/// Which atoms the environment controls (inputs) and which the system
/// controls (outputs).
struct Signature {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Cube over a variable list: 0, 1, or -1 for don't care.
using Cube = std::vector<int>;

bool cube_matches(const Cube& cube, const std::vector<bool>& valuation);

struct MealyRule {
  Cube inputs;
  std::uint32_t next = 0;
  std::vector<bool> outputs;
};

/// System strategy. The rules of a state partition the input valuations.
struct MealyMachine {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::uint32_t initial = 0;
  std::vector<std::vector<MealyRule>> rules;

  std::size_t num_states() const { return rules.size(); }
  /// Next state and outputs; throws std::out_of_range when no rule matches.
  const MealyRule& step(std::uint32_t state, const std::vector<bool>& input) const;
};

struct MooreRule {
  Cube outputs;
  std::uint32_t next = 0;
};

/// Environment counter-strategy: each state commits an input valuation,
/// then moves on the system's output.
struct MooreMachine {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::uint32_t initial = 0;
  std::vector<std::vector<bool>> input_of_state;
  std::vector<std::vector<MooreRule>> rules;

  std::size_t num_states() const { return rules.size(); }
};

enum class Outcome { Realizable, Unrealizable, Unknown };

std::string to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  int k = -1;  // bound at which the verdict was reached; k_max for Unknown
  std::optional<MealyMachine> strategy;
  std::optional<MooreMachine> counter_strategy;
  std::string note;  // reason for Unknown
};

struct Options {
  int k_max = 6;
  std::size_t state_budget = 100000;
  std::size_t bdd_node_limit = 20'000'000;
  bool dual_check = true;
  /// Wall-clock budget in seconds, 0 for none. Exceeding it gives Unknown.
  double time_limit = 0;
};

/// Bounded synthesis for the conjunction of `spec`. Every atom of the spec
/// must be in the signature; signature atoms absent from the spec are
/// ignored. Realizable verdicts are certified with model_check and
/// Unrealizable ones with verify_counter_strategy before being returned.
Verdict check_realizability(const std::vector<ltl::Formula>& spec, const Signature& signature,
                            const Options& options = {});

/// True iff every behaviour of the machine satisfies the formula, decided by
/// emptiness of the product with the automaton of the negation.
bool model_check(const MealyMachine& machine, const ltl::Formula& formula,
                 std::size_t state_budget = 100000);

/// True iff no system behaviour against the counter-strategy satisfies the
/// formula.
bool verify_counter_strategy(const MooreMachine& machine, const ltl::Formula& formula,
                             std::size_t state_budget = 100000);

/// Product emptiness against a prebuilt automaton whose atoms are a subset
/// of the machine's inputs and outputs. True iff some run of the product is
/// accepting.
bool product_nonempty(const MealyMachine& machine, const automata::Nba& nba);
bool product_nonempty(const MooreMachine& machine, const automata::Nba& nba);

/// Merges behaviourally identical states (same rules up to successor
/// class) by partition refinement. Rules are sorted by input cube.
MealyMachine minimize(const MealyMachine& machine);

/// Text dump: a header, then one "state input-cube -> next outputs" line per
/// rule, with cubes and valuations written as strings over 0, 1 and -.
std::string dump_strategy(const MealyMachine& machine);
std::string dump_counter_strategy(const MooreMachine& machine);
std::string strategy_to_dot(const MealyMachine& machine);

}  // namespace speccc::synthesis
