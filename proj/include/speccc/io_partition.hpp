#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "speccc/ltl.hpp"
#include "speccc/synthesis.hpp"

namespace speccc::io_partition {

enum class Role { Input, Output };

/// Why a variable ended up where it is.
enum class Rule {
  Default,           // occurs only outside antecedents and release conditions
  Antecedent,        // left operand of an implication
  ReleaseCondition,  // right operand of U or W
  BothSides,         // positive on both sides of one such operator
  Conflict,          // input in one requirement, output in another
  Promotion,         // promoted because no input was left
  Override           // set by the user
};

std::string to_string(Rule rule);

struct RequirementPartition {
  std::set<std::string> inputs;
  std::set<std::string> outputs;
  std::map<std::string, Rule> rule;
};

struct Conflict {
  std::string variable;
  std::vector<std::string> input_ids;
  std::vector<std::string> output_ids;
};

struct Partition {
  std::vector<std::pair<std::string, RequirementPartition>> per_requirement;
  std::set<std::string> unified_inputs;
  std::set<std::string> unified_outputs;
  std::vector<Conflict> conflicts;
  std::map<std::string, Rule> provenance;
  std::vector<std::string> warnings;

  synthesis::Signature signature() const;
};

class UnknownVariable : public std::runtime_error {
public:
  explicit UnknownVariable(const std::string& name)
      : std::runtime_error("unknown variable " + name), name(name) {}
  std::string name;
};

RequirementPartition partition_requirement(const ltl::Formula& formula);

/// Conflicting variables become outputs. With no input left, the smallest
/// output is promoted and a warning recorded.
Partition unify(std::vector<std::pair<std::string, RequirementPartition>> per_requirement);

/// partition_requirement on each labelled formula, then unify.
Partition partition_formulas(const std::vector<std::pair<std::string, ltl::Formula>>& formulas);

/// "inputs: a b" / "outputs: x y" lines, '#' comments.
std::map<std::string, Role> parse_partition_file(std::string_view content);

Partition apply_overrides(Partition partition, const std::map<std::string, Role>& overrides);

/// Partition file text of the unified sets.
std::string format_partition(const Partition& partition);

/// Human-readable listing with provenance and conflicts.
std::string format_report(const Partition& partition);

/// Empty when the unified sets are disjoint and cover every variable of
/// the per-requirement results; otherwise a description of the violation.
std::string validate(const Partition& partition);

}  // namespace speccc::io_partition
