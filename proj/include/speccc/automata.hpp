#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "speccc/ltl.hpp"

namespace speccc::automata {

constexpr std::size_t kMaxAtoms = 64;

/// Conjunction of literals over an atom universe, as two bit masks.
struct Label {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  bool matches(std::uint64_t valuation) const {
    return (valuation & pos) == pos && (valuation & neg) == 0;
  }
  bool consistent() const { return (pos & neg) == 0; }
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Edge {
  Label label;
  std::uint32_t target;
};

/// Nondeterministic Büchi automaton with state-based acceptance. The
/// alphabet is the set of valuations of `atoms`; bit i of a valuation is
/// the truth value of atoms[i].
struct Nba {
  std::vector<std::string> atoms;
  std::uint32_t initial = 0;
  std::vector<std::vector<Edge>> edges;
  std::vector<bool> accepting;
  std::vector<std::string> state_names;

  std::size_t num_states() const { return edges.size(); }
  std::vector<std::uint32_t> successors(std::uint32_t state, std::uint64_t valuation) const;

  /// Acceptance of the lasso word prefix . loop^omega, by a product
  /// emptiness check. Used to cross-check against direct LTL evaluation.
  bool accepts_lasso(const std::vector<std::uint64_t>& prefix,
                     const std::vector<std::uint64_t>& loop) const;
};

class StateBudgetExceeded : public std::runtime_error {
public:
  explicit StateBudgetExceeded(std::size_t limit)
      : std::runtime_error("automaton construction exceeded its budget of " +
                           std::to_string(limit) + " states or branches"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

private:
  std::size_t limit_;
};

/// Tableau construction: states are sets of pending obligations, Until
/// obligations are tracked by generalized acceptance which is then
/// degeneralized with a level counter. `formula` must be in negation
/// normal form (see ltl::to_nnf). When `atoms` is empty the atoms of the
/// formula are used, sorted.
Nba ltl_to_nba(const ltl::Formula& formula, std::vector<std::string> atoms = {},
               std::size_t state_budget = 100000);

/// Language-preserving cleanup: drops states that cannot reach an
/// accepting cycle and clears acceptance on states outside every cycle.
/// Fewer accepting visits keeps the counters of the synthesis game low.
Nba simplify(const Nba& nba);

/// Automaton for the disjunction of the languages of `parts`, which must
/// share one atom universe.
Nba nba_union(const std::vector<Nba>& parts);

/// Index of `name` in atoms, or -1.
int atom_index(const std::vector<std::string>& atoms, const std::string& name);

/// Strongly connected components (Tarjan) of a directed graph given as
/// adjacency lists. Returns the component id of every vertex.
std::vector<std::uint32_t> scc_ids(const std::vector<std::vector<std::uint32_t>>& graph);

/// True when some vertex reachable from `start` lies on a cycle through an
/// accepting vertex.
bool buchi_nonempty(const std::vector<std::vector<std::uint32_t>>& graph,
                    const std::vector<bool>& accepting, std::uint32_t start);

}  // namespace speccc::automata
