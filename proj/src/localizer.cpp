#include "speccc/localizer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace speccc::localizer {

using synthesis::Outcome;
using translator::TranslationUnit;

std::string to_string(SuggestionKind kind) {
  switch (kind) {
    case SuggestionKind::FlipToInput: return "flip_to_input";
    case SuggestionKind::FlipToOutput: return "flip_to_output";
    case SuggestionKind::EditRequirement: return "edit_requirement";
  }
  return "?";
}

namespace {

synthesis::Verdict check(const std::vector<const TranslationUnit*>& members,
                         const synthesis::Signature& signature, const synthesis::Options& options) {
  std::vector<ltl::Formula> spec;
  for (const auto* u : members) spec.push_back(u->formula);
  return synthesis::check_realizability(spec, signature, options);
}

bool shares_proposition(const TranslationUnit& a, const TranslationUnit& b) {
  return std::any_of(a.propositions.begin(), a.propositions.end(),
                     [&](const std::string& p) { return b.propositions.contains(p); });
}

}  // namespace

Core locate_core(const std::vector<TranslationUnit>& units, const io_partition::Partition& partition,
                 const synthesis::Options& options, GrowthOrder order) {
  const auto signature = partition.signature();
  std::vector<const TranslationUnit*> sequence;
  for (const auto& u : units) sequence.push_back(&u);
  if (order == GrowthOrder::SizeAscending)
    std::stable_sort(sequence.begin(), sequence.end(), [](const auto* a, const auto* b) {
      return ltl::formula_size(a->formula) < ltl::formula_size(b->formula);
    });

  std::vector<const TranslationUnit*> grown;
  const TranslationUnit* culprit = nullptr;
  synthesis::Verdict verdict;
  for (const auto* u : sequence) {
    grown.push_back(u);
    verdict = check(grown, signature, options);
    if (verdict.outcome == Outcome::Unrealizable) {
      culprit = u;
      break;
    }
  }
  if (!culprit)
    throw NoCoreFound(verdict.outcome == Outcome::Realizable
                          ? "the specification is realizable"
                          : "no unrealizable prefix found within the bound");

  Core core;
  core.culprit = culprit->id;
  core.k = verdict.k;
  std::vector<const TranslationUnit*> members;
  std::vector<const TranslationUnit*> filtered;
  for (const auto* u : grown)
    (u == culprit || shares_proposition(*u, *culprit) ? members : filtered).push_back(u);
  if (!filtered.empty()) {
    const auto v = check(members, signature, options);
    if (v.outcome == Outcome::Unrealizable) {
      core.k = v.k;
      for (const auto* u : filtered) core.relevance_filtered.push_back(u->id);
    } else {
      members = grown;  // the disjoint formulas were needed after all
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] == culprit) continue;
      auto without = members;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      const auto v = check(without, signature, options);
      if (v.outcome == Outcome::Unrealizable) {
        members = std::move(without);
        core.k = v.k;
        changed = true;
        --i;
      }
    }
  }
  // Report in corpus order.
  std::set<const TranslationUnit*> in_core(members.begin(), members.end());
  for (const auto& u : units)
    if (in_core.contains(&u)) core.conflict_set.push_back(u.id);
  return core;
}

std::vector<Suggestion> suggest_fixes(const Core& core, const std::vector<TranslationUnit>& units,
                                      const io_partition::Partition& partition) {
  std::set<std::string> variables;
  for (const auto& u : units)
    if (std::find(core.conflict_set.begin(), core.conflict_set.end(), u.id) != core.conflict_set.end())
      variables.insert(u.propositions.begin(), u.propositions.end());
  std::vector<Suggestion> out;
  for (const auto& v : variables) {
    auto it = partition.provenance.find(v);
    if (it == partition.provenance.end()) continue;
    if (it->second == io_partition::Rule::Conflict && partition.unified_outputs.contains(v))
      out.push_back({SuggestionKind::FlipToInput, v,
                     v + " is read and written by different requirements and was made an output"});
    else if (it->second == io_partition::Rule::Promotion && partition.unified_inputs.contains(v))
      out.push_back({SuggestionKind::FlipToOutput, v,
                     v + " was promoted to input only because no input was found"});
  }
  if (out.empty())
    out.push_back({SuggestionKind::EditRequirement, core.culprit,
                   "no heuristically classified variable in the core; modify the requirements"});
  return out;
}

std::map<std::string, io_partition::Role> as_override(const Suggestion& s) {
  switch (s.kind) {
    case SuggestionKind::FlipToInput: return {{s.target, io_partition::Role::Input}};
    case SuggestionKind::FlipToOutput: return {{s.target, io_partition::Role::Output}};
    case SuggestionKind::EditRequirement: return {};
  }
  return {};
}

}  // namespace speccc::localizer
