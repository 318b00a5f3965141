#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "speccc/io_partition.hpp"
#include "speccc/synthesis.hpp"
#include "speccc/translator.hpp"

namespace speccc::localizer {

struct Core {
  std::string culprit;
  std::vector<std::string> conflict_set;        // corpus order
  std::vector<std::string> relevance_filtered;  // share no proposition with the culprit
  int k = -1;                                   // bound of the conflict set's verdict
};

enum class SuggestionKind { FlipToInput, FlipToOutput, EditRequirement };

std::string to_string(SuggestionKind kind);

struct Suggestion {
  SuggestionKind kind;
  std::string target;  // variable for flips, requirement id for edits
  std::string rationale;
};

class NoCoreFound : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GrowthOrder { Corpus, SizeAscending };

/// Grows the specification one requirement at a time until it turns
/// unrealizable, then shrinks by single deletions to a 1-minimal set.
/// Unknown verdicts keep the tested member.
Core locate_core(const std::vector<translator::TranslationUnit>& units,
                 const io_partition::Partition& partition, const synthesis::Options& options,
                 GrowthOrder order = GrowthOrder::Corpus);

/// Flip suggestions for heuristically classified variables of the core
/// (conflict rule: to input, promotion: to output); an edit of the culprit
/// when there are none.
std::vector<Suggestion> suggest_fixes(const Core& core,
                                      const std::vector<translator::TranslationUnit>& units,
                                      const io_partition::Partition& partition);

/// The override that applies a flip suggestion.
std::map<std::string, io_partition::Role> as_override(const Suggestion& suggestion);

}  // namespace speccc::localizer
