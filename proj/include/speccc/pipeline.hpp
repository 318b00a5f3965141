#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "speccc/corpus.hpp"
#include "speccc/io_partition.hpp"
#include "speccc/localizer.hpp"
#include "speccc/synthesis.hpp"
#include "speccc/time_abstraction.hpp"
#include "speccc/translator.hpp"

namespace speccc::pipeline {

enum class Stage { Translate, Abstract, Partition, Check, Core };

struct Inputs {
  std::vector<corpus::Requirement> requirements;
  corpus::AntonymDictionary dictionary;
  english::Lexicon lexicon;
  corpus::RunConfig config;
  std::map<std::string, io_partition::Role> overrides;
  bool abstract_time = true;
  translator::Options translation;
  synthesis::Options synthesis;
  localizer::GrowthOrder growth = localizer::GrowthOrder::Corpus;
};

struct Report {
  std::vector<corpus::Requirement> requirements;
  std::optional<translator::CorpusTranslation> translation;
  std::vector<translator::TranslationUnit> units;  // before time abstraction
  std::optional<time_abstraction::TimeProfile> profile;
  int unit_time = 1;
  std::vector<translator::TranslationUnit> abstracted;
  std::optional<io_partition::Partition> partition;
  std::optional<synthesis::Verdict> verdict;
  std::optional<localizer::Core> core;
  std::vector<localizer::Suggestion> suggestions;
  std::vector<std::pair<std::string, double>> timings;  // seconds per stage
  std::vector<std::string> warnings;
};

/// Runs the stages up to and including `last`. Localization runs after an
/// Unrealizable check, or always for Stage::Core.
Report run(const Inputs& inputs, Stage last);

/// Entry point for pre-translated formulas; a partition file is passed as
/// overrides.
Report run_from_ltl(const std::vector<ltl::LabeledFormula>& formulas, const Inputs& inputs, Stage last);

/// 0 realizable or no check, 1 unrealizable, 2 unknown.
int exit_code(const Report& report);

std::string ltl_text(const std::vector<translator::TranslationUnit>& units);
std::string text_report(const Report& report, bool with_timings = true);
/// Versioned JSON document; timings are omitted when `with_timings` is false.
nlohmann::json json_report(const Report& report, bool with_timings = true);

}  // namespace speccc::pipeline
