#include "speccc/pipeline.hpp"

#include <chrono>
#include <sstream>

namespace speccc::pipeline {

using nlohmann::json;

namespace {

class StageTimer {
public:
  StageTimer(Report& report, std::string name)
      : report_(report), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    report_.timings.emplace_back(name_, elapsed.count());
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

private:
  Report& report_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

synthesis::Options synthesis_options(const Inputs& inputs) {
  synthesis::Options o = inputs.synthesis;
  o.k_max = inputs.config.k_max;
  return o;
}

// Stages after translation, shared by both entry points.
void finish(Report& report, const Inputs& inputs, Stage last) {
  report.unit_time = inputs.config.unit_time;
  {
    StageTimer t(report, "abstract");
    if (inputs.abstract_time) {
      report.profile = time_abstraction::choose_profile(report.units, inputs.config);
      report.abstracted = time_abstraction::apply_profile(report.units, *report.profile);
    } else {
      report.abstracted = report.units;
    }
  }
  if (last == Stage::Abstract) return;
  {
    StageTimer t(report, "partition");
    std::vector<std::pair<std::string, ltl::Formula>> formulas;
    for (const auto& u : report.abstracted) formulas.emplace_back(u.id, u.formula);
    auto partition = io_partition::partition_formulas(formulas);
    partition = io_partition::apply_overrides(std::move(partition), inputs.overrides);
    report.partition = std::move(partition);
  }
  if (last == Stage::Partition) return;
  const auto options = synthesis_options(inputs);
  {
    StageTimer t(report, "check");
    std::vector<ltl::Formula> spec;
    for (const auto& u : report.abstracted) spec.push_back(u.formula);
    report.verdict = synthesis::check_realizability(spec, report.partition->signature(), options);
  }
  if (last != Stage::Core && report.verdict->outcome != synthesis::Outcome::Unrealizable) return;
  StageTimer t(report, "localize");
  try {
    report.core = localizer::locate_core(report.abstracted, *report.partition, options, inputs.growth);
    report.suggestions = localizer::suggest_fixes(*report.core, report.abstracted, *report.partition);
  } catch (const localizer::NoCoreFound& e) {
    report.warnings.push_back(std::string("no core: ") + e.what());
  }
}

}  // namespace

Report run(const Inputs& inputs, Stage last) {
  Report report;
  report.requirements = inputs.requirements;
  {
    StageTimer t(report, "translate");
    auto options = inputs.translation;
    options.unit_time = inputs.config.unit_time;
    const auto lexicon = translator::corpus_lexicon(inputs.lexicon, inputs.dictionary);
    report.translation =
        translator::translate_corpus(inputs.requirements, inputs.dictionary, lexicon, options);
    report.units = report.translation->units;
  }
  if (last == Stage::Translate) return report;
  finish(report, inputs, last);
  return report;
}

Report run_from_ltl(const std::vector<ltl::LabeledFormula>& formulas, const Inputs& inputs, Stage last) {
  Report report;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const auto& f = formulas[i];
    if (f.assumption)
      throw std::invalid_argument("assumptions are not supported; every formula is a guarantee");
    const std::string id = f.label.empty() ? "F" + std::to_string(i + 1) : f.label;
    report.units.push_back({id, f.formula, ltl::atoms_of(f.formula)});
  }
  if (last == Stage::Translate) return report;
  finish(report, inputs, last);
  return report;
}

int exit_code(const Report& report) {
  if (!report.verdict) return 0;
  switch (report.verdict->outcome) {
    case synthesis::Outcome::Realizable: return 0;
    case synthesis::Outcome::Unrealizable: return 1;
    case synthesis::Outcome::Unknown: return 2;
  }
  return 2;
}

std::string ltl_text(const std::vector<translator::TranslationUnit>& units) {
  std::vector<ltl::LabeledFormula> labeled;
  for (const auto& u : units) labeled.push_back({u.id, u.formula, false});
  return ltl::format_ltl_file(labeled);
}

namespace {

std::string sentence_of(const Report& report, const std::string& id) {
  for (const auto& r : report.requirements)
    if (r.id == id) return r.text;
  return {};
}

const translator::TranslationUnit* unit_of(const Report& report, const std::string& id) {
  for (const auto& u : report.abstracted)
    if (u.id == id) return &u;
  return nullptr;
}

}  // namespace

std::string text_report(const Report& report, bool with_timings) {
  std::ostringstream out;
  if (!report.requirements.empty()) out << "requirements: " << report.requirements.size() << "\n";
  out << "== formulas\n" << ltl_text(report.units);
  if (report.translation) {
    if (!report.translation->table.pairs.empty()) {
      out << "== antonyms\n";
      for (const auto& [pair, positive] : report.translation->table.positive_of)
        out << pair.first << " / " << pair.second << " (positive: " << positive << ")\n";
    }
    if (!report.translation->abbreviations.empty()) {
      out << "== abbreviations\n";
      for (const auto& [from, to] : report.translation->abbreviations) out << from << " -> " << to << "\n";
    }
  }
  if (report.profile) {
    out << "== time abstraction\n"
        << time_abstraction::format_report(*report.profile, report.unit_time);
    if (!report.profile->thetas.empty()) out << "== abstracted formulas\n" << ltl_text(report.abstracted);
  }
  if (report.partition) out << "== partition\n" << io_partition::format_report(*report.partition);
  if (report.verdict) {
    const auto& v = *report.verdict;
    out << "== verdict\n" << synthesis::to_string(v.outcome) << " (k=" << v.k << ")\n";
    if (v.strategy) out << "strategy states: " << v.strategy->num_states() << "\n";
    if (v.counter_strategy) out << "counter-strategy states: " << v.counter_strategy->num_states() << "\n";
    if (!v.note.empty()) out << "note: " << v.note << "\n";
  }
  if (report.core) {
    out << "== core\nculprit: " << report.core->culprit << "\nconflict set:\n";
    for (const auto& id : report.core->conflict_set) {
      out << "  " << id;
      if (auto s = sentence_of(report, id); !s.empty()) out << ": " << s;
      out << "\n";
      if (const auto* u = unit_of(report, id)) out << "    " << ltl::print_formula(u->formula) << "\n";
    }
    if (!report.core->relevance_filtered.empty()) {
      out << "relevance filtered:";
      for (const auto& id : report.core->relevance_filtered) out << " " << id;
      out << "\n";
    }
    out << "suggestions:\n";
    for (const auto& s : report.suggestions)
      out << "  " << localizer::to_string(s.kind) << " " << s.target << ": " << s.rationale << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  if (with_timings && !report.timings.empty()) {
    out << "== timings\n";
    for (const auto& [stage, seconds] : report.timings) out << stage << " " << seconds << " s\n";
  }
  return out.str();
}

json json_report(const Report& report, bool with_timings) {
  json j;
  j["schema_version"] = 1;
  j["requirements"] = json::array();
  for (const auto& r : report.requirements)
    j["requirements"].push_back({{"id", r.id}, {"text", r.text}, {"line", r.line}});
  j["formulas"] = json::array();
  for (std::size_t i = 0; i < report.units.size(); ++i) {
    json f{{"id", report.units[i].id}, {"formula", ltl::print_formula(report.units[i].formula)}};
    if (i < report.abstracted.size()) f["abstracted"] = ltl::print_formula(report.abstracted[i].formula);
    j["formulas"].push_back(f);
  }
  if (report.translation) {
    j["antonym_pairs"] = json::array();
    for (const auto& [pair, positive] : report.translation->table.positive_of)
      j["antonym_pairs"].push_back({{"words", {pair.first, pair.second}}, {"positive", positive}});
    j["abbreviations"] = report.translation->abbreviations;
  }
  if (report.profile) {
    const auto& p = *report.profile;
    j["time_profile"] = {{"divisor", p.divisor}, {"durations", p.thetas}, {"reduced", p.reduced},
                         {"errors", p.errors},   {"bound", p.bound},     {"total_error", p.total_error()}};
  }
  if (report.partition) {
    const auto& p = *report.partition;
    json provenance = json::object();
    for (const auto& [name, rule] : p.provenance) provenance[name] = io_partition::to_string(rule);
    json conflicts = json::array();
    for (const auto& c : p.conflicts)
      conflicts.push_back({{"variable", c.variable}, {"input_in", c.input_ids}, {"output_in", c.output_ids}});
    j["partition"] = {{"inputs", p.unified_inputs},
                      {"outputs", p.unified_outputs},
                      {"provenance", provenance},
                      {"conflicts", conflicts},
                      {"warnings", p.warnings}};
  }
  if (report.verdict) {
    const auto& v = *report.verdict;
    j["verdict"] = {{"outcome", synthesis::to_string(v.outcome)}, {"k", v.k}, {"note", v.note}};
    if (v.strategy) j["verdict"]["strategy_states"] = v.strategy->num_states();
    if (v.counter_strategy) j["verdict"]["counter_strategy_states"] = v.counter_strategy->num_states();
  }
  if (report.core) {
    j["core"] = {{"culprit", report.core->culprit},
                 {"conflict_set", report.core->conflict_set},
                 {"relevance_filtered", report.core->relevance_filtered},
                 {"k", report.core->k}};
    j["suggestions"] = json::array();
    for (const auto& s : report.suggestions)
      j["suggestions"].push_back(
          {{"kind", localizer::to_string(s.kind)}, {"target", s.target}, {"rationale", s.rationale}});
  }
  j["warnings"] = report.warnings;
  if (with_timings) {
    json t = json::object();
    for (const auto& [stage, seconds] : report.timings) t[stage] = seconds;
    j["timings"] = t;
  }
  return j;
}

}  // namespace speccc::pipeline
