#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "speccc/english.hpp"
#include "speccc/ltl.hpp"
#include "speccc/pipeline.hpp"
#include "speccc/selftest.hpp"

namespace fs = std::filesystem;
using namespace speccc;

namespace {

constexpr int kErrorExit = 3;

struct Flags {
  std::string input;
  std::string dict;
  std::string lexicon;
  std::string overrides;
  std::string part;
  std::string config;
  std::string signs;
  std::string order = "corpus";
  std::string format = "text";
  std::string out_dir;
  std::optional<int> bound;
  std::optional<int> k_max;
  std::optional<int> unit_time;
  double time_limit = 0;
  bool gcd_only = false;
  bool from_ltl = false;
  bool no_abstract = false;
  bool next_as_x = false;
  bool timings = false;
};

void add_pipeline_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("input", f.input, "requirements file (.req), or .ltl with --from-ltl")->required();
  cmd.add_option("--dict", f.dict, "antonym dictionary");
  cmd.add_option("--lexicon", f.lexicon, "lexicon extension file");
  cmd.add_option("--overrides", f.overrides, "partition override file (inputs:/outputs: lines)");
  cmd.add_option("--part", f.part, "partition file for --from-ltl input; applied as overrides");
  cmd.add_option("--config", f.config, "key=value run configuration; flags take precedence");
  cmd.add_option("--B", f.bound, "bound on the total arrival error")->check(CLI::NonNegativeNumber);
  cmd.add_option("--signs", f.signs, "nonneg, nonpos, or a file of \"Req-ID nonneg|nonpos\" lines");
  cmd.add_flag("--gcd-only", f.gcd_only, "reduce durations by their gcd only");
  cmd.add_option("--kmax", f.k_max, "largest bounded synthesis bound")->check(CLI::PositiveNumber);
  cmd.add_option("--unit-time", f.unit_time, "seconds per Next")->check(CLI::PositiveNumber);
  cmd.add_option("--time-limit", f.time_limit, "synthesis wall-clock budget in seconds, 0 for none");
  cmd.add_option("--out", f.out_dir, "directory for .ltl, .part, report and strategy files");
  cmd.add_option("--format", f.format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd.add_option("--order", f.order, "growth order of the core search")
      ->check(CLI::IsMember({"corpus", "size"}));
  cmd.add_flag("--from-ltl", f.from_ltl, "input is an .ltl file of guarantees");
  cmd.add_flag("--no-abstract", f.no_abstract, "skip time abstraction");
  cmd.add_flag("--next-as-x", f.next_as_x, "translate the subordinator \"next\" as X");
  cmd.add_flag("--timings", f.timings, "include per-stage timings in the report");
}

void apply_signs(corpus::RunConfig& config, const std::string& signs) {
  if (signs.empty()) return;
  if (signs == "nonneg") {
    config.sign_policy = corpus::SignPolicy::NonNegative;
  } else if (signs == "nonpos") {
    config.sign_policy = corpus::SignPolicy::NonPositive;
  } else {
    config.sign_policy = corpus::SignPolicy::PerRequirement;
    std::istringstream in(corpus::read_file(signs));
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      for (auto& c : line)
        if (c == ':' || c == '=') c = ' ';
      std::istringstream words(line);
      std::string id, sign;
      if (!(words >> id)) continue;
      if (!(words >> sign) || (sign != "nonneg" && sign != "nonpos"))
        throw corpus::CorpusError(corpus::ErrorKind::InvalidValue,
                                  signs + ":" + std::to_string(n) + ": expected \"ID nonneg|nonpos\"", n);
      config.requirement_signs[corpus::normalize_id(id)] = sign == "nonneg" ? 1 : -1;
    }
  }
}

pipeline::Inputs make_inputs(const Flags& f) {
  pipeline::Inputs in;
  if (!f.config.empty()) in.config = corpus::load_config(f.config);
  if (f.bound) in.config.delta_bound = *f.bound;
  if (f.k_max) in.config.k_max = *f.k_max;
  if (f.unit_time) in.config.unit_time = *f.unit_time;
  if (f.gcd_only) in.config.gcd_only = true;
  apply_signs(in.config, f.signs);
  corpus::validate(in.config);
  if (!f.dict.empty()) in.dictionary = corpus::load_antonym_dictionary(f.dict);
  if (!f.lexicon.empty()) in.lexicon.extend(corpus::read_file(f.lexicon));
  for (const auto* path : {&f.overrides, &f.part})
    if (!path->empty())
      for (const auto& [name, role] : io_partition::parse_partition_file(corpus::read_file(*path)))
        in.overrides[name] = role;
  in.abstract_time = !f.no_abstract;
  in.translation.next_as_x = f.next_as_x;
  in.synthesis.time_limit = f.time_limit;
  in.growth = f.order == "size" ? localizer::GrowthOrder::SizeAscending : localizer::GrowthOrder::Corpus;
  return in;
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string render(const pipeline::Report& report, const Flags& f) {
  if (f.format == "json") return pipeline::json_report(report, f.timings).dump(2) + "\n";
  return pipeline::text_report(report, f.timings);
}

void write_outputs(const pipeline::Report& report, const Flags& f, pipeline::Stage last) {
  if (f.out_dir.empty()) return;
  const fs::path dir(f.out_dir);
  fs::create_directories(dir);
  const std::string stem = fs::path(f.input).stem().string();
  auto file = [&](const std::string& suffix) { return dir / (stem + suffix); };
  write_atomically(file(".ltl"), pipeline::ltl_text(report.units));
  if (last == pipeline::Stage::Translate) return;
  if (report.profile && !report.profile->thetas.empty())
    write_atomically(file(".abstract.ltl"), pipeline::ltl_text(report.abstracted));
  if (report.partition) write_atomically(file(".part"), io_partition::format_partition(*report.partition));
  write_atomically(file(f.format == "json" ? ".report.json" : ".report.txt"), render(report, f));
  if (report.verdict && report.verdict->strategy) {
    write_atomically(file(".strategy.txt"), synthesis::dump_strategy(*report.verdict->strategy));
    write_atomically(file(".strategy.dot"), synthesis::strategy_to_dot(*report.verdict->strategy));
  }
  if (report.verdict && report.verdict->counter_strategy)
    write_atomically(file(".counter.txt"), synthesis::dump_counter_strategy(*report.verdict->counter_strategy));
  if (report.core) {
    std::string core = "culprit: " + report.core->culprit + "\ncore:";
    for (const auto& id : report.core->conflict_set) core += " " + id;
    core += "\n";
    for (const auto& s : report.suggestions)
      core += localizer::to_string(s.kind) + " " + s.target + "\n";
    write_atomically(file(".core.txt"), core);
  }
}

int run_stage(const Flags& f, pipeline::Stage last) {
  const auto inputs_base = make_inputs(f);
  pipeline::Report report;
  if (f.from_ltl) {
    report = pipeline::run_from_ltl(ltl::parse_ltl_file(corpus::read_file(f.input)), inputs_base, last);
  } else {
    auto inputs = inputs_base;
    inputs.requirements = corpus::load_requirements(f.input);
    report = pipeline::run(inputs, last);
  }
  write_outputs(report, f, last);
  if (last == pipeline::Stage::Translate && f.format == "text")
    std::cout << pipeline::ltl_text(report.units);
  else
    std::cout << render(report, f);
  return pipeline::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"speccc: consistency checking of structured English requirements"};
  app.require_subcommand(1);

  Flags flags;
  const std::vector<std::pair<std::string, pipeline::Stage>> stages{
      {"translate", pipeline::Stage::Translate}, {"abstract", pipeline::Stage::Abstract},
      {"partition", pipeline::Stage::Partition}, {"check", pipeline::Stage::Check},
      {"core", pipeline::Stage::Core}};
  const std::map<std::string, std::string> help{
      {"translate", "translate requirements to LTL"},
      {"abstract", "translate and choose a time abstraction"},
      {"partition", "translate, abstract and partition the variables"},
      {"check", "full pipeline with realizability check"},
      {"core", "full pipeline, localizing an unrealizable core"}};
  std::optional<pipeline::Stage> chosen;
  for (const auto& [name, stage] : stages) {
    auto* cmd = app.add_subcommand(name, help.at(name));
    add_pipeline_flags(*cmd, flags);
    cmd->callback([&chosen, stage = stage] { chosen = stage; });
  }

  selftest::Options self;
  bool run_self = false;
  auto* st = app.add_subcommand("selftest", "compare the engines against the reference oracles");
  st->add_option("--seed", self.seed, "random seed");
  st->add_option("--specs", self.synthesis_specs, "random specifications for the synthesis suite");
  st->callback([&run_self] { run_self = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kErrorExit;
  }

  try {
    if (run_self) return selftest::run_all(self, std::cout) ? 0 : 1;
    return run_stage(flags, *chosen);
  } catch (const translator::RequirementError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const corpus::CorpusError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
  } catch (const ltl::SyntaxError& e) {
    std::cerr << "error: " << flags.input << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kErrorExit;
}
