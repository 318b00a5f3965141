#include <doctest.h>

#include "speccc/io_partition.hpp"

using namespace speccc;
using namespace speccc::io_partition;
using ltl::parse_formula;

namespace {

using Names = std::set<std::string>;

Partition of(const std::vector<std::pair<std::string, std::string>>& formulas) {
  std::vector<std::pair<std::string, ltl::Formula>> parsed;
  for (const auto& [id, text] : formulas) parsed.emplace_back(id, parse_formula(text));
  return partition_formulas(parsed);
}

}  // namespace

TEST_CASE("per-requirement classification") {
  auto r = partition_requirement(parse_formula(
      "G ((available_pulse_wave || available_arterial_line) && select_cuff -> trigger_corroboration)"));
  CHECK(r.inputs == Names{"available_pulse_wave", "available_arterial_line", "select_cuff"});
  CHECK(r.outputs == Names{"trigger_corroboration"});
  CHECK(r.rule.at("select_cuff") == Rule::Antecedent);

  r = partition_requirement(parse_formula("G p"));
  CHECK(r.inputs.empty());
  CHECK(r.outputs == Names{"p"});
  CHECK(r.rule.at("p") == Rule::Default);

  r = partition_requirement(parse_formula("G (p -> p)"));
  CHECK(r.outputs == Names{"p"});
  CHECK(r.rule.at("p") == Rule::BothSides);

  // A negated occurrence on one side does not force an output.
  r = partition_requirement(parse_formula("G (p -> !p)"));
  CHECK(r.inputs == Names{"p"});

  r = partition_requirement(parse_formula("G (b -> G (!press -> b W press))"));
  CHECK(r.inputs == Names{"press"});
  CHECK(r.outputs == Names{"b"});
  CHECK(r.rule.at("press") == Rule::Antecedent);

  r = partition_requirement(parse_formula("G (q U r)"));
  CHECK(r.inputs == Names{"r"});
  CHECK(r.rule.at("r") == Rule::ReleaseCondition);

  r = partition_requirement(parse_formula("G (p <-> q)"));
  CHECK(r.outputs == Names{"p", "q"});
}

TEST_CASE("unification") {
  auto p = of({{"Req-32.1", "G (available_pulse_wave && select_cuff -> trigger_corroboration)"},
               {"Req-13.3", "G (!corroborate_arterial_line && cuff -> select_cuff)"}});
  CHECK(p.unified_outputs.contains("select_cuff"));
  CHECK(p.provenance.at("select_cuff") == Rule::Conflict);
  REQUIRE(p.conflicts.size() == 1);
  CHECK(p.conflicts[0].variable == "select_cuff");
  CHECK(p.conflicts[0].input_ids == std::vector<std::string>{"Req-32.1"});
  CHECK(p.conflicts[0].output_ids == std::vector<std::string>{"Req-13.3"});
  CHECK(validate(p).empty());

  p = of({{"a", "G (i -> o)"}, {"b", "G (i -> F o)"}});
  CHECK(p.conflicts.empty());
  CHECK(p.unified_inputs == Names{"i"});

  p = of({{"a", "G p"}, {"b", "G q"}});
  CHECK(p.unified_inputs == Names{"p"});
  CHECK(p.unified_outputs == Names{"q"});
  CHECK(p.provenance.at("p") == Rule::Promotion);
  CHECK(p.warnings.size() == 1);
}

TEST_CASE("adding a requirement never turns an output into an input") {
  const std::vector<std::pair<std::string, std::string>> all{
      {"1", "G (a -> b)"}, {"2", "G (b -> c)"}, {"3", "G (c -> F a)"}, {"4", "G (d U a)"}, {"5", "G (e -> e)"}};
  for (std::size_t n = 1; n < all.size(); ++n) {
    const auto before = of({all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)});
    const auto after = of({all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n + 1)});
    for (const auto& o : before.unified_outputs)
      if (before.provenance.at(o) != Rule::Promotion) CHECK_FALSE(after.unified_inputs.contains(o));
  }
}

TEST_CASE("overrides and partition files") {
  auto p = of({{"Req-32.1", "G (available_pulse_wave && select_cuff -> trigger_corroboration)"}});
  const auto overrides = parse_partition_file("# user fixes\ninputs: trigger_corroboration\n");
  p = apply_overrides(p, overrides);
  CHECK(p.unified_inputs.contains("trigger_corroboration"));
  CHECK(p.provenance.at("trigger_corroboration") == Rule::Override);
  CHECK_THROWS_AS(apply_overrides(p, {{"nope", Role::Input}}), UnknownVariable);
  CHECK_THROWS_AS(parse_partition_file("inputs: a\noutputs: a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_file("maybe: a\n"), std::invalid_argument);

  const auto text = format_partition(p);
  const auto reparsed = parse_partition_file(text);
  CHECK(reparsed.size() == 3);
  CHECK(reparsed.at("select_cuff") == Role::Input);
  const auto sig = p.signature();
  CHECK(sig.outputs.empty());
  CHECK(sig.inputs.size() == 3);
}
