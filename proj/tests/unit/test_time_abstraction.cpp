#include <doctest.h>

#include "speccc/oracles.hpp"
#include "speccc/time_abstraction.hpp"

using namespace speccc;
using namespace speccc::time_abstraction;
using ltl::parse_formula;

namespace {

translator::TranslationUnit unit(std::string id, const std::string& text) {
  auto f = parse_formula(text);
  return {std::move(id), f, ltl::atoms_of(f)};
}

std::vector<translator::TranslationUnit> cara_timed() {
  return {unit("Req-08", "G (!air_ok_signal -> X[3] terminate_auto_control_mode)"),
          unit("Req-28", "G (X[180] !blood_pressure -> trigger_manual_mode)"),
          unit("Req-42", "G (run_auto_control_mode && !cuff -> X[60] sound_alarm)")};
}

std::vector<Sign> all(std::size_t n, Sign s) { return std::vector<Sign>(n, s); }

}  // namespace

TEST_CASE("collect durations") {
  CHECK(collect_durations(cara_timed()) == std::vector<int>{3, 60, 180});
  CHECK(collect_durations({unit("a", "G (p -> q)")}).empty());
  CHECK(collect_durations({unit("a", "G (p -> X[60] q)"), unit("b", "G (r -> X[60] q)")}) ==
        std::vector<int>{60});
}

TEST_CASE("gcd reduction") {
  auto p = gcd_reduce({3, 60, 180});
  CHECK(p.divisor == 3);
  CHECK(p.reduced == std::vector<int>{1, 20, 60});
  CHECK(p.errors == std::vector<int>{0, 0, 0});
  CHECK(validate(p).empty());
  CHECK(gcd_reduce({7}).reduced == std::vector<int>{1});
  p = gcd_reduce({4, 6});
  CHECK(p.divisor == 2);
  CHECK(p.reduced == std::vector<int>{2, 3});
}

TEST_CASE("optimizer examples") {
  auto p = optimize({3, 60, 180}, 5, all(3, Sign::NonNegative));
  CHECK(p.divisor == 60);
  CHECK(p.reduced == std::vector<int>{0, 1, 3});
  CHECK(p.errors == std::vector<int>{3, 0, 0});
  CHECK(validate(p).empty());

  p = optimize({3, 60, 180}, 0, all(3, Sign::NonNegative));
  CHECK(p.divisor == 3);
  CHECK(p.reduced == std::vector<int>{1, 20, 60});

  p = optimize({5}, 5, all(1, Sign::NonNegative));
  CHECK(p.divisor == 6);
  CHECK(p.reduced == std::vector<int>{0});
  CHECK(p.errors == std::vector<int>{5});

  p = optimize({5, 9}, 2, all(2, Sign::NonPositive));
  CHECK(validate(p).empty());
  for (int e : p.errors) CHECK(e <= 0);
}

TEST_CASE("optimizer matches the grid oracle on small duration sets") {
  for (int a = 1; a <= 14; ++a)
    for (int b = a + 1; b <= 15; ++b)
      for (int bound = 0; bound <= 4; ++bound)
        for (Sign s : {Sign::NonNegative, Sign::NonPositive}) {
          const std::vector<int> thetas{a, b};
          const auto p = optimize(thetas, bound, all(2, s));
          REQUIRE(validate(p).empty());
          const auto g = oracles::brute_force_time_profile(thetas, bound,
                                                           std::vector<int>(2, s == Sign::NonNegative ? 1 : -1));
          CHECK(p.total_reduced() == g.total_reduced);
          CHECK(p.total_error() == g.total_error);
          CHECK(p.divisor == g.divisor);
        }
}

TEST_CASE("zero bound reproduces the gcd total") {
  for (const auto& thetas : std::vector<std::vector<int>>{{3, 60, 180}, {4, 6}, {5, 10, 35}, {7}}) {
    const auto p = optimize(thetas, 0, all(thetas.size(), Sign::NonNegative));
    CHECK(p.total_reduced() == gcd_reduce(thetas).total_reduced());
  }
}

TEST_CASE("per-requirement signs") {
  corpus::RunConfig config;
  config.sign_policy = corpus::SignPolicy::PerRequirement;
  config.requirement_signs = {{"Req-28", -1}};
  auto units = cara_timed();
  units.push_back(unit("Req-99", "G (p -> X[180] q)"));
  const auto signs = signs_for({3, 60, 180}, units, config);
  CHECK(signs == std::vector<Sign>{Sign::NonNegative, Sign::NonNegative, Sign::Zero});
  config.requirement_signs = {{"Req-28", -1}, {"Req-99", -1}};
  CHECK(signs_for({3, 60, 180}, units, config)[2] == Sign::NonPositive);
}

TEST_CASE("apply profile") {
  const auto profile = optimize({3, 60, 180}, 5, all(3, Sign::NonNegative));
  const auto out = apply_profile(cara_timed(), profile);
  CHECK(out[0].formula == parse_formula("G (!air_ok_signal -> terminate_auto_control_mode)"));
  CHECK(out[1].formula == parse_formula("G (X[3] !blood_pressure -> trigger_manual_mode)"));
  CHECK(out[2].formula == parse_formula("G (run_auto_control_mode && !cuff -> X sound_alarm)"));
  CHECK_THROWS_AS(apply_profile(parse_formula("X[7] p"), profile), UncoveredDuration);

  corpus::RunConfig config;
  CHECK(choose_profile({unit("a", "G p")}, config).thetas.empty());
  config.gcd_only = true;
  CHECK(choose_profile(cara_timed(), config).divisor == 3);
  const auto report = format_report(profile, 1);
  CHECK(report.find("1 abstract tick = 60 seconds") != std::string::npos);
}
