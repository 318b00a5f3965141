#include <doctest.h>

#include "speccc/synthesis.hpp"

using namespace speccc;
using namespace speccc::ltl;
using namespace speccc::synthesis;

namespace {

Verdict check(const std::string& text, std::vector<std::string> in, std::vector<std::string> out) {
  return check_realizability({parse_formula(text)}, Signature{std::move(in), std::move(out)});
}

}  // namespace

TEST_CASE("copy machine is realizable") {
  const auto v = check("G (out <-> in)", {"in"}, {"out"});
  REQUIRE(v.outcome == Outcome::Realizable);
  CHECK(v.k == 0);
  REQUIRE(v.strategy);
  CHECK(model_check(*v.strategy, parse_formula("G (out <-> in)")));
  CHECK(v.strategy->step(0, {true}).outputs == std::vector<bool>{true});
  CHECK(v.strategy->step(0, {false}).outputs == std::vector<bool>{false});
}

TEST_CASE("clairvoyance is unrealizable") {
  for (const char* f : {"G (out <-> X in)", "G (out <-> X X in)", "G (out <-> X[3] in)"}) {
    const auto v = check(f, {"in"}, {"out"});
    CHECK_MESSAGE(v.outcome == Outcome::Unrealizable, f);
    if (v.counter_strategy) CHECK(verify_counter_strategy(*v.counter_strategy, parse_formula(f)));
  }
}

TEST_CASE("response is realizable") {
  const auto v = check("G (req -> F grant)", {"req"}, {"grant"});
  REQUIRE(v.outcome == Outcome::Realizable);
  CHECK(model_check(*v.strategy, parse_formula("G (req -> F grant)")));
}

TEST_CASE("empty specification") {
  const auto v = check_realizability({}, Signature{});
  REQUIRE(v.outcome == Outcome::Realizable);
  CHECK(v.strategy->num_states() == 1);
}

TEST_CASE("contradiction is unrealizable") {
  const auto v = check("F (out && !out)", {}, {"out"});
  CHECK(v.outcome == Outcome::Unrealizable);
  const auto w = check("G (i -> F g) && G !g", {"i"}, {"g"});
  CHECK(w.outcome == Outcome::Unrealizable);
}

TEST_CASE("model checking constant machines") {
  MealyMachine m;
  m.outputs = {"grant"};
  m.rules = {{MealyRule{{}, 0, {true}}}};
  CHECK(model_check(m, parse_formula("G grant")));
  CHECK_FALSE(model_check(m, parse_formula("G !grant")));
}

TEST_CASE("partition must cover the specification") {
  CHECK_THROWS_AS(check("G a", {}, {}), std::invalid_argument);
}

TEST_CASE("strategy dump format") {
  const auto v = check("G (out <-> in)", {"in"}, {"out"});
  REQUIRE(v.strategy);
  const auto text = dump_strategy(*v.strategy);
  CHECK(text.find("0 1 -> 0 1") != std::string::npos);
  CHECK(text.find("0 0 -> 0 0") != std::string::npos);
  CHECK(strategy_to_dot(*v.strategy).find("digraph") == 0);
}
