#include <doctest.h>

#include <random>

#include "random_formula.hpp"
#include "speccc/oracles.hpp"

using namespace speccc;
using namespace speccc::ltl;
using oracles::BruteForceResult;
using oracles::Lasso;

TEST_CASE("lasso evaluation examples") {
  CHECK(oracles::eval_ltl_on_lasso(parse_formula("G p"), Lasso{{"p"}, {}, {1}}));
  CHECK_FALSE(oracles::eval_ltl_on_lasso(parse_formula("F p"), Lasso{{"p"}, {0}, {0}}));
  // p U q on {p},{q},({q})^w: q at position 1, p at 0.
  CHECK(oracles::eval_ltl_on_lasso(parse_formula("p U q"), Lasso{{"p", "q"}, {1, 2}, {2}}));
  CHECK_FALSE(oracles::eval_ltl_on_lasso(parse_formula("p U q"), Lasso{{"p", "q"}, {1}, {1}}));
  CHECK(oracles::eval_ltl_on_lasso(parse_formula("p W q"), Lasso{{"p", "q"}, {1}, {1}}));
  CHECK(oracles::eval_ltl_on_lasso(parse_formula("G F p"), Lasso{{"p"}, {0}, {0, 1}}));
  CHECK_FALSE(oracles::eval_ltl_on_lasso(parse_formula("F G p"), Lasso{{"p"}, {1}, {0, 1}}));
}

TEST_CASE("brute force examples") {
  const synthesis::Signature io{{"in"}, {"out"}};
  CHECK(oracles::brute_force_realizability(parse_formula("G (out <-> in)"), io) ==
        BruteForceResult::Realizable);
  CHECK(oracles::brute_force_realizability(parse_formula("G (out <-> X in)"), io) ==
        BruteForceResult::Unrealizable);
  CHECK(oracles::brute_force_realizability(parse_formula("F (out && !out)"), {{}, {"out"}}) ==
        BruteForceResult::Unrealizable);
}

TEST_CASE("counter-strategies refute every small system machine") {
  // Environments for unrealizable specs beat all 1- and 2-state Mealy
  // machines; the resulting plays violate the formula under the lasso
  // oracle, independently of the automata.
  const synthesis::Signature io{{"in"}, {"out"}};
  for (const char* text : {"G (out <-> X in)", "G (out <-> X X in)", "F (out && !out)",
                           "G (in -> X out) && G (in -> X !out)"}) {
    const Formula f = parse_formula(text);
    const auto v = synthesis::check_realizability({f}, io);
    REQUIRE_MESSAGE(v.outcome == synthesis::Outcome::Unrealizable, text);
    REQUIRE(v.counter_strategy);
    for (int states = 1; states <= 2; ++states) {
      const std::uint32_t radix = static_cast<std::uint32_t>(states) * 2;
      std::vector<std::uint32_t> digits(static_cast<std::size_t>(states) * 2, 0);
      bool more = true;
      while (more) {
        synthesis::MealyMachine m;
        m.inputs = {"in"};
        m.outputs = {"out"};
        m.rules.resize(static_cast<std::size_t>(states));
        for (int s = 0; s < states; ++s)
          for (int i = 0; i < 2; ++i) {
            const auto d = digits[static_cast<std::size_t>(s * 2 + i)];
            m.rules[static_cast<std::size_t>(s)].push_back({{i}, d / 2, {d % 2 == 1}});
          }
        const Lasso l = oracles::play(*v.counter_strategy, m);
        CHECK_FALSE_MESSAGE(oracles::eval_ltl_on_lasso(expand_timed_next(f), l), text);
        more = false;
        for (auto& d : digits) {
          if (++d < radix) {
            more = true;
            break;
          }
          d = 0;
        }
      }
    }
  }
}

TEST_CASE("bounded synthesis agrees with brute force on small specs") {
  std::mt19937 rng(17);
  testing_support::FormulaGenerator gen({"a", "b"}, 41);
  int conclusive = 0;
  for (int i = 0; i < 40; ++i) {
    const Formula f = gen(3);
    synthesis::Signature io;
    (rng() % 2 ? io.inputs : io.outputs).push_back("a");
    (rng() % 2 ? io.inputs : io.outputs).push_back("b");
    const auto bf = oracles::brute_force_realizability(f, io);
    if (bf == BruteForceResult::Inconclusive) continue;
    ++conclusive;
    const auto v = synthesis::check_realizability({f}, io);
    if (v.outcome == synthesis::Outcome::Unknown) continue;
    CHECK_MESSAGE((v.outcome == synthesis::Outcome::Realizable) ==
                      (bf == BruteForceResult::Realizable),
                  print_formula(f));
  }
  CHECK(conclusive > 20);
}
