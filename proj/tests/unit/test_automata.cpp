#include <doctest.h>

#include <random>

#include "random_formula.hpp"
#include "speccc/automata.hpp"
#include "speccc/oracles.hpp"

using namespace speccc;
using namespace speccc::ltl;

TEST_CASE("tableau automata agree with lasso evaluation") {
  const std::vector<std::string> atoms{"a", "b", "c"};
  testing_support::FormulaGenerator gen(atoms, 99);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 3), val(0, 7);
  for (int i = 0; i < 250; ++i) {
    const Formula f = gen(4);
    const auto nba = automata::ltl_to_nba(to_nnf(f), atoms);
    for (int j = 0; j < 8; ++j) {
      oracles::Lasso l{atoms, {}, {}};
      const int p = len(rng), q = 1 + len(rng);
      for (int k = 0; k < p; ++k) l.prefix.push_back(static_cast<std::uint64_t>(val(rng)));
      for (int k = 0; k < q; ++k) l.loop.push_back(static_cast<std::uint64_t>(val(rng)));
      const bool expected = oracles::eval_ltl_on_lasso(f, l);
      CHECK_MESSAGE(nba.accepts_lasso(l.prefix, l.loop) == expected, print_formula(f));
    }
  }
}

TEST_CASE("small automata") {
  const auto gp = automata::ltl_to_nba(to_nnf(always(atom("p"))));
  CHECK(gp.num_states() == 1);
  CHECK(gp.accepting[0]);
  const auto unsat = automata::ltl_to_nba(to_nnf(eventually(conj(atom("p"), neg(atom("p"))))));
  CHECK_FALSE(unsat.accepts_lasso({}, {0}));
  CHECK_FALSE(unsat.accepts_lasso({}, {1}));
  CHECK_THROWS_AS(automata::ltl_to_nba(to_nnf(always(eventually(atom("p")))), {"p"}, 1),
                  automata::StateBudgetExceeded);
}

TEST_CASE("union recognizes either language") {
  const std::vector<std::string> atoms{"p", "q"};
  const auto u = automata::nba_union({automata::ltl_to_nba(to_nnf(always(atom("p"))), atoms),
                                      automata::ltl_to_nba(to_nnf(always(atom("q"))), atoms)});
  CHECK(u.accepts_lasso({}, {1}));
  CHECK(u.accepts_lasso({}, {2}));
  CHECK_FALSE(u.accepts_lasso({}, {1, 2}));
}

TEST_CASE("scc and buchi emptiness") {
  const std::vector<std::vector<std::uint32_t>> g{{1}, {2}, {1}, {3}};
  const auto ids = automata::scc_ids(g);
  CHECK(ids[1] == ids[2]);
  CHECK(ids[0] != ids[1]);
  CHECK(automata::buchi_nonempty(g, {false, true, false, false}, 0));
  CHECK_FALSE(automata::buchi_nonempty(g, {true, false, false, false}, 0));
  CHECK_FALSE(automata::buchi_nonempty(g, {false, false, false, true}, 0));
  CHECK(automata::buchi_nonempty(g, {false, false, false, true}, 3));
}
