#include <doctest.h>

#include "random_formula.hpp"
#include "speccc/ltl.hpp"
#include "speccc/oracles.hpp"

using namespace speccc::ltl;
using speccc::oracles::eval_ltl_on_lasso;
using speccc::oracles::Lasso;

namespace {

// Reference expander written against the constructors only.
Formula reference_expand(const Formula& f) {
  if (f.op() == Op::True || f.op() == Op::False || f.op() == Op::Atom) return f;
  if (f.op() == Op::TimedNext) {
    if (f.count() == 1) return next(reference_expand(f.lhs()));
    return next(reference_expand(timed_next(f.count() - 1, f.lhs())));
  }
  Formula l = reference_expand(f.lhs());
  Formula r = f.is_binary() ? reference_expand(f.rhs()) : Formula();
  return make(f.op(), {}, 0, l, r);
}

bool is_nnf(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
      return f.lhs().op() == Op::Atom;
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      return is_nnf(f.lhs()) && is_nnf(f.rhs());
    case Op::Next:
      return is_nnf(f.lhs());
    default:
      return false;
  }
}

Lasso random_lasso(std::mt19937& rng, const std::vector<std::string>& atoms) {
  Lasso l;
  l.atoms = atoms;
  std::uniform_int_distribution<int> len(0, 4), val(0, (1 << atoms.size()) - 1);
  const int p = len(rng), q = 1 + len(rng);
  for (int i = 0; i < p; ++i) l.prefix.push_back(static_cast<std::uint64_t>(val(rng)));
  for (int i = 0; i < q; ++i) l.loop.push_back(static_cast<std::uint64_t>(val(rng)));
  return l;
}

}  // namespace

TEST_CASE("timed next expands to nested next") {
  const Formula p = atom("p"), q = atom("q");
  CHECK(expand_timed_next(timed_next(3, p)) == next(next(next(p))));
  CHECK(print_formula(expand_timed_next(timed_next(3, p))) == "X X X p");
  CHECK(expand_timed_next(timed_next(1, p)) == next(p));
  const Formula f = always(timed_next(2, conj(p, q)));
  CHECK(expand_timed_next(f) == reference_expand(f));
  CHECK(expand_timed_next(f) == always(next(next(conj(p, q)))));
  CHECK_THROWS(timed_next(0, p));
}

TEST_CASE("timed next expansion agrees with a reference expander") {
  testing_support::FormulaGenerator gen({"a", "b", "c"}, 11, true);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen(5);
    CHECK(expand_timed_next(f) == reference_expand(f));
    CHECK(timed_next_lengths(expand_timed_next(f)).empty());
  }
}

TEST_CASE("negation normal form") {
  const Formula p = atom("p"), q = atom("q");
  CHECK(to_nnf(neg(always(p))) == until(tt(), neg(p)));
  CHECK(to_nnf(neg(until(p, q))) == release(neg(p), neg(q)));

  // !(p <-> q): truth table over the propositional fragment.
  const Formula n = to_nnf(neg(iff(p, q)));
  CHECK(is_nnf(n));
  for (std::uint64_t v = 0; v < 4; ++v) {
    const bool pv = v & 1, qv = v & 2;
    Lasso l{{"p", "q"}, {}, {v}};
    CHECK(eval_ltl_on_lasso(n, l) == (pv != qv));
  }
  CHECK(normalize(n) == normalize(disj(conj(p, neg(q)), conj(neg(p), q))));
}

TEST_CASE("expansion and nnf preserve lasso semantics") {
  const std::vector<std::string> atoms{"a", "b", "c"};
  testing_support::FormulaGenerator gen(atoms, 7, true);
  for (int i = 0; i < 400; ++i) {
    const Formula f = gen(4);
    const Formula e = expand_timed_next(f);
    const Formula n = to_nnf(e);
    REQUIRE(is_nnf(n));
    for (int j = 0; j < 6; ++j) {
      const Lasso l = random_lasso(gen.rng(), atoms);
      const bool expected = eval_ltl_on_lasso(e, l);
      CHECK(eval_ltl_on_lasso(n, l) == expected);
      CHECK(eval_ltl_on_lasso(neg(e), l) == !expected);
      CHECK(eval_ltl_on_lasso(normalize(e), l) == expected);
    }
  }
}

TEST_CASE("printer") {
  const Formula p = atom("p"), q = atom("q");
  CHECK(print_formula(always(implies(p, eventually(q)))) == "G (p -> F q)");
  CHECK(print_formula(timed_next(3, p)) == "X[3] p");
  CHECK(print_formula(weak_until(p, q)) == "p W q");
  CHECK(print_formula(neg(p)) == "!p");
}

TEST_CASE("parser precedence") {
  const Formula f = parse_formula("G((a || b) && c -> d)");
  const Formula a = atom("a"), b = atom("b"), c = atom("c"), d = atom("d");
  CHECK(f == always(implies(conj(disj(a, b), c), d)));
  CHECK(parse_formula("a -> b -> c") == implies(a, implies(b, c)));
  CHECK(parse_formula("a U b U c") == until(a, until(b, c)));
  CHECK(parse_formula("!a U b") == until(neg(a), b));
  CHECK(parse_formula("a && b || c") == disj(conj(a, b), c));
  CHECK(parse_formula("a <-> b -> c") == iff(a, implies(b, c)));
  CHECK(parse_formula("GF a") == always(eventually(a)));
  CHECK(parse_formula("X[2] a") == timed_next(2, a));
  CHECK(parse_formula("terminate_auto-control_mode") == atom("terminate_auto-control_mode"));
  CHECK(parse_formula("a->b") == implies(a, b));
}

TEST_CASE("parser errors carry a position") {
  try {
    parse_formula("G (a && )");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(parse_formula("a b"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(a"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("X[0] a"), SyntaxError);
}

TEST_CASE("print/parse round trip on random formulas") {
  testing_support::FormulaGenerator gen({"p", "q", "r_1", "s-2"}, 2024, true);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(6);
    const Formula g = parse_formula(print_formula(f));
    if (g == f) ++equal;
    else FAIL_CHECK("round trip failed: " << print_formula(f));
  }
  CHECK(equal == 1000);
}

TEST_CASE("normalize flattens and sorts") {
  const Formula a = atom("a"), b = atom("b"), c = atom("c");
  CHECK(normalize(conj(c, conj(b, a))) == normalize(conj(conj(a, b), c)));
  CHECK(normalize(neg(neg(a))) == a);
  CHECK(normalize(timed_next(2, a)) == next(next(a)));
  CHECK(normalize(disj(a, a)) == a);
}

TEST_CASE("ltl files") {
  const auto fs = parse_ltl_file("# Req-1\nG a\n\nassume: G b\n# c1\n# Req-2\nguarantee: F c\n");
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].label == "Req-1");
  CHECK(fs[1].label.empty());
  CHECK(fs[1].assumption);
  CHECK(fs[2].label == "Req-2");
  CHECK(fs[2].formula == eventually(atom("c")));
  const auto again = parse_ltl_file(format_ltl_file(fs));
  REQUIRE(again.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(again[i].label == fs[i].label);
    CHECK(again[i].formula == fs[i].formula);
    CHECK(again[i].assumption == fs[i].assumption);
  }
}
