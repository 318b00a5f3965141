#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace speccc::ltl {

enum class Op {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  TimedNext,
  Eventually,
  Always,
  Until,
  WeakUntil,
  Release  // internal only, produced by to_nnf
};

struct Node;

/// Immutable LTL formula with value semantics. Copies share structure.
class Formula {
public:
  Formula();  // true

  Op op() const;
  const std::string& name() const;  // Atom only
  int count() const;                // TimedNext only
  const Formula& lhs() const;       // unary operand or left operand
  const Formula& rhs() const;       // right operand of binary operators
  std::size_t hash() const;

  bool is_unary() const;
  bool is_binary() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);

  // Total structural order; 0 when equal.
  static int compare(const Formula& a, const Formula& b);

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Formula make(Op, std::string, int, Formula, Formula);
};

Formula make(Op op, std::string name, int count, Formula lhs, Formula rhs);

Formula tt();
Formula ff();
Formula atom(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula next(Formula f);
Formula timed_next(int n, Formula f);
Formula eventually(Formula f);
Formula always(Formula f);
Formula until(Formula a, Formula b);
Formula weak_until(Formula a, Formula b);
Formula release(Formula a, Formula b);

/// Folds a list with `conj`/`disj`, left associated. Empty lists give true/false.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

class SyntaxError : public std::runtime_error {
public:
  SyntaxError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

std::string print_formula(const Formula& f);
Formula parse_formula(std::string_view text);

/// Replaces every TimedNext(n, f) by n nested Next operators.
Formula expand_timed_next(const Formula& f);

/// Negation normal form over {atom, !atom, true, false, &&, ||, X, U, R}.
/// Expects a TimedNext-free formula.
Formula to_nnf(const Formula& f);

/// Canonical form for comparing formulas: TimedNext expanded, double
/// negations removed, &&/|| chains flattened and sorted.
Formula normalize(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);

/// Lengths of all TimedNext nodes in f.
std::vector<int> timed_next_lengths(const Formula& f);

/// Renames atoms according to `renaming`; names not in the map are kept.
template <typename Map>
Formula rename_atoms(const Formula& f, const Map& renaming) {
  if (f.op() == Op::Atom) {
    auto it = renaming.find(f.name());
    return it == renaming.end() ? f : atom(it->second);
  }
  if (f.op() == Op::True || f.op() == Op::False) return f;
  Formula l = rename_atoms(f.lhs(), renaming);
  Formula r = f.is_binary() ? rename_atoms(f.rhs(), renaming) : Formula();
  return make(f.op(), std::string(), f.count(), l, r);
}

std::size_t formula_size(const Formula& f);

/// One formula per non-comment line. "assume:"/"guarantee:" prefixes are
/// accepted and stripped; "# ..." comments directly above a formula become
/// its label.
struct LabeledFormula {
  std::string label;
  Formula formula;
  bool assumption = false;
};
std::vector<LabeledFormula> parse_ltl_file(std::string_view content);
std::string format_ltl_file(const std::vector<LabeledFormula>& formulas);

}  // namespace speccc::ltl
