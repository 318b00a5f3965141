#include "speccc/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

#include "speccc/automata.hpp"

namespace speccc::oracles {

using ltl::Formula;
using ltl::Op;

namespace {

class LassoEvaluator {
public:
  explicit LassoEvaluator(const Lasso& lasso) : lasso_(lasso) {
    if (lasso.loop.empty()) throw std::invalid_argument("lasso loop must be non-empty");
    size_ = lasso.prefix.size() + lasso.loop.size();
  }

  std::vector<bool> eval(const Formula& f) {
    std::vector<bool> v(size_, false);
    switch (f.op()) {
      case Op::True:
        std::fill(v.begin(), v.end(), true);
        break;
      case Op::False:
        break;
      case Op::Atom: {
        auto it = std::find(lasso_.atoms.begin(), lasso_.atoms.end(), f.name());
        if (it == lasso_.atoms.end()) break;
        const auto bit = std::uint64_t{1} << (it - lasso_.atoms.begin());
        for (std::size_t i = 0; i < size_; ++i) v[i] = (letter(i) & bit) != 0;
        break;
      }
      case Op::Not: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < size_; ++i) v[i] = !a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        auto a = eval(f.lhs());
        auto b = eval(f.rhs());
        for (std::size_t i = 0; i < size_; ++i) {
          switch (f.op()) {
            case Op::And: v[i] = a[i] && b[i]; break;
            case Op::Or: v[i] = a[i] || b[i]; break;
            case Op::Implies: v[i] = !a[i] || b[i]; break;
            default: v[i] = a[i] == b[i]; break;
          }
        }
        break;
      }
      case Op::Next: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < size_; ++i) v[i] = a[succ(i)];
        break;
      }
      case Op::TimedNext:
        throw std::invalid_argument("eval_ltl_on_lasso expects a TimedNext-free formula");
      case Op::Eventually:
        return fixpoint(std::vector<bool>(size_, true), eval(f.lhs()), false);
      case Op::Always:
        return fixpoint(eval(f.lhs()), std::vector<bool>(size_, false), true);
      case Op::Until:
        return fixpoint(eval(f.lhs()), eval(f.rhs()), false);
      case Op::WeakUntil:
        return fixpoint(eval(f.lhs()), eval(f.rhs()), true);
      case Op::Release: {
        // a R b = b W (a && b)
        auto a = eval(f.lhs());
        auto b = eval(f.rhs());
        std::vector<bool> ab(size_);
        for (std::size_t i = 0; i < size_; ++i) ab[i] = a[i] && b[i];
        return fixpoint(b, ab, true);
      }
    }
    return v;
  }

private:
  std::uint64_t letter(std::size_t i) const {
    return i < lasso_.prefix.size() ? lasso_.prefix[i] : lasso_.loop[i - lasso_.prefix.size()];
  }
  std::size_t succ(std::size_t i) const { return i + 1 < size_ ? i + 1 : lasso_.prefix.size(); }

  // Solution of v = stop || (keep && X v); least when !greatest.
  std::vector<bool> fixpoint(const std::vector<bool>& keep, const std::vector<bool>& stop,
                             bool greatest) const {
    std::vector<bool> v(size_, greatest);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = size_; k-- > 0;) {
        const bool nv = stop[k] || (keep[k] && v[succ(k)]);
        if (nv != v[k]) {
          v[k] = nv;
          changed = true;
        }
      }
    }
    return v;
  }

  const Lasso& lasso_;
  std::size_t size_;
};

}  // namespace

bool eval_ltl_on_lasso(const Formula& formula, const Lasso& lasso) {
  LassoEvaluator evaluator(lasso);
  return evaluator.eval(formula)[0];
}

}  // namespace speccc::oracles

namespace speccc::oracles {

namespace {

using synthesis::Cube;
using synthesis::MealyMachine;
using synthesis::MooreMachine;

// Number of machines, or max+1 when it exceeds max.
std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t max) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > max / base) return max + 1;
    r *= base;
  }
  return r;
}

Cube full_cube(std::uint32_t valuation, std::size_t width) {
  Cube c(width);
  for (std::size_t i = 0; i < width; ++i) c[i] = valuation >> i & 1;
  return c;
}

std::vector<bool> bits(std::uint32_t valuation, std::size_t width) {
  std::vector<bool> b(width);
  for (std::size_t i = 0; i < width; ++i) b[i] = valuation >> i & 1;
  return b;
}

// Odometer over `digits` positions of the given radix.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

bool find_system(const automata::Nba& negation, const synthesis::Signature& sig, int states,
                 std::uint64_t cap) {
  const std::size_t ni = sig.inputs.size(), no = sig.outputs.size();
  const std::uint32_t letters = 1u << ni, outs = 1u << no;
  const std::uint32_t radix = static_cast<std::uint32_t>(states) * outs;
  const std::size_t slots = static_cast<std::size_t>(states) * letters;
  if (capped_pow(radix, slots, cap) > cap) throw std::length_error("too many machines");
  std::vector<std::uint32_t> choice(slots, 0);
  MealyMachine m;
  m.inputs = sig.inputs;
  m.outputs = sig.outputs;
  m.rules.assign(static_cast<std::size_t>(states), {});
  do {
    for (int s = 0; s < states; ++s) {
      auto& rules = m.rules[static_cast<std::size_t>(s)];
      rules.clear();
      for (std::uint32_t i = 0; i < letters; ++i) {
        const auto c = choice[static_cast<std::size_t>(s) * letters + i];
        rules.push_back({full_cube(i, ni), c / outs, bits(c % outs, no)});
      }
    }
    if (!synthesis::product_nonempty(m, negation)) return true;
  } while (advance(choice, radix));
  return false;
}

bool find_environment(const automata::Nba& positive, const synthesis::Signature& sig, int states,
                      std::uint64_t cap) {
  const std::size_t ni = sig.inputs.size(), no = sig.outputs.size();
  const std::uint32_t letters = 1u << ni, outs = 1u << no;
  const std::uint64_t per_state = capped_pow(static_cast<std::uint64_t>(states), outs, cap);
  if (capped_pow(per_state * letters, static_cast<std::uint64_t>(states), cap) > cap)
    throw std::length_error("too many machines");
  // digits: per state one input choice and one successor per output valuation
  std::vector<std::uint32_t> input_choice(static_cast<std::size_t>(states), 0);
  std::vector<std::uint32_t> succ(static_cast<std::size_t>(states) * outs, 0);
  MooreMachine m;
  m.inputs = sig.inputs;
  m.outputs = sig.outputs;
  m.input_of_state.assign(static_cast<std::size_t>(states), {});
  m.rules.assign(static_cast<std::size_t>(states), {});
  do {
    do {
      for (int s = 0; s < states; ++s) {
        const auto su = static_cast<std::size_t>(s);
        m.input_of_state[su] = bits(input_choice[su], ni);
        m.rules[su].clear();
        for (std::uint32_t o = 0; o < outs; ++o)
          m.rules[su].push_back({full_cube(o, no), succ[su * outs + o]});
      }
      if (!synthesis::product_nonempty(m, positive)) return true;
    } while (advance(succ, static_cast<std::uint32_t>(states)));
  } while (advance(input_choice, letters));
  return false;
}

}  // namespace

BruteForceResult brute_force_realizability(const Formula& formula,
                                           const synthesis::Signature& signature,
                                           const BruteForceOptions& options) {
  const Formula f = ltl::expand_timed_next(formula);
  std::vector<std::string> universe = signature.inputs;
  universe.insert(universe.end(), signature.outputs.begin(), signature.outputs.end());
  const auto negation = automata::ltl_to_nba(ltl::to_nnf(ltl::neg(f)), universe);
  const auto positive = automata::ltl_to_nba(ltl::to_nnf(f), universe);
  for (int s = 1; s <= options.max_states; ++s) {
    try {
      if (find_system(negation, signature, s, options.max_machines))
        return BruteForceResult::Realizable;
    } catch (const std::length_error&) {
      break;
    }
  }
  for (int s = 1; s <= options.max_states; ++s) {
    try {
      if (find_environment(positive, signature, s, options.max_machines))
        return BruteForceResult::Unrealizable;
    } catch (const std::length_error&) {
      break;
    }
  }
  return BruteForceResult::Inconclusive;
}

Lasso play(const MooreMachine& environment, const MealyMachine& system) {
  // Machines are matched by atom name; atoms unknown to a machine read false.
  auto project = [](const std::vector<std::string>& from, const std::vector<bool>& values,
                    const std::vector<std::string>& to) {
    std::vector<bool> out(to.size(), false);
    for (std::size_t i = 0; i < to.size(); ++i) {
      const int j = automata::atom_index(from, to[i]);
      if (j >= 0) out[i] = values[static_cast<std::size_t>(j)];
    }
    return out;
  };
  Lasso lasso;
  lasso.atoms = system.inputs;
  lasso.atoms.insert(lasso.atoms.end(), system.outputs.begin(), system.outputs.end());
  if (lasso.atoms.size() > 64) throw std::invalid_argument("too many atoms for a lasso");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> seen;
  std::vector<std::uint64_t> word;
  std::uint32_t e = environment.initial, s = system.initial;
  while (!seen.contains({e, s})) {
    seen[{e, s}] = word.size();
    const auto input = project(environment.inputs, environment.input_of_state.at(e), system.inputs);
    const auto& rule = system.step(s, input);
    std::uint64_t letter = 0;
    for (std::size_t i = 0; i < input.size(); ++i)
      if (input[i]) letter |= std::uint64_t{1} << i;
    for (std::size_t o = 0; o < rule.outputs.size(); ++o)
      if (rule.outputs[o]) letter |= std::uint64_t{1} << (input.size() + o);
    word.push_back(letter);
    const auto seen_outputs = project(system.outputs, rule.outputs, environment.outputs);
    bool moved = false;
    for (const auto& r : environment.rules[e])
      if (synthesis::cube_matches(r.outputs, seen_outputs)) {
        e = r.next;
        moved = true;
        break;
      }
    if (!moved) throw std::invalid_argument("environment has no move for the system's output");
    s = rule.next;
  }
  const std::size_t start = seen[{e, s}];
  lasso.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start));
  lasso.loop.assign(word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
  return lasso;
}

GridOptimum brute_force_time_profile(const std::vector<int>& thetas, int bound,
                                     const std::vector<int>& signs) {
  GridOptimum best{-1, -1, -1};
  const int max_theta = thetas.empty() ? 0 : *std::max_element(thetas.begin(), thetas.end());
  for (int d = 1; d <= max_theta + bound; ++d) {
    std::vector<std::vector<std::pair<int, int>>> options(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      for (int reduced = 0; reduced <= thetas[i] / d + 1; ++reduced) {
        const int error = thetas[i] - reduced * d;
        if (error <= -d || error >= d) continue;
        if ((signs[i] > 0 && error < 0) || (signs[i] < 0 && error > 0) || (signs[i] == 0 && error != 0))
          continue;
        options[i].emplace_back(reduced, std::abs(error));
      }
    }
    // Odometer over the product of per-duration options.
    std::vector<std::size_t> pick(thetas.size(), 0);
    bool empty = false;
    for (const auto& o : options) empty = empty || o.empty();
    while (!empty) {
      int reduced = 0, error = 0;
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        reduced += options[i][pick[i]].first;
        error += options[i][pick[i]].second;
      }
      if (error <= bound && (best.divisor < 0 || std::tuple{reduced, error, d} <
                                                     std::tuple{best.total_reduced, best.total_error,
                                                                best.divisor}))
        best = {reduced, error, d};
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return best;
}

}  // namespace speccc::oracles
