#include "speccc/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "speccc/bdd.hpp"

namespace speccc::synthesis {

using automata::Nba;
using bdd::Bdd;
using ltl::Formula;

bool cube_matches(const Cube& cube, const std::vector<bool>& valuation) {
  for (std::size_t i = 0; i < cube.size(); ++i)
    if (cube[i] >= 0 && bool(cube[i]) != valuation[i]) return false;
  return true;
}

const MealyRule& MealyMachine::step(std::uint32_t state, const std::vector<bool>& input) const {
  for (const MealyRule& r : rules.at(state))
    if (cube_matches(r.inputs, input)) return r;
  throw std::out_of_range("Mealy machine has no rule for this input");
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Realizable: return "Realizable";
    case Outcome::Unrealizable: return "Unrealizable";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

class TimeExceeded : public std::runtime_error {
public:
  TimeExceeded() : std::runtime_error("time limit exceeded") {}
};

class Deadline {
public:
  explicit Deadline(double seconds)
      : enabled_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  void check() const {
    if (enabled_ && std::chrono::steady_clock::now() > end_) throw TimeExceeded();
  }

private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
};

void flatten_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == ltl::Op::And) {
    flatten_conjuncts(f.lhs(), out);
    flatten_conjuncts(f.rhs(), out);
  } else if (f.op() != ltl::Op::True) {
    out.push_back(f);
  }
}

// Universal co-Buchi view of the NBA of the negated objective.
Nba negation_automaton(const std::vector<Formula>& conjuncts,
                       const std::vector<std::string>& universe, std::size_t budget) {
  std::vector<Nba> parts;
  for (const Formula& c : conjuncts) {
    Nba part = automata::ltl_to_nba(ltl::to_nnf(ltl::neg(c)), universe, budget);
    if (part.edges[part.initial].empty()) continue;  // negation unsatisfiable
    parts.push_back(std::move(part));
  }
  return automata::simplify(automata::nba_union(parts));
}

// Counters are encoded in unary: bit (q, v) holds iff state q is active with
// counter >= v. Variables: all counter bits, then inputs, then outputs.
class CountingGame {
public:
  CountingGame(const Nba& ucw, std::size_t num_inputs, std::size_t num_outputs, int k,
               std::size_t node_limit)
      : ucw_(ucw),
        n_in_(num_inputs),
        n_out_(num_outputs),
        k_(k),
        width_(static_cast<std::size_t>(k) + 1),
        pos_vars_(ucw.num_states() * width_),
        mgr_(pos_vars_ + num_inputs + num_outputs, node_limit) {
    choose_order();
    in_mask_.assign(mgr_.num_vars(), false);
    out_mask_.assign(mgr_.num_vars(), false);
    for (std::size_t i = 0; i < n_in_; ++i) in_mask_[in_var(i)] = true;
    for (std::size_t o = 0; o < n_out_; ++o) out_mask_[out_var(o)] = true;
    build();
  }

  /// Solves the safety game for the player keeping all counters <= k.
  /// The environment always moves first within a round; `system_safe`
  /// selects whether the system (Mealy) or the environment (Moore) is the
  /// safety player.
  bool solve(bool system_safe, const Deadline& deadline) {
    const auto init = initial_position();
    if (!init) return false;
    std::vector<std::optional<Bdd>> subst(mgr_.num_vars());
    for (std::size_t i = 0; i < pos_vars_; ++i) subst[level_[i]] = next_bits_[i];
    Bdd win = mgr_.one();
    for (;;) {
      deadline.check();
      const Bdd moves = (!bad_) & mgr_.compose(win, subst);
      const Bdd pre = system_safe ? mgr_.forall(mgr_.exists(moves, out_mask_), in_mask_)
                                  : mgr_.exists(mgr_.forall(moves, out_mask_), in_mask_);
      const Bdd next = win & pre;
      if (!mgr_.eval(next, to_assignment(*init))) return false;
      if (next == win) {
        moves_ = moves;
        return true;
      }
      win = next;
    }
  }

  MealyMachine extract_mealy(const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs, const Deadline& deadline) {
    MealyMachine m;
    m.inputs = inputs;
    m.outputs = outputs;
    explore([&](const Counters& pos, auto&& intern) {
      deadline.check();
      const auto assign = position_assignment(pos);
      Bdd options = mgr_.restrict(moves_, assign);
      std::vector<Bdd> succ(pos_vars_);
      for (std::size_t i = 0; i < pos_vars_; ++i) succ[i] = mgr_.restrict(next_bits_[i], assign);

      // Prefer the smallest maximal successor counter available per input.
      Bdd preferred = mgr_.zero(), covered = mgr_.zero();
      for (int v = 0; v <= k_; ++v) {
        Bdd level = options;
        if (v < k_)
          for (std::size_t q = 0; q < ucw_.num_states(); ++q) level &= !succ[bit(q, v + 1)];
        preferred |= level & !covered;
        covered |= mgr_.exists(level, out_mask_);
      }
      // Fix outputs one at a time, 0 when possible.
      Bdd h = preferred;
      std::vector<std::optional<Bdd>> out_subst(mgr_.num_vars());
      std::vector<Bdd> out_fn(n_out_);
      for (std::size_t o = 0; o < n_out_; ++o) {
        std::vector<int> zero(mgr_.num_vars(), -1), one(mgr_.num_vars(), -1);
        zero[out_var(o)] = 0;
        one[out_var(o)] = 1;
        const Bdd h0 = mgr_.restrict(h, zero), h1 = mgr_.restrict(h, one);
        const Bdd fn = !mgr_.exists(h0, out_mask_);
        h = mgr_.ite(fn, h1, h0);
        out_fn[o] = fn;
        out_subst[out_var(o)] = fn;
      }
      for (auto& s : succ) s = mgr_.compose(s, out_subst);

      std::vector<Bdd> fns = out_fn;
      fns.insert(fns.end(), succ.begin(), succ.end());
      std::vector<MealyRule> rules;
      for (const Bdd& region : split(mgr_.one(), fns)) {
        const auto point = mgr_.pick_min(region, in_mask_);
        std::vector<bool> full(mgr_.num_vars(), false);
        for (std::size_t i = 0; i < mgr_.num_vars(); ++i) full[i] = point[i] == 1;
        MealyRule rule;
        for (std::size_t o = 0; o < n_out_; ++o) rule.outputs.push_back(mgr_.eval(out_fn[o], full));
        Counters next(ucw_.num_states(), -1);
        for (std::size_t q = 0; q < ucw_.num_states(); ++q)
          for (int v = 0; v <= k_; ++v)
            if (mgr_.eval(succ[bit(q, v)], full)) next[q] = static_cast<std::int8_t>(v);
        rule.next = intern(next);
        for (const auto& cube : mgr_.cubes(region)) {
          MealyRule r = rule;
          for (std::size_t i = 0; i < n_in_; ++i) r.inputs.push_back(cube[in_var(i)]);
          rules.push_back(std::move(r));
        }
      }
      m.rules.push_back(std::move(rules));
    });
    return m;
  }

  MooreMachine extract_moore(const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs, const Deadline& deadline) {
    MooreMachine m;
    m.inputs = inputs;
    m.outputs = outputs;
    explore([&](const Counters& pos, auto&& intern) {
      deadline.check();
      auto assign = position_assignment(pos);
      const Bdd safe_inputs = mgr_.forall(mgr_.restrict(moves_, assign), out_mask_);
      const auto choice = mgr_.pick_min(safe_inputs, in_mask_);
      if (choice.empty()) throw std::logic_error("environment has no winning move");
      std::vector<bool> input(n_in_);
      for (std::size_t i = 0; i < n_in_; ++i) {
        input[i] = choice[in_var(i)] == 1;
        assign[in_var(i)] = input[i];
      }
      std::vector<Bdd> succ(pos_vars_);
      for (std::size_t i = 0; i < pos_vars_; ++i) succ[i] = mgr_.restrict(next_bits_[i], assign);
      std::vector<MooreRule> rules;
      for (const Bdd& region : split(mgr_.one(), succ)) {
        const auto point = mgr_.pick_min(region, out_mask_);
        std::vector<bool> full(mgr_.num_vars(), false);
        for (std::size_t i = 0; i < mgr_.num_vars(); ++i) full[i] = point[i] == 1;
        Counters next(ucw_.num_states(), -1);
        for (std::size_t q = 0; q < ucw_.num_states(); ++q)
          for (int v = 0; v <= k_; ++v)
            if (mgr_.eval(succ[bit(q, v)], full)) next[q] = static_cast<std::int8_t>(v);
        const auto target = intern(next);
        for (const auto& cube : mgr_.cubes(region)) {
          MooreRule r;
          for (std::size_t o = 0; o < n_out_; ++o) r.outputs.push_back(cube[out_var(o)]);
          r.next = target;
          rules.push_back(std::move(r));
        }
      }
      m.input_of_state.push_back(std::move(input));
      m.rules.push_back(std::move(rules));
    });
    return m;
  }

private:
  using Counters = std::vector<std::int8_t>;  // -1 = inactive

  // Logical numbering: counter bits, then inputs, then outputs. level_ maps
  // it to BDD levels.
  std::size_t bit(std::size_t q, int v) const { return q * width_ + static_cast<std::size_t>(v); }
  std::size_t in_var(std::size_t i) const { return level_[pos_vars_ + i]; }
  std::size_t out_var(std::size_t o) const { return level_[pos_vars_ + n_in_ + o]; }

  // Variable order by the FORCE heuristic: every automaton edge ties the
  // counter bits of its endpoints to the atoms of its label, and variables
  // move to the mean centre of the edges they occur in. Constraints of one
  // requirement then stay local; the plain layout makes conjunctions of
  // implications exponential.
  void choose_order() {
    const std::size_t n = mgr_.num_vars();
    std::vector<std::vector<std::size_t>> hyperedges;
    for (std::size_t q = 0; q < ucw_.num_states(); ++q) {
      for (const automata::Edge& e : ucw_.edges[q]) {
        std::vector<std::size_t> h;
        for (int v = 0; v <= k_; ++v) {
          h.push_back(bit(q, v));
          if (e.target != q) h.push_back(bit(e.target, v));
        }
        const std::uint64_t mask = e.label.pos | e.label.neg;
        for (std::size_t a = 0; a < n_in_ + n_out_; ++a)
          if (mask >> a & 1) h.push_back(pos_vars_ + a);
        hyperedges.push_back(std::move(h));
      }
    }
    std::vector<std::size_t> order(n);  // position -> variable
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> position(n);
    auto span = [&] {
      double total = 0;
      for (const auto& h : hyperedges) {
        double lo = static_cast<double>(n), hi = 0;
        for (auto v : h) {
          lo = std::min(lo, position[v]);
          hi = std::max(hi, position[v]);
        }
        total += hi - lo;
      }
      return total;
    };
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<double>(i);
    std::vector<std::size_t> best = order;
    double best_span = span();
    for (int round = 0; round < 50; ++round) {
      std::vector<double> sum(n, 0.0);
      std::vector<int> count(n, 0);
      for (const auto& h : hyperedges) {
        double centre = 0;
        for (auto v : h) centre += position[v];
        centre /= static_cast<double>(h.size());
        for (auto v : h) {
          sum[v] += centre;
          ++count[v];
        }
      }
      std::vector<double> target(n);
      for (std::size_t v = 0; v < n; ++v) target[v] = count[v] ? sum[v] / count[v] : position[v];
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return target[a] < target[b]; });
      for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<double>(i);
      const double s = span();
      if (s < best_span) {
        best_span = s;
        best = order;
      } else if (s >= best_span && round > 5) {
        break;
      }
    }
    level_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) level_[best[i]] = i;
  }

  Bdd label_bdd(const automata::Label& label) {
    Bdd b = mgr_.one();
    for (std::size_t i = 0; i < n_in_ + n_out_; ++i) {
      if (label.pos >> i & 1) b &= mgr_.var(level_[pos_vars_ + i]);
      if (label.neg >> i & 1) b &= mgr_.nvar(level_[pos_vars_ + i]);
    }
    return b;
  }

  void build() {
    next_bits_.assign(pos_vars_, mgr_.zero());
    bad_ = mgr_.zero();
    for (std::size_t q = 0; q < ucw_.num_states(); ++q) {
      for (const automata::Edge& e : ucw_.edges[q]) {
        const Bdd label = label_bdd(e.label);
        const int rej = ucw_.accepting[e.target] ? 1 : 0;
        for (int v = 0; v <= k_; ++v) {
          const int from = std::max(0, v - rej);
          next_bits_[bit(e.target, v)] |= label & mgr_.var(level_[bit(q, from)]);
        }
        if (rej) bad_ |= label & mgr_.var(level_[bit(q, k_)]);
      }
    }
  }

  std::optional<Counters> initial_position() const {
    Counters c(ucw_.num_states(), -1);
    const int start = ucw_.accepting[ucw_.initial] ? 1 : 0;
    if (start > k_) return std::nullopt;
    c[ucw_.initial] = static_cast<std::int8_t>(start);
    return c;
  }

  std::vector<int> position_assignment(const Counters& c) const {
    std::vector<int> a(mgr_.num_vars(), -1);
    for (std::size_t q = 0; q < c.size(); ++q)
      for (int v = 0; v <= k_; ++v) a[level_[bit(q, v)]] = c[q] >= v ? 1 : 0;
    return a;
  }

  std::vector<bool> to_assignment(const Counters& c) const {
    std::vector<bool> a(mgr_.num_vars(), false);
    for (std::size_t q = 0; q < c.size(); ++q)
      for (int v = 0; v <= k_; ++v) a[level_[bit(q, v)]] = c[q] >= v;
    return a;
  }

  // Refines `region` into the maximal subregions on which every function
  // is constant.
  std::vector<Bdd> split(const Bdd& region, const std::vector<Bdd>& fns) {
    std::vector<Bdd> parts{region};
    for (const Bdd& f : fns) {
      if (f.is_const()) continue;
      std::vector<Bdd> refined;
      for (const Bdd& p : parts) {
        const Bdd a = p & f, b = p & !f;
        if (!a.is_false()) refined.push_back(a);
        if (!b.is_false()) refined.push_back(b);
      }
      parts.swap(refined);
    }
    return parts;
  }

  template <typename Visit>
  void explore(Visit&& visit) {
    std::map<Counters, std::uint32_t> ids;
    std::deque<Counters> queue;
    auto intern = [&](const Counters& c) {
      auto [it, fresh] = ids.emplace(c, static_cast<std::uint32_t>(ids.size()));
      if (fresh) queue.push_back(c);
      return it->second;
    };
    intern(*initial_position());
    while (!queue.empty()) {
      Counters c = queue.front();
      queue.pop_front();
      visit(c, intern);
    }
  }

  const Nba& ucw_;
  std::size_t n_in_, n_out_;
  int k_;
  std::size_t width_;
  std::size_t pos_vars_;
  std::vector<std::size_t> level_;
  bdd::Manager mgr_;
  std::vector<bool> in_mask_, out_mask_;
  std::vector<Bdd> next_bits_;
  Bdd bad_;
  Bdd moves_;
};

std::vector<std::string> restrict_to(const std::vector<std::string>& names,
                                     const std::set<std::string>& used) {
  std::vector<std::string> out;
  for (const auto& n : names)
    if (used.contains(n) && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

// For each automaton atom: index into machine inputs (>= 0) or outputs
// (encoded as -1 - index).
std::vector<int> atom_map(const std::vector<std::string>& atoms,
                          const std::vector<std::string>& inputs,
                          const std::vector<std::string>& outputs) {
  std::vector<int> map;
  for (const auto& a : atoms) {
    const int i = automata::atom_index(inputs, a);
    const int o = automata::atom_index(outputs, a);
    if (i >= 0) map.push_back(i);
    else if (o >= 0) map.push_back(-1 - o);
    else throw std::invalid_argument("atom " + a + " is neither input nor output of the machine");
  }
  return map;
}

std::string cube_string(const Cube& c) {
  std::string s;
  for (int v : c) s += v < 0 ? '-' : char('0' + v);
  return s.empty() ? "." : s;
}

std::string bits_string(const std::vector<bool>& b) {
  std::string s;
  for (bool v : b) s += v ? '1' : '0';
  return s.empty() ? "." : s;
}

}  // namespace

MealyMachine minimize(const MealyMachine& machine) {
  const std::size_t n = machine.num_states();
  std::vector<std::uint32_t> cls(n, 0);
  using Signature = std::vector<std::tuple<Cube, std::vector<bool>, std::uint32_t>>;
  for (std::size_t rounds = 0;; ++rounds) {
    std::map<std::pair<std::uint32_t, Signature>, std::uint32_t> ids;
    std::vector<std::uint32_t> next_cls(n);
    for (std::size_t s = 0; s < n; ++s) {
      Signature sig;
      for (const auto& r : machine.rules[s]) sig.emplace_back(r.inputs, r.outputs, cls[r.next]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(cls[s], std::move(sig));
      next_cls[s] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    const bool stable = std::set<std::uint32_t>(next_cls.begin(), next_cls.end()).size() ==
                        std::set<std::uint32_t>(cls.begin(), cls.end()).size();
    cls.swap(next_cls);
    if (stable && rounds > 0) break;
  }
  // Renumber classes in order of first reach from the initial state.
  std::vector<std::uint32_t> order(n, UINT32_MAX);
  std::vector<std::uint32_t> representative;
  std::deque<std::uint32_t> queue{machine.initial};
  std::map<std::uint32_t, std::uint32_t> class_id;
  class_id[cls[machine.initial]] = 0;
  representative.push_back(machine.initial);
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (const auto& r : machine.rules[s])
      if (class_id.emplace(cls[r.next], static_cast<std::uint32_t>(class_id.size())).second) {
        representative.push_back(r.next);
        queue.push_back(r.next);
      }
  }
  MealyMachine out;
  out.inputs = machine.inputs;
  out.outputs = machine.outputs;
  out.initial = 0;
  for (const auto rep : representative) {
    std::vector<MealyRule> rules;
    for (const auto& r : machine.rules[rep]) rules.push_back({r.inputs, class_id.at(cls[r.next]), r.outputs});
    std::sort(rules.begin(), rules.end(), [](const MealyRule& a, const MealyRule& b) {
      return a.inputs < b.inputs;
    });
    out.rules.push_back(std::move(rules));
  }
  return out;
}

bool product_nonempty(const MealyMachine& machine, const Nba& nba) {
  const auto map = atom_map(nba.atoms, machine.inputs, machine.outputs);
  const std::size_t nq = nba.num_states();
  std::vector<std::vector<std::uint32_t>> graph(machine.num_states() * nq);
  std::vector<bool> acc(graph.size());
  for (std::size_t s = 0; s < machine.num_states(); ++s) {
    for (std::size_t q = 0; q < nq; ++q) {
      const std::size_t v = s * nq + q;
      acc[v] = nba.accepting[q];
      for (const MealyRule& r : machine.rules[s]) {
        for (const automata::Edge& e : nba.edges[q]) {
          bool ok = true;
          for (std::size_t a = 0; a < map.size() && ok; ++a) {
            const bool p = e.label.pos >> a & 1, n = e.label.neg >> a & 1;
            if (!p && !n) continue;
            if (map[a] >= 0) {
              const int c = r.inputs[static_cast<std::size_t>(map[a])];
              ok = c < 0 || bool(c) == p;
            } else {
              ok = r.outputs[static_cast<std::size_t>(-1 - map[a])] == p;
            }
          }
          if (ok) graph[v].push_back(static_cast<std::uint32_t>(r.next * nq + e.target));
        }
      }
    }
  }
  return automata::buchi_nonempty(graph, acc,
                                  static_cast<std::uint32_t>(machine.initial * nq + nba.initial));
}

bool product_nonempty(const MooreMachine& machine, const Nba& nba) {
  const auto map = atom_map(nba.atoms, machine.inputs, machine.outputs);
  const std::size_t nq = nba.num_states();
  std::vector<std::vector<std::uint32_t>> graph(machine.num_states() * nq);
  std::vector<bool> acc(graph.size());
  for (std::size_t s = 0; s < machine.num_states(); ++s) {
    const auto& input = machine.input_of_state[s];
    for (std::size_t q = 0; q < nq; ++q) {
      const std::size_t v = s * nq + q;
      acc[v] = nba.accepting[q];
      for (const MooreRule& r : machine.rules[s]) {
        for (const automata::Edge& e : nba.edges[q]) {
          bool ok = true;
          for (std::size_t a = 0; a < map.size() && ok; ++a) {
            const bool p = e.label.pos >> a & 1, n = e.label.neg >> a & 1;
            if (!p && !n) continue;
            if (map[a] >= 0) {
              ok = input[static_cast<std::size_t>(map[a])] == p;
            } else {
              const int c = r.outputs[static_cast<std::size_t>(-1 - map[a])];
              ok = c < 0 || bool(c) == p;
            }
          }
          if (ok) graph[v].push_back(static_cast<std::uint32_t>(r.next * nq + e.target));
        }
      }
    }
  }
  return automata::buchi_nonempty(graph, acc,
                                  static_cast<std::uint32_t>(machine.initial * nq + nba.initial));
}

bool model_check(const MealyMachine& machine, const Formula& formula, std::size_t state_budget) {
  std::vector<Formula> conjuncts;
  flatten_conjuncts(ltl::expand_timed_next(formula), conjuncts);
  std::vector<std::string> universe = machine.inputs;
  universe.insert(universe.end(), machine.outputs.begin(), machine.outputs.end());
  const Nba neg = negation_automaton(conjuncts, universe, state_budget);
  return !product_nonempty(machine, neg);
}

bool verify_counter_strategy(const MooreMachine& machine, const Formula& formula,
                             std::size_t state_budget) {
  std::vector<std::string> universe = machine.inputs;
  universe.insert(universe.end(), machine.outputs.begin(), machine.outputs.end());
  const Nba pos =
      automata::ltl_to_nba(ltl::to_nnf(ltl::expand_timed_next(formula)), universe, state_budget);
  return !product_nonempty(machine, pos);
}

Verdict check_realizability(const std::vector<Formula>& spec, const Signature& signature,
                            const Options& options) {
  std::vector<Formula> conjuncts;
  for (const Formula& f : spec) flatten_conjuncts(ltl::expand_timed_next(f), conjuncts);
  const Formula phi = ltl::conj_all(conjuncts);

  const auto used = ltl::atoms_of(phi);
  for (const auto& a : used)
    if (automata::atom_index(signature.inputs, a) < 0 &&
        automata::atom_index(signature.outputs, a) < 0)
      throw std::invalid_argument("atom " + a + " is not in the input/output partition");
  const auto inputs = restrict_to(signature.inputs, used);
  const auto outputs = restrict_to(signature.outputs, used);
  for (const auto& i : inputs)
    if (automata::atom_index(outputs, i) >= 0)
      throw std::invalid_argument("atom " + i + " is both input and output");
  std::vector<std::string> universe = inputs;
  universe.insert(universe.end(), outputs.begin(), outputs.end());
  if (universe.size() > automata::kMaxAtoms)
    throw std::invalid_argument("more than 64 atoms in one specification");

  const Deadline deadline(options.time_limit);
  Verdict verdict;
  verdict.k = options.k_max;
  try {
    const Nba system_ucw = negation_automaton(conjuncts, universe, options.state_budget);
    std::optional<Nba> env_ucw;
    bool dual = options.dual_check;
    for (int k = 0; k <= options.k_max; ++k) {
      CountingGame game(system_ucw, inputs.size(), outputs.size(), k, options.bdd_node_limit);
      if (game.solve(true, deadline)) {
        MealyMachine machine = minimize(game.extract_mealy(inputs, outputs, deadline));
        if (product_nonempty(machine, system_ucw))
          throw std::logic_error("extracted strategy violates the specification");
        verdict.outcome = Outcome::Realizable;
        verdict.k = k;
        verdict.strategy = std::move(machine);
        return verdict;
      }
      if (!dual) continue;
      if (!env_ucw) {
        try {
          env_ucw = automata::ltl_to_nba(ltl::to_nnf(phi), universe, options.state_budget);
        } catch (const automata::StateBudgetExceeded& e) {
          dual = false;
          verdict.note = std::string("dual check skipped: ") + e.what();
          continue;
        }
      }
      CountingGame env_game(*env_ucw, inputs.size(), outputs.size(), k, options.bdd_node_limit);
      if (env_game.solve(false, deadline)) {
        MooreMachine counter = env_game.extract_moore(inputs, outputs, deadline);
        if (product_nonempty(counter, *env_ucw))
          throw std::logic_error("extracted counter-strategy does not refute the specification");
        verdict.outcome = Outcome::Unrealizable;
        verdict.k = k;
        verdict.counter_strategy = std::move(counter);
        return verdict;
      }
    }
    if (verdict.note.empty()) verdict.note = "no verdict up to k_max";
  } catch (const TimeExceeded&) {
    verdict.note = "time limit exceeded";
  } catch (const bdd::NodeLimitExceeded& e) {
    verdict.note = e.what();
  }
  verdict.outcome = Outcome::Unknown;
  return verdict;
}

std::string dump_strategy(const MealyMachine& m) {
  std::ostringstream out;
  out << "mealy states=" << m.num_states() << " initial=" << m.initial << "\n";
  out << "inputs:";
  for (const auto& i : m.inputs) out << ' ' << i;
  out << "\noutputs:";
  for (const auto& o : m.outputs) out << ' ' << o;
  out << "\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (const auto& r : m.rules[s])
      out << s << ' ' << cube_string(r.inputs) << " -> " << r.next << ' '
          << bits_string(r.outputs) << "\n";
  return out.str();
}

std::string dump_counter_strategy(const MooreMachine& m) {
  std::ostringstream out;
  out << "moore states=" << m.num_states() << " initial=" << m.initial << "\n";
  out << "inputs:";
  for (const auto& i : m.inputs) out << ' ' << i;
  out << "\noutputs:";
  for (const auto& o : m.outputs) out << ' ' << o;
  out << "\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    out << s << " emits " << bits_string(m.input_of_state[s]) << "\n";
    for (const auto& r : m.rules[s])
      out << s << ' ' << cube_string(r.outputs) << " -> " << r.next << "\n";
  }
  return out.str();
}

std::string strategy_to_dot(const MealyMachine& m) {
  std::ostringstream out;
  out << "digraph strategy {\n  rankdir=LR;\n  init [shape=point];\n  init -> s" << m.initial
      << ";\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    out << "  s" << s << " [shape=circle,label=\"" << s << "\"];\n";
    for (const auto& r : m.rules[s])
      out << "  s" << s << " -> s" << r.next << " [label=\"" << cube_string(r.inputs) << " / "
          << bits_string(r.outputs) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace speccc::synthesis
