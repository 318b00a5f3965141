#include "speccc/automata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace speccc::automata {

using ltl::Formula;
using ltl::Op;

int atom_index(const std::vector<std::string>& atoms, const std::string& name) {
  auto it = std::find(atoms.begin(), atoms.end(), name);
  return it == atoms.end() ? -1 : static_cast<int>(it - atoms.begin());
}

std::vector<std::uint32_t> Nba::successors(std::uint32_t state, std::uint64_t valuation) const {
  std::vector<std::uint32_t> out;
  for (const Edge& e : edges[state])
    if (e.label.matches(valuation)) out.push_back(e.target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Nba::accepts_lasso(const std::vector<std::uint64_t>& prefix,
                        const std::vector<std::uint64_t>& loop) const {
  if (loop.empty()) throw std::invalid_argument("lasso loop must be non-empty");
  const std::size_t positions = prefix.size() + loop.size();
  auto letter = [&](std::size_t pos) {
    return pos < prefix.size() ? prefix[pos] : loop[pos - prefix.size()];
  };
  auto next_pos = [&](std::size_t pos) { return pos + 1 < positions ? pos + 1 : prefix.size(); };
  const std::size_t n = num_states();
  std::vector<std::vector<std::uint32_t>> graph(n * positions);
  std::vector<bool> acc(n * positions, false);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t pos = 0; pos < positions; ++pos) {
      const std::size_t v = q * positions + pos;
      acc[v] = accepting[q];
      for (const Edge& e : edges[q])
        if (e.label.matches(letter(pos)))
          graph[v].push_back(static_cast<std::uint32_t>(e.target * positions + next_pos(pos)));
    }
  }
  return buchi_nonempty(graph, acc, static_cast<std::uint32_t>(initial * positions));
}

std::vector<std::uint32_t> scc_ids(const std::vector<std::vector<std::uint32_t>>& graph) {
  const std::size_t n = graph.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0, components = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < graph[f.v].size()) {
        const std::uint32_t w = graph[f.v][f.child++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return comp;
}

bool buchi_nonempty(const std::vector<std::vector<std::uint32_t>>& graph,
                    const std::vector<bool>& accepting, std::uint32_t start) {
  const std::size_t n = graph.size();
  if (start >= n) return false;
  std::vector<bool> reach(n, false);
  std::vector<std::uint32_t> work{start};
  reach[start] = true;
  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t w : graph[v])
      if (!reach[w]) {
        reach[w] = true;
        work.push_back(w);
      }
  }
  // Restrict to the reachable part so Tarjan works on a small graph.
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  std::vector<std::uint32_t> back;
  for (std::uint32_t v = 0; v < n; ++v)
    if (reach[v]) {
      id[v] = static_cast<std::uint32_t>(back.size());
      back.push_back(v);
    }
  std::vector<std::vector<std::uint32_t>> sub(back.size());
  for (std::size_t i = 0; i < back.size(); ++i)
    for (std::uint32_t w : graph[back[i]]) sub[i].push_back(id[w]);
  const auto comp = scc_ids(sub);
  std::vector<std::size_t> comp_size(back.size() + 1, 0);
  for (auto c : comp) ++comp_size[c];
  for (std::size_t i = 0; i < back.size(); ++i) {
    if (!accepting[back[i]]) continue;
    if (comp_size[comp[i]] > 1) return true;
    for (std::uint32_t w : sub[i])
      if (w == i) return true;
  }
  return false;
}

namespace {

struct Term {
  Label label;
  std::set<Formula> next;
  std::set<Formula> pending;  // Until obligations postponed on this step
};

class Expander {
public:
  Expander(const std::vector<std::string>& atoms, std::size_t budget) : atoms_(atoms), budget_(budget) {}

  std::vector<Term> expand(const std::vector<Formula>& obligations) {
    terms_.clear();
    branches_ = 0;
    Term t;
    std::set<Formula> done;
    rec(obligations, t, done);
    prune();
    return std::move(terms_);
  }

private:
  void rec(std::vector<Formula> todo, Term term, std::set<Formula> done) {
    // Disjunctions multiply branches; a large conjunction of implications
    // would exhaust memory long before the state budget is reached.
    if (++branches_ > budget_) throw StateBudgetExceeded(budget_);
    while (!todo.empty()) {
      Formula f = todo.back();
      todo.pop_back();
      if (!done.insert(f).second) continue;
      switch (f.op()) {
        case Op::True:
          break;
        case Op::False:
          return;
        case Op::Atom:
          term.label.pos |= bit(f.name());
          if (!term.label.consistent()) return;
          break;
        case Op::Not:
          if (f.lhs().op() != Op::Atom) throw std::invalid_argument("formula is not in NNF");
          term.label.neg |= bit(f.lhs().name());
          if (!term.label.consistent()) return;
          break;
        case Op::And:
          todo.push_back(f.lhs());
          todo.push_back(f.rhs());
          break;
        case Op::Or: {
          auto left = todo;
          left.push_back(f.lhs());
          rec(std::move(left), term, done);
          todo.push_back(f.rhs());
          break;
        }
        case Op::Next:
          term.next.insert(f.lhs());
          break;
        case Op::Until: {
          auto now = todo;
          now.push_back(f.rhs());
          rec(std::move(now), term, done);
          todo.push_back(f.lhs());
          term.next.insert(f);
          term.pending.insert(f);
          break;
        }
        case Op::Release: {
          auto now = todo;
          now.push_back(f.lhs());
          now.push_back(f.rhs());
          rec(std::move(now), term, done);
          todo.push_back(f.rhs());
          term.next.insert(f);
          break;
        }
        default:
          throw std::invalid_argument("formula is not in NNF: " + ltl::print_formula(f));
      }
    }
    terms_.push_back(std::move(term));
  }

  std::uint64_t bit(const std::string& name) const {
    const int i = atom_index(atoms_, name);
    if (i < 0) throw std::invalid_argument("atom not in alphabet: " + name);
    return std::uint64_t{1} << i;
  }

  static bool subset(const std::set<Formula>& a, const std::set<Formula>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  // a is at least as permissive as b: weaker label, fewer obligations.
  static bool dominates(const Term& a, const Term& b) {
    return (a.label.pos & ~b.label.pos) == 0 && (a.label.neg & ~b.label.neg) == 0 &&
           subset(a.next, b.next) && subset(a.pending, b.pending);
  }

  void prune() {
    std::vector<bool> drop(terms_.size(), false);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (drop[i]) continue;
      for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (i == j || drop[j]) continue;
        if (dominates(terms_[i], terms_[j])) drop[j] = true;
      }
    }
    std::vector<Term> kept;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(terms_[i]));
    terms_.swap(kept);
  }

  const std::vector<std::string>& atoms_;
  std::size_t budget_;
  std::size_t branches_ = 0;
  std::vector<Term> terms_;
};

void collect_untils(const Formula& f, std::set<Formula>& out) {
  if (f.op() == Op::Until) out.insert(f);
  if (f.is_unary()) collect_untils(f.lhs(), out);
  if (f.is_binary()) {
    collect_untils(f.lhs(), out);
    collect_untils(f.rhs(), out);
  }
}

std::string state_name(const std::vector<Formula>& obligations, std::size_t level) {
  std::string s = "{";
  for (std::size_t i = 0; i < obligations.size(); ++i) {
    if (i) s += ", ";
    s += ltl::print_formula(obligations[i]);
  }
  return s + "}/" + std::to_string(level);
}

}  // namespace

Nba ltl_to_nba(const Formula& formula, std::vector<std::string> atoms, std::size_t state_budget) {
  if (atoms.empty()) {
    const auto used = ltl::atoms_of(formula);
    atoms.assign(used.begin(), used.end());
  }
  if (atoms.size() > kMaxAtoms)
    throw std::invalid_argument("at most 64 atoms are supported per automaton");

  std::set<Formula> until_set;
  collect_untils(formula, until_set);
  const std::vector<Formula> untils(until_set.begin(), until_set.end());
  const std::size_t m = untils.size();

  Nba nba;
  nba.atoms = atoms;
  Expander expander(nba.atoms, state_budget);

  using Key = std::pair<std::vector<Formula>, std::size_t>;
  std::map<Key, std::uint32_t> ids;
  std::vector<Key> keys;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(keys.size()));
    if (fresh) {
      if (keys.size() >= state_budget) throw StateBudgetExceeded(state_budget);
      keys.push_back(std::move(key));
    }
    return it->second;
  };

  nba.initial = intern({{formula}, 0});
  // Expansion depends only on the obligation set, not the level.
  std::map<std::vector<Formula>, std::vector<Term>> expansions;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    const Key key = keys[s];
    auto it = expansions.find(key.first);
    if (it == expansions.end()) it = expansions.emplace(key.first, expander.expand(key.first)).first;
    std::vector<Edge> out;
    for (const Term& term : it->second) {
      std::size_t level = 0;
      if (m > 0) {
        level = key.second == m ? 0 : key.second;
        while (level < m && !term.pending.contains(untils[level])) ++level;
      }
      std::vector<Formula> next(term.next.begin(), term.next.end());
      const std::uint32_t target = intern({std::move(next), level});
      Edge e{term.label, target};
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Edge& x) {
        return x.target == e.target && x.label == e.label;
      });
      if (!dup) out.push_back(e);
    }
    nba.edges.push_back(std::move(out));
  }
  for (const Key& key : keys) {
    nba.accepting.push_back(m == 0 || key.second == m);
    nba.state_names.push_back(state_name(key.first, key.second));
  }
  return simplify(nba);
}

Nba simplify(const Nba& nba) {
  const std::size_t n = nba.num_states();
  std::vector<std::vector<std::uint32_t>> graph(n);
  for (std::size_t q = 0; q < n; ++q)
    for (const Edge& e : nba.edges[q]) graph[q].push_back(e.target);
  const auto comp = scc_ids(graph);
  std::vector<bool> on_cycle(n, false);
  {
    std::vector<std::size_t> size(n + 1, 0);
    for (auto c : comp) ++size[c];
    for (std::size_t q = 0; q < n; ++q) {
      on_cycle[q] = size[comp[q]] > 1;
      for (auto t : graph[q])
        if (t == q) on_cycle[q] = true;
    }
  }
  // Backward reachability from accepting states on cycles.
  std::vector<std::vector<std::uint32_t>> reverse(n);
  for (std::uint32_t q = 0; q < n; ++q)
    for (auto t : graph[q]) reverse[t].push_back(q);
  std::vector<bool> useful(n, false);
  std::vector<std::uint32_t> work;
  for (std::uint32_t q = 0; q < n; ++q)
    if (nba.accepting[q] && on_cycle[q]) {
      useful[q] = true;
      work.push_back(q);
    }
  while (!work.empty()) {
    const auto q = work.back();
    work.pop_back();
    for (auto p : reverse[q])
      if (!useful[p]) {
        useful[p] = true;
        work.push_back(p);
      }
  }
  useful[nba.initial] = true;
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  Nba out;
  out.atoms = nba.atoms;
  for (std::uint32_t q = 0; q < n; ++q)
    if (useful[q]) {
      id[q] = static_cast<std::uint32_t>(out.edges.size());
      out.edges.emplace_back();
      out.accepting.push_back(nba.accepting[q] && on_cycle[q]);
      out.state_names.push_back(nba.state_names.empty() ? std::string() : nba.state_names[q]);
    }
  for (std::uint32_t q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    for (const Edge& e : nba.edges[q])
      if (useful[e.target]) out.edges[id[q]].push_back({e.label, id[e.target]});
  }
  out.initial = id[nba.initial];
  return out;
}

Nba nba_union(const std::vector<Nba>& parts) {
  Nba out;
  if (!parts.empty()) out.atoms = parts.front().atoms;
  out.initial = 0;
  out.edges.emplace_back();
  out.accepting.push_back(false);
  out.state_names.push_back("init");
  for (const Nba& part : parts) {
    if (part.atoms != out.atoms) throw std::invalid_argument("nba_union: alphabets differ");
    const auto offset = static_cast<std::uint32_t>(out.edges.size());
    for (const Edge& e : part.edges[part.initial])
      out.edges[0].push_back({e.label, e.target + offset});
    for (std::size_t q = 0; q < part.num_states(); ++q) {
      std::vector<Edge> es;
      for (const Edge& e : part.edges[q]) es.push_back({e.label, e.target + offset});
      out.edges.push_back(std::move(es));
      out.accepting.push_back(part.accepting[q]);
      out.state_names.push_back(part.state_names.empty() ? std::string() : part.state_names[q]);
    }
  }
  return out;
}

}  // namespace speccc::automata
