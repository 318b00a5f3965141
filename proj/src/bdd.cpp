#include "speccc/bdd.hpp"

#include <optional>
#include <unordered_map>

namespace speccc::bdd {

namespace {

constexpr std::uint32_t kTerminalVar = UINT32_MAX;
constexpr std::uint32_t kEmpty = UINT32_MAX;

enum CacheOp : std::uint32_t { kIte = 1, kNot = 2 };

std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
  h ^= b + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
  h ^= c * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
  return h ^ (h >> 29);
}

}  // namespace

Bdd Bdd::operator&(const Bdd& o) const { return mgr_->apply_and(*this, o); }
Bdd Bdd::operator|(const Bdd& o) const { return mgr_->apply_or(*this, o); }
Bdd Bdd::operator^(const Bdd& o) const { return mgr_->apply_xor(*this, o); }
Bdd Bdd::operator!() const { return mgr_->apply_not(*this); }

Manager::Manager(std::size_t num_vars, std::size_t node_limit)
    : num_vars_(num_vars), node_limit_(node_limit) {
  nodes_.reserve(1024);
  nodes_.push_back({kTerminalVar, 0, 0});  // false
  nodes_.push_back({kTerminalVar, 1, 1});  // true
  unique_.assign(1 << 12, kEmpty);
  cache_.resize(1 << 18);
}

void Manager::grow_unique() {
  std::vector<std::uint32_t> fresh(unique_.size() * 2, kEmpty);
  const std::size_t mask = fresh.size() - 1;
  for (std::uint32_t id = 2; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    std::size_t slot = hash3(n.var, n.lo, n.hi) & mask;
    while (fresh[slot] != kEmpty) slot = (slot + 1) & mask;
    fresh[slot] = id;
  }
  unique_.swap(fresh);
  if (cache_.size() < unique_.size() && cache_.size() < (1u << 22)) {
    cache_.assign(cache_.size() * 2, CacheEntry{});
  }
}

std::uint32_t Manager::mk(std::uint32_t var, std::uint32_t lo, std::uint32_t hi) {
  if (lo == hi) return lo;
  const std::size_t mask = unique_.size() - 1;
  std::size_t slot = hash3(var, lo, hi) & mask;
  while (unique_[slot] != kEmpty) {
    const Node& n = nodes_[unique_[slot]];
    if (n.var == var && n.lo == lo && n.hi == hi) return unique_[slot];
    slot = (slot + 1) & mask;
  }
  if (nodes_.size() >= node_limit_) throw NodeLimitExceeded(node_limit_);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({var, lo, hi});
  unique_[slot] = id;
  if (nodes_.size() * 2 > unique_.size()) grow_unique();
  return id;
}

Bdd Manager::var(std::size_t v) {
  if (v >= num_vars_) throw std::out_of_range("BDD variable out of range");
  return Bdd(this, mk(static_cast<std::uint32_t>(v), 0, 1));
}

Bdd Manager::nvar(std::size_t v) {
  if (v >= num_vars_) throw std::out_of_range("BDD variable out of range");
  return Bdd(this, mk(static_cast<std::uint32_t>(v), 1, 0));
}

bool Manager::cache_lookup(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                           std::uint32_t& out) const {
  const CacheEntry& e = cache_[hash3(a ^ (std::uint64_t(op) << 32), b, c) & (cache_.size() - 1)];
  if (e.op == op && e.a == a && e.b == b && e.c == c) {
    out = e.result;
    return true;
  }
  return false;
}

void Manager::cache_store(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          std::uint32_t result) {
  CacheEntry& e = cache_[hash3(a ^ (std::uint64_t(op) << 32), b, c) & (cache_.size() - 1)];
  e = {a, b, c, op, result};
}

void Manager::clear_caches() { std::fill(cache_.begin(), cache_.end(), CacheEntry{}); }

std::uint32_t Manager::ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h) {
  if (f == 1) return g;
  if (f == 0) return h;
  if (g == h) return g;
  if (g == 1 && h == 0) return f;
  if (g == 0 && h == 1) return not_rec(f);
  if (g == f) g = 1;
  if (h == f) h = 0;
  std::uint32_t r;
  if (cache_lookup(kIte, f, g, h, r)) return r;
  const std::uint32_t v = std::min({level(f), level(g), level(h)});
  auto lo = [&](std::uint32_t x) { return level(x) == v ? nodes_[x].lo : x; };
  auto hi = [&](std::uint32_t x) { return level(x) == v ? nodes_[x].hi : x; };
  const std::uint32_t t = ite_rec(hi(f), hi(g), hi(h));
  const std::uint32_t e = ite_rec(lo(f), lo(g), lo(h));
  r = mk(v, e, t);
  cache_store(kIte, f, g, h, r);
  return r;
}

std::uint32_t Manager::not_rec(std::uint32_t f) {
  if (f < 2) return 1 - f;
  std::uint32_t r;
  if (cache_lookup(kNot, f, 0, 0, r)) return r;
  const Node n = nodes_[f];
  r = mk(n.var, not_rec(n.lo), not_rec(n.hi));
  cache_store(kNot, f, 0, 0, r);
  return r;
}

Bdd Manager::ite(const Bdd& f, const Bdd& g, const Bdd& h) {
  return Bdd(this, ite_rec(f.id(), g.id(), h.id()));
}
Bdd Manager::apply_and(const Bdd& f, const Bdd& g) { return Bdd(this, ite_rec(f.id(), g.id(), 0)); }
Bdd Manager::apply_or(const Bdd& f, const Bdd& g) { return Bdd(this, ite_rec(f.id(), 1, g.id())); }
Bdd Manager::apply_xor(const Bdd& f, const Bdd& g) {
  return Bdd(this, ite_rec(f.id(), not_rec(g.id()), g.id()));
}
Bdd Manager::apply_not(const Bdd& f) { return Bdd(this, not_rec(f.id())); }

std::uint32_t Manager::quant_rec(std::uint32_t f, const std::vector<bool>& vars, bool existential,
                                 std::uint32_t tag) {
  if (f < 2) return f;
  std::uint32_t r;
  if (cache_lookup(tag, f, existential, 0, r)) return r;
  const Node n = nodes_[f];
  const std::uint32_t lo = quant_rec(n.lo, vars, existential, tag);
  if (n.var < vars.size() && vars[n.var]) {
    if (existential && lo == 1) {
      r = 1;
    } else if (!existential && lo == 0) {
      r = 0;
    } else {
      const std::uint32_t hi = quant_rec(n.hi, vars, existential, tag);
      r = existential ? ite_rec(lo, 1, hi) : ite_rec(lo, hi, 0);
    }
  } else {
    r = mk(n.var, lo, quant_rec(n.hi, vars, existential, tag));
  }
  cache_store(tag, f, existential, 0, r);
  return r;
}

Bdd Manager::exists(const Bdd& f, const std::vector<bool>& vars) {
  return Bdd(this, quant_rec(f.id(), vars, true, next_tag_++));
}

Bdd Manager::forall(const Bdd& f, const std::vector<bool>& vars) {
  return Bdd(this, quant_rec(f.id(), vars, false, next_tag_++));
}

Bdd Manager::compose(const Bdd& f, const std::vector<std::optional<Bdd>>& subst) {
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  std::function<std::uint32_t(std::uint32_t)> rec = [&](std::uint32_t x) -> std::uint32_t {
    if (x < 2) return x;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const Node n = nodes_[x];
    const std::uint32_t lo = rec(n.lo);
    const std::uint32_t hi = rec(n.hi);
    std::uint32_t g;
    if (n.var < subst.size() && subst[n.var]) {
      g = subst[n.var]->id();
    } else {
      g = mk(n.var, 0, 1);
    }
    const std::uint32_t r = ite_rec(g, hi, lo);
    memo.emplace(x, r);
    return r;
  };
  return Bdd(this, rec(f.id()));
}

Bdd Manager::restrict(const Bdd& f, const std::vector<int>& assignment) {
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  std::function<std::uint32_t(std::uint32_t)> rec = [&](std::uint32_t x) -> std::uint32_t {
    if (x < 2) return x;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const Node n = nodes_[x];
    std::uint32_t r;
    const int a = n.var < assignment.size() ? assignment[n.var] : -1;
    if (a == 0) {
      r = rec(n.lo);
    } else if (a == 1) {
      r = rec(n.hi);
    } else {
      r = mk(n.var, rec(n.lo), rec(n.hi));
    }
    memo.emplace(x, r);
    return r;
  };
  return Bdd(this, rec(f.id()));
}

bool Manager::eval(const Bdd& f, const std::vector<bool>& assignment) const {
  std::uint32_t x = f.id();
  while (x >= 2) {
    const Node& n = nodes_[x];
    x = assignment[n.var] ? n.hi : n.lo;
  }
  return x == 1;
}

std::vector<int> Manager::pick_min(const Bdd& f, const std::vector<bool>& vars) {
  if (f.is_false()) return {};
  // Satisfiable positions are reachable along any path not ending in 0;
  // prefer the low branch unless it is unsatisfiable.
  std::vector<int> out(num_vars_, -1);
  std::uint32_t x = f.id();
  std::size_t next_var = 0;
  while (x >= 2) {
    const Node& n = nodes_[x];
    for (; next_var < n.var; ++next_var)
      if (next_var < vars.size() && vars[next_var]) out[next_var] = 0;
    if (n.lo != 0) {
      out[n.var] = 0;
      x = n.lo;
    } else {
      out[n.var] = 1;
      x = n.hi;
    }
    next_var = n.var + 1;
  }
  for (; next_var < num_vars_; ++next_var)
    if (next_var < vars.size() && vars[next_var]) out[next_var] = 0;
  return out;
}

std::vector<std::vector<int>> Manager::cubes(const Bdd& f) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(num_vars_, -1);
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t x) {
    if (x == 0) return;
    if (x == 1) {
      out.push_back(cur);
      return;
    }
    const Node n = nodes_[x];
    cur[n.var] = 0;
    rec(n.lo);
    cur[n.var] = 1;
    rec(n.hi);
    cur[n.var] = -1;
  };
  rec(f.id());
  return out;
}

std::vector<bool> Manager::support(const Bdd& f) {
  std::vector<bool> out(num_vars_, false);
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::uint32_t> stack{f.id()};
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    if (x < 2 || seen[x]) continue;
    seen[x] = true;
    out[nodes_[x].var] = true;
    stack.push_back(nodes_[x].lo);
    stack.push_back(nodes_[x].hi);
  }
  return out;
}

std::size_t Manager::dag_size(const Bdd& f) {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::uint32_t> stack{f.id()};
  std::size_t n = 0;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    if (seen[x]) continue;
    seen[x] = true;
    ++n;
    if (x >= 2) {
      stack.push_back(nodes_[x].lo);
      stack.push_back(nodes_[x].hi);
    }
  }
  return n;
}

}  // namespace speccc::bdd
