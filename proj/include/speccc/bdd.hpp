#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace speccc::bdd {

class Manager;

/// Handle to a node in a Manager. Handles are plain indices; the manager
/// never frees nodes, so a handle stays valid for the manager's lifetime.
class Bdd {
public:
  Bdd() = default;

  bool is_true() const { return id_ == 1; }
  bool is_false() const { return id_ == 0; }
  bool is_const() const { return id_ < 2; }
  std::uint32_t id() const { return id_; }
  Manager* manager() const { return mgr_; }

  Bdd operator&(const Bdd& o) const;
  Bdd operator|(const Bdd& o) const;
  Bdd operator^(const Bdd& o) const;
  Bdd operator!() const;
  Bdd& operator&=(const Bdd& o) { return *this = *this & o; }
  Bdd& operator|=(const Bdd& o) { return *this = *this | o; }

  friend bool operator==(const Bdd& a, const Bdd& b) { return a.id_ == b.id_; }
  friend bool operator!=(const Bdd& a, const Bdd& b) { return a.id_ != b.id_; }

private:
  friend class Manager;
  Bdd(Manager* m, std::uint32_t id) : mgr_(m), id_(id) {}
  Manager* mgr_ = nullptr;
  std::uint32_t id_ = 0;
};

class NodeLimitExceeded : public std::runtime_error {
public:
  explicit NodeLimitExceeded(std::size_t limit)
      : std::runtime_error("BDD node limit of " + std::to_string(limit) + " exceeded") {}
};

/// Reduced ordered BDDs over variables 0..n-1 (variable i sits at level i).
class Manager {
public:
  explicit Manager(std::size_t num_vars, std::size_t node_limit = 20'000'000);
  Manager(const Manager&) = delete;
  Manager& operator=(const Manager&) = delete;

  std::size_t num_vars() const { return num_vars_; }
  std::size_t node_count() const { return nodes_.size(); }

  Bdd one() { return Bdd(this, 1); }
  Bdd zero() { return Bdd(this, 0); }
  Bdd constant(bool v) { return v ? one() : zero(); }
  Bdd var(std::size_t v);
  Bdd nvar(std::size_t v);

  Bdd ite(const Bdd& f, const Bdd& g, const Bdd& h);
  Bdd apply_and(const Bdd& f, const Bdd& g);
  Bdd apply_or(const Bdd& f, const Bdd& g);
  Bdd apply_xor(const Bdd& f, const Bdd& g);
  Bdd apply_not(const Bdd& f);

  /// Existential / universal abstraction over the variables flagged in `vars`.
  Bdd exists(const Bdd& f, const std::vector<bool>& vars);
  Bdd forall(const Bdd& f, const std::vector<bool>& vars);

  /// Simultaneous substitution: variable i is replaced by subst[i] when
  /// subst[i] is set, otherwise kept.
  Bdd compose(const Bdd& f, const std::vector<std::optional<Bdd>>& subst);

  /// Cofactor with respect to a partial assignment (-1 = unassigned).
  Bdd restrict(const Bdd& f, const std::vector<int>& assignment);

  bool eval(const Bdd& f, const std::vector<bool>& assignment) const;

  /// Lexicographically smallest satisfying assignment over `vars` (false
  /// preferred), other variables left at -1. Empty result when f is false.
  std::vector<int> pick_min(const Bdd& f, const std::vector<bool>& vars);

  /// Disjoint cubes covering f (one per path to the true terminal). Entries
  /// are 0, 1, or -1 for don't care.
  std::vector<std::vector<int>> cubes(const Bdd& f);

  std::vector<bool> support(const Bdd& f);
  std::size_t dag_size(const Bdd& f);

  void clear_caches();

  std::uint32_t top_var(const Bdd& f) const { return nodes_[f.id()].var; }
  Bdd low(const Bdd& f) { return Bdd(this, nodes_[f.id()].lo); }
  Bdd high(const Bdd& f) { return Bdd(this, nodes_[f.id()].hi); }

private:
  struct Node {
    std::uint32_t var, lo, hi;
  };
  struct CacheEntry {
    std::uint32_t a = UINT32_MAX, b = 0, c = 0, op = 0, result = 0;
  };

  std::uint32_t mk(std::uint32_t var, std::uint32_t lo, std::uint32_t hi);
  std::uint32_t level(std::uint32_t id) const { return nodes_[id].var; }
  std::uint32_t ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h);
  std::uint32_t not_rec(std::uint32_t f);
  std::uint32_t quant_rec(std::uint32_t f, const std::vector<bool>& vars, bool existential,
                          std::uint32_t tag);
  bool cache_lookup(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t& out) const;
  void cache_store(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                   std::uint32_t result);
  void grow_unique();

  std::size_t num_vars_;
  std::size_t node_limit_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> unique_;  // open addressing, UINT32_MAX = empty
  std::vector<CacheEntry> cache_;
  std::uint32_t next_tag_ = 16;
};

}  // namespace speccc::bdd
