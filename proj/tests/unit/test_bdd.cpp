#include <doctest.h>

#include <random>

#include "speccc/bdd.hpp"

using namespace speccc::bdd;

namespace {

bool truth(const std::vector<bool>& v, unsigned mask) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != bool(mask >> i & 1)) return false;
  return true;
}

std::vector<bool> bits(unsigned mask, std::size_t n) {
  std::vector<bool> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = mask >> i & 1;
  return v;
}

}  // namespace

TEST_CASE("bdd boolean operations are canonical") {
  Manager m(3);
  const Bdd a = m.var(0), b = m.var(1), c = m.var(2);
  CHECK(((a & b) == (b & a)));
  CHECK(((a | (b & c)) == ((a | b) & (a | c))));
  CHECK(((!(a & b)) == ((!a) | (!b))));
  CHECK((a ^ a).is_false());
  CHECK((a | !a).is_true());
  CHECK((m.ite(a, b, c) == ((a & b) | ((!a) & c))));
  CHECK((m.nvar(1) == !b));
}

TEST_CASE("bdd quantification, composition and restriction") {
  Manager m(3);
  const Bdd a = m.var(0), b = m.var(1), c = m.var(2);
  const Bdd f = (a & b) | c;
  CHECK((m.exists(f, {false, true, false}) == (a | c)));
  CHECK((m.forall(f, {false, true, false}) == c));
  CHECK(m.exists(f, {true, true, true}).is_true());
  std::vector<std::optional<Bdd>> sub(3);
  sub[2] = a & !b;
  CHECK((m.compose(f, sub) == a));
  CHECK((m.restrict(f, {1, 0, -1}) == c));
  CHECK(m.support(f) == std::vector<bool>{true, true, true});
}

TEST_CASE("bdd against truth tables") {
  std::mt19937 rng(5);
  for (int round = 0; round < 50; ++round) {
    Manager m(4);
    std::vector<Bdd> pool{m.var(0), m.var(1), m.var(2), m.var(3)};
    std::vector<unsigned> tables{0xAAAA, 0xCCCC, 0xF0F0, 0xFF00};
    for (int step = 0; step < 12; ++step) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const std::size_t i = pick(rng), j = pick(rng);
      switch (rng() % 3) {
        case 0: pool.push_back(pool[i] & pool[j]); tables.push_back(tables[i] & tables[j]); break;
        case 1: pool.push_back(pool[i] | pool[j]); tables.push_back(tables[i] | tables[j]); break;
        default: pool.push_back(!pool[i]); tables.push_back(~tables[i] & 0xFFFF); break;
      }
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
      for (unsigned x = 0; x < 16; ++x)
        CHECK(m.eval(pool[k], bits(x, 4)) == bool(tables[k] >> x & 1));
      // cubes are a disjoint cover
      unsigned covered = 0;
      for (const auto& cube : m.cubes(pool[k]))
        for (unsigned x = 0; x < 16; ++x) {
          bool in = true;
          for (int v = 0; v < 4; ++v)
            if (cube[v] >= 0 && cube[v] != int(x >> v & 1)) in = false;
          if (in) {
            CHECK_FALSE(((covered >> x) & 1));
            covered |= 1u << x;
          }
        }
      CHECK(covered == tables[k]);
    }
  }
}

TEST_CASE("pick_min returns the smallest model") {
  Manager m(3);
  const Bdd f = (m.var(0) | m.var(1)) & !m.var(2);
  const auto p = m.pick_min(f, {true, true, true});
  CHECK(p == std::vector<int>{0, 1, 0});
  CHECK(m.pick_min(m.zero(), {true, true, true}).empty());
  (void)truth;
}
