#include "speccc/selftest.hpp"

#include <random>

#include "speccc/automata.hpp"
#include "speccc/ltl.hpp"
#include "speccc/oracles.hpp"
#include "speccc/synthesis.hpp"
#include "speccc/time_abstraction.hpp"

namespace speccc::selftest {

using ltl::Formula;

namespace {

class Generator {
public:
  Generator(std::vector<std::string> atoms, unsigned seed) : atoms_(std::move(atoms)), rng_(seed) {}

  Formula operator()(int depth, int& temporal_left) {
    if (depth <= 0 || pick(5) == 0) return ltl::atom(atoms_[pick(static_cast<int>(atoms_.size()))]);
    const int op = pick(temporal_left > 0 ? 10 : 4);
    if (op >= 4) --temporal_left;
    switch (op) {
      case 0: return ltl::neg((*this)(depth - 1, temporal_left));
      case 1: return ltl::conj((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
      case 2: return ltl::disj((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
      case 3: return ltl::implies((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
      case 4: return ltl::next((*this)(depth - 1, temporal_left));
      case 5: return ltl::eventually((*this)(depth - 1, temporal_left));
      case 6: return ltl::always((*this)(depth - 1, temporal_left));
      case 7: return ltl::until((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
      case 8: return ltl::weak_until((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
      default: return ltl::iff((*this)(depth - 1, temporal_left), (*this)(depth - 1, temporal_left));
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

private:
  std::vector<std::string> atoms_;
  std::mt19937 rng_;
};

}  // namespace

SuiteResult lasso_agreement(const Options& options) {
  SuiteResult r;
  r.name = "lasso evaluation vs automaton membership";
  const std::vector<std::string> atoms{"a", "b"};
  Generator gen(atoms, options.seed);
  for (int i = 0; i < options.lasso_formulas; ++i) {
    int temporal = 3;
    const Formula f = gen(4, temporal);
    const auto nba = automata::ltl_to_nba(ltl::to_nnf(f), atoms);
    for (int l = 0; l < 4; ++l) {
      oracles::Lasso lasso{atoms, {}, {}};
      for (int k = gen.pick(3); k > 0; --k) lasso.prefix.push_back(gen.pick(4));
      for (int k = 1 + gen.pick(3); k > 0; --k) lasso.loop.push_back(gen.pick(4));
      ++r.checked;
      if (oracles::eval_ltl_on_lasso(f, lasso) != nba.accepts_lasso(lasso.prefix, lasso.loop))
        r.disagreements.push_back(ltl::print_formula(f));
    }
  }
  return r;
}

SuiteResult synthesis_agreement(const Options& options) {
  SuiteResult r;
  r.name = "bounded synthesis vs brute force";
  const std::vector<std::string> atoms{"a", "b", "c"};
  Generator gen(atoms, options.seed + 1);
  for (int i = 0; i < options.synthesis_specs; ++i) {
    int temporal = 2;
    const Formula f = gen(3, temporal);
    synthesis::Signature io;
    for (const auto& a : ltl::atoms_of(f)) (gen.pick(2) ? io.inputs : io.outputs).push_back(a);
    const auto expected = oracles::brute_force_realizability(f, io);
    if (expected == oracles::BruteForceResult::Inconclusive) {
      ++r.skipped;
      continue;
    }
    const auto verdict = synthesis::check_realizability({f}, io);
    if (verdict.outcome == synthesis::Outcome::Unknown) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if ((verdict.outcome == synthesis::Outcome::Realizable) !=
        (expected == oracles::BruteForceResult::Realizable))
      r.disagreements.push_back(ltl::print_formula(f));
  }
  return r;
}

SuiteResult time_profile_agreement(const Options& options) {
  SuiteResult r;
  r.name = "time abstraction optimizer vs grid search";
  using time_abstraction::Sign;
  for (int a = 1; a <= options.max_theta; ++a) {
    for (int b = a + 1; b <= options.max_theta; b += 3) {
      for (int bound = 0; bound <= options.max_bound; ++bound) {
        for (const Sign sign : {Sign::NonNegative, Sign::NonPositive}) {
          const std::vector<int> thetas{a, b};
          const auto profile = time_abstraction::optimize(thetas, bound, {sign, sign});
          const int s = sign == Sign::NonNegative ? 1 : -1;
          const auto grid = oracles::brute_force_time_profile(thetas, bound, {s, s});
          ++r.checked;
          if (profile.total_reduced() != grid.total_reduced || profile.total_error() != grid.total_error)
            r.disagreements.push_back("{" + std::to_string(a) + "," + std::to_string(b) +
                                      "} B=" + std::to_string(bound));
        }
      }
    }
  }
  return r;
}

bool run_all(const Options& options, std::ostream& out) {
  bool ok = true;
  for (const auto& result :
       {lasso_agreement(options), synthesis_agreement(options), time_profile_agreement(options)}) {
    out << (result.passed() ? "PASS " : "FAIL ") << result.name << ": " << result.checked
        << " checked, " << result.skipped << " skipped, " << result.disagreements.size()
        << " disagreements\n";
    for (const auto& d : result.disagreements) out << "  " << d << "\n";
    ok = ok && result.passed();
  }
  return ok;
}

}  // namespace speccc::selftest
