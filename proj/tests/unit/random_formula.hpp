#pragma once

#include <random>
#include <string>
#include <vector>

#include "speccc/ltl.hpp"

namespace testing_support {

// Random formulas over the given atoms, every surface operator reachable.
class FormulaGenerator {
public:
  FormulaGenerator(std::vector<std::string> atoms, unsigned seed, bool with_timed_next = false)
      : atoms_(std::move(atoms)), rng_(seed), timed_(with_timed_next) {}

  speccc::ltl::Formula operator()(int depth) {
    using namespace speccc::ltl;
    std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(atoms_.size()) - 1);
    if (depth <= 0 || coin(0.2)) {
      const int r = std::uniform_int_distribution<int>(0, 9)(rng_);
      if (r == 0) return tt();
      if (r == 1) return ff();
      return atom(atoms_[pick_atom(rng_)]);
    }
    const int top = timed_ ? 13 : 12;
    switch (std::uniform_int_distribution<int>(0, top)(rng_)) {
      case 0: return neg((*this)(depth - 1));
      case 1: return conj((*this)(depth - 1), (*this)(depth - 1));
      case 2: return disj((*this)(depth - 1), (*this)(depth - 1));
      case 3: return implies((*this)(depth - 1), (*this)(depth - 1));
      case 4: return iff((*this)(depth - 1), (*this)(depth - 1));
      case 5: return next((*this)(depth - 1));
      case 6: return eventually((*this)(depth - 1));
      case 7: return always((*this)(depth - 1));
      case 8: return until((*this)(depth - 1), (*this)(depth - 1));
      case 9: return weak_until((*this)(depth - 1), (*this)(depth - 1));
      case 10: return conj((*this)(depth - 1), (*this)(depth - 1));
      case 11: return neg((*this)(depth - 1));
      case 12: return disj((*this)(depth - 1), (*this)(depth - 1));
      default:
        return timed_next(std::uniform_int_distribution<int>(1, 3)(rng_), (*this)(depth - 1));
    }
  }

  std::mt19937& rng() { return rng_; }

private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::vector<std::string> atoms_;
  std::mt19937 rng_;
  bool timed_;
};

}  // namespace testing_support
