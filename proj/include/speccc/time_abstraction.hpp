#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "speccc/corpus.hpp"
#include "speccc/translator.hpp"

namespace speccc::time_abstraction {

/// Allowed sign of the arrival error of one duration. Zero arises when
/// requirements sharing a duration ask for opposite signs.
enum class Sign { NonNegative, NonPositive, Zero };

/// Durations rewritten on a coarser tick: theta = reduced * divisor + error.
struct TimeProfile {
  std::vector<int> thetas;  // sorted, distinct
  int divisor = 1;
  std::vector<int> reduced;
  std::vector<int> errors;
  int bound = 0;
  std::vector<Sign> signs;

  int total_reduced() const;
  int total_error() const;
};

/// Checks every profile invariant; returns an empty string when valid.
std::string validate(const TimeProfile& profile);

class UncoveredDuration : public std::runtime_error {
public:
  explicit UncoveredDuration(int theta)
      : std::runtime_error("duration " + std::to_string(theta) + " not covered by the profile"),
        theta(theta) {}
  int theta;
};

std::vector<int> collect_durations(const std::vector<translator::TranslationUnit>& units);

TimeProfile gcd_reduce(const std::vector<int>& thetas);

/// Exact optimum of (sum reduced, sum |error|, divisor) in lexicographic
/// order over divisors 1..max(theta)+bound.
TimeProfile optimize(const std::vector<int>& thetas, int bound, const std::vector<Sign>& signs);

/// Sign of each duration under the run configuration. With the
/// per-requirement policy a duration takes the sign of the requirements that
/// use it, Zero on disagreement.
std::vector<Sign> signs_for(const std::vector<int>& thetas,
                            const std::vector<translator::TranslationUnit>& units,
                            const corpus::RunConfig& config);

ltl::Formula apply_profile(const ltl::Formula& formula, const TimeProfile& profile);
std::vector<translator::TranslationUnit> apply_profile(
    const std::vector<translator::TranslationUnit>& units, const TimeProfile& profile);

/// Profile chosen by the configuration: GCD reduction or optimization.
/// An empty duration set gives the identity profile.
TimeProfile choose_profile(const std::vector<translator::TranslationUnit>& units,
                           const corpus::RunConfig& config);

/// Text report: divisor, per-duration table, total error, tick meaning.
std::string format_report(const TimeProfile& profile, int unit_time);

}  // namespace speccc::time_abstraction
