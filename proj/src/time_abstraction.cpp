#include "speccc/time_abstraction.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace speccc::time_abstraction {

int TimeProfile::total_reduced() const { return std::accumulate(reduced.begin(), reduced.end(), 0); }

int TimeProfile::total_error() const {
  int sum = 0;
  for (int e : errors) sum += std::abs(e);
  return sum;
}

std::string validate(const TimeProfile& p) {
  const std::size_t n = p.thetas.size();
  if (p.reduced.size() != n || p.errors.size() != n || p.signs.size() != n) return "size mismatch";
  if (p.divisor < 1) return "divisor must be positive";
  if (p.bound < 0) return "bound must be non-negative";
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && p.thetas[i - 1] >= p.thetas[i]) return "durations not sorted and distinct";
    if (p.thetas[i] != p.reduced[i] * p.divisor + p.errors[i]) return "decomposition mismatch";
    if (p.reduced[i] < 0) return "negative reduced length";
    if (p.errors[i] <= -p.divisor || p.errors[i] >= p.divisor) return "error out of range";
    if (p.signs[i] == Sign::NonNegative && p.errors[i] < 0) return "negative error under nonneg";
    if (p.signs[i] == Sign::NonPositive && p.errors[i] > 0) return "positive error under nonpos";
    if (p.signs[i] == Sign::Zero && p.errors[i] != 0) return "non-zero error under zero sign";
  }
  if (p.total_error() > p.bound) return "total error exceeds bound";
  return {};
}

std::vector<int> collect_durations(const std::vector<translator::TranslationUnit>& units) {
  std::set<int> all;
  for (const auto& u : units)
    for (int n : ltl::timed_next_lengths(u.formula)) all.insert(n);
  return {all.begin(), all.end()};
}

TimeProfile gcd_reduce(const std::vector<int>& thetas) {
  if (thetas.empty()) throw std::invalid_argument("gcd_reduce needs at least one duration");
  TimeProfile p;
  p.thetas = thetas;
  p.divisor = 0;
  for (int t : thetas) p.divisor = std::gcd(p.divisor, t);
  for (int t : thetas) {
    p.reduced.push_back(t / p.divisor);
    p.errors.push_back(0);
    p.signs.push_back(Sign::Zero);
  }
  return p;
}

namespace {

// The single admissible (reduced, error) for one duration at divisor d.
std::optional<std::pair<int, int>> split(int theta, int d, Sign sign) {
  const int q = theta / d;
  const int r = theta % d;
  if (r == 0) return std::pair{q, 0};
  if (sign == Sign::NonNegative) return std::pair{q, r};
  if (sign == Sign::NonPositive) return std::pair{q + 1, r - d};
  return std::nullopt;
}

}  // namespace

TimeProfile optimize(const std::vector<int>& thetas, int bound, const std::vector<Sign>& signs) {
  if (thetas.empty()) throw std::invalid_argument("optimize needs at least one duration");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  if (signs.size() != thetas.size()) throw std::invalid_argument("one sign per duration expected");
  const int max_theta = *std::max_element(thetas.begin(), thetas.end());
  std::optional<TimeProfile> best;
  for (int d = 1; d <= max_theta + bound; ++d) {
    TimeProfile p{thetas, d, {}, {}, bound, signs};
    bool feasible = true;
    for (std::size_t i = 0; i < thetas.size() && feasible; ++i) {
      const auto s = split(thetas[i], d, signs[i]);
      if (!s) {
        feasible = false;
        break;
      }
      p.reduced.push_back(s->first);
      p.errors.push_back(s->second);
    }
    if (!feasible || p.total_error() > bound) continue;
    if (!best || std::pair{p.total_reduced(), p.total_error()} <
                     std::pair{best->total_reduced(), best->total_error()})
      best = std::move(p);
  }
  assert(best);  // d = 1 is always feasible
  return *best;
}

std::vector<Sign> signs_for(const std::vector<int>& thetas,
                            const std::vector<translator::TranslationUnit>& units,
                            const corpus::RunConfig& config) {
  using corpus::SignPolicy;
  if (config.sign_policy == SignPolicy::NonNegative) return std::vector(thetas.size(), Sign::NonNegative);
  if (config.sign_policy == SignPolicy::NonPositive) return std::vector(thetas.size(), Sign::NonPositive);
  std::map<int, std::set<int>> wanted;
  for (const auto& u : units) {
    auto it = config.requirement_signs.find(u.id);
    const int sign = it == config.requirement_signs.end() ? 1 : it->second;
    for (int n : ltl::timed_next_lengths(u.formula)) wanted[n].insert(sign);
  }
  std::vector<Sign> out;
  for (int t : thetas) {
    const auto& s = wanted[t];
    if (s.size() > 1) out.push_back(Sign::Zero);
    else out.push_back(s.contains(-1) ? Sign::NonPositive : Sign::NonNegative);
  }
  return out;
}

ltl::Formula apply_profile(const ltl::Formula& f, const TimeProfile& profile) {
  using ltl::Op;
  if (f.op() == Op::Atom || f.op() == Op::True || f.op() == Op::False) return f;
  const ltl::Formula lhs = apply_profile(f.lhs(), profile);
  if (f.op() == Op::TimedNext) {
    auto it = std::lower_bound(profile.thetas.begin(), profile.thetas.end(), f.count());
    if (it == profile.thetas.end() || *it != f.count()) throw UncoveredDuration(f.count());
    const int reduced = profile.reduced[static_cast<std::size_t>(it - profile.thetas.begin())];
    if (reduced == 0) return lhs;
    return reduced == 1 ? ltl::next(lhs) : ltl::timed_next(reduced, lhs);
  }
  const ltl::Formula rhs = f.is_binary() ? apply_profile(f.rhs(), profile) : ltl::Formula();
  return ltl::make(f.op(), std::string(), f.count(), lhs, rhs);
}

std::vector<translator::TranslationUnit> apply_profile(
    const std::vector<translator::TranslationUnit>& units, const TimeProfile& profile) {
  std::vector<translator::TranslationUnit> out;
  for (const auto& u : units) {
    ltl::Formula f = apply_profile(u.formula, profile);
    out.push_back({u.id, f, ltl::atoms_of(f)});
  }
  return out;
}

TimeProfile choose_profile(const std::vector<translator::TranslationUnit>& units,
                           const corpus::RunConfig& config) {
  const auto thetas = collect_durations(units);
  if (thetas.empty()) return TimeProfile{};
  if (config.gcd_only) return gcd_reduce(thetas);
  return optimize(thetas, config.delta_bound, signs_for(thetas, units, config));
}

std::string format_report(const TimeProfile& p, int unit_time) {
  std::ostringstream out;
  if (p.thetas.empty()) {
    out << "no time constraints\n";
    return out.str();
  }
  out << "divisor: " << p.divisor << "\n";
  out << "1 abstract tick = " << p.divisor * unit_time << " seconds\n";
  out << "duration reduced error\n";
  for (std::size_t i = 0; i < p.thetas.size(); ++i)
    out << p.thetas[i] << " " << p.reduced[i] << " " << p.errors[i] << "\n";
  out << "total error: " << p.total_error() << " (bound " << p.bound << ")\n";
  return out.str();
}

}  // namespace speccc::time_abstraction
