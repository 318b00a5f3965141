#include "speccc/semantic.hpp"

#include <algorithm>

namespace speccc::semantic {

const SubjectGroup* Candidates::group(const std::string& subject) const {
  auto it = std::lower_bound(groups.begin(), groups.end(), subject,
                             [](const SubjectGroup& g, const std::string& s) { return g.subject < s; });
  return it != groups.end() && it->subject == subject ? &*it : nullptr;
}

WordPair make_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::optional<std::string> candidate_word(const english::Clause& clause,
                                          const corpus::AntonymDictionary& dictionary) {
  const auto& p = clause.predicate;
  switch (p.form) {
    case english::PredicateForm::BeComplement:
      return p.head;
    case english::PredicateForm::BeParticiple:
      if (dictionary.contains(p.head)) return p.head;
      if (dictionary.contains(p.lemma)) return p.lemma;
      return std::nullopt;
    case english::PredicateForm::Verb:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

template <typename Fn>
void for_each_clause(const english::SyntaxTree& tree, Fn&& fn) {
  for (const auto& sub : tree.pre)
    for (const auto& c : sub.clauses) fn(c);
  for (const auto& c : tree.main) fn(c);
  for (const auto& sub : tree.post)
    for (const auto& c : sub.clauses) fn(c);
}

}  // namespace

Candidates extract_candidates(const std::vector<english::SyntaxTree>& trees,
                              const corpus::AntonymDictionary& dictionary) {
  std::map<std::string, std::set<std::string>> dep;
  for (const auto& tree : trees) {
    for_each_clause(tree, [&](const english::Clause& clause) {
      const auto word = candidate_word(clause, dictionary);
      for (const auto& s : clause.subjects) {
        auto& d = dep[s.name];
        if (word) d.insert(*word);
      }
    });
  }
  Candidates out;
  for (auto& [subject, words] : dep) {
    SubjectGroup g{subject, std::move(words), {}};
    for (const auto& w : g.dep) {
      g.color[w] = Color::Green;
      out.wordset.try_emplace(w, WordEntry{w, {}});
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

AntonymTable reason_antonyms(Candidates& candidates, const corpus::AntonymDictionary& dictionary) {
  AntonymTable table;
  for (auto& group : candidates.groups) {
    if (group.dep.size() <= 1) continue;
    for (const auto& w : group.dep) {
      if (group.color[w] != Color::Green) continue;
      auto& entry = candidates.wordset[w];
      if (entry.antonyms.empty() && dictionary.contains(w)) entry.antonyms = dictionary.antonyms(w);
      std::vector<std::string> found;
      std::set_intersection(group.dep.begin(), group.dep.end(), entry.antonyms.begin(),
                            entry.antonyms.end(), std::back_inserter(found));
      if (found.empty()) continue;
      group.color[w] = Color::Blue;
      for (const auto& other : found) {
        group.color[other] = Color::Blue;
        candidates.wordset[other].antonyms.insert(w);
        const WordPair pair = make_pair(w, other);
        if (table.pairs.insert(pair).second)
          table.positive_of[pair] = choose_positive(pair, dictionary);
      }
    }
  }
  return table;
}

std::string choose_positive(const WordPair& pair, const corpus::AntonymDictionary& dictionary) {
  const auto& [a, b] = pair;
  auto negative_prefix = [&](const std::string& w) -> std::optional<std::string> {
    for (const auto& prefix : dictionary.prefix_rules)
      if (w.size() > prefix.size() && w.starts_with(prefix)) return prefix;
    return std::nullopt;
  };
  for (const auto& prefix : dictionary.prefix_rules) {
    if (b == prefix + a) return a;
    if (a == prefix + b) return b;
  }
  const bool a_neg = negative_prefix(a).has_value();
  const bool b_neg = negative_prefix(b).has_value();
  if (a_neg != b_neg) return a_neg ? b : a;
  return std::min(a, b);
}

Polarity resolve(const std::string& subject, const std::string& word, const Candidates& candidates,
                 const AntonymTable& table, const corpus::AntonymDictionary& dictionary) {
  // Positives of the pairs in which `word` is the negative member.
  std::set<std::string> positives;
  bool paired = false;
  if (const SubjectGroup* g = candidates.group(subject)) {
    for (const auto& other : g->dep) {
      if (other == word) continue;
      const WordPair pair = make_pair(word, other);
      auto it = table.positive_of.find(pair);
      if (it == table.positive_of.end()) continue;
      paired = true;
      if (it->second != word) positives.insert(it->second);
    }
  }
  if (!paired && dictionary.contains(word)) {
    for (const auto& other : dictionary.antonyms(word)) {
      const std::string pos = choose_positive(make_pair(word, other), dictionary);
      if (pos != word) positives.insert(pos);
    }
    paired = !dictionary.antonyms(word).empty();
  }
  if (!paired) return {word, false, false};
  if (positives.empty()) return {word, false, true};
  return {*positives.begin(), true, true};
}

}  // namespace speccc::semantic
