#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "speccc/corpus.hpp"
#include "speccc/english.hpp"

namespace speccc::semantic {

enum class Color { Green, Blue };

/// A word whose antonyms are looked up during reasoning.
struct WordEntry {
  std::string word;
  std::set<std::string> antonyms;
};

/// Candidate words used as be-predicates of one subject. Colors are kept
/// per group member.
struct SubjectGroup {
  std::string subject;
  std::set<std::string> dep;
  std::map<std::string, Color> color;
};

struct Candidates {
  std::vector<SubjectGroup> groups;  // sorted by subject
  std::map<std::string, WordEntry> wordset;

  const SubjectGroup* group(const std::string& subject) const;
};

/// Unordered pair stored with first < second.
using WordPair = std::pair<std::string, std::string>;
WordPair make_pair(std::string a, std::string b);

struct AntonymTable {
  std::set<WordPair> pairs;
  std::map<WordPair, std::string> positive_of;
};

/// Candidate word of a clause: the complement of a be-predicate, or a
/// participle that the dictionary lists (as written, else its lemma).
std::optional<std::string> candidate_word(const english::Clause& clause,
                                          const corpus::AntonymDictionary& dictionary);

Candidates extract_candidates(const std::vector<english::SyntaxTree>& trees,
                              const corpus::AntonymDictionary& dictionary);

/// Pairs dictionary-linked words that share a subject group with more than
/// one candidate, coloring both members blue in that group.
AntonymTable reason_antonyms(Candidates& candidates, const corpus::AntonymDictionary& dictionary);

/// Prefix rule first ("unavailable" is "un" + "available"), then a word
/// without a negative prefix against one with it, then the smaller word.
std::string choose_positive(const WordPair& pair, const corpus::AntonymDictionary& dictionary);

struct Polarity {
  std::string positive;   // word naming the proposition
  bool negated = false;   // the original word means the negation of `positive`
  bool via_dictionary = false;
};

/// How a candidate word of `subject` turns into a literal. Words paired in
/// the subject's group follow the table. Other words with dictionary
/// antonyms resolve against them with choose_positive, so a lone "low"
/// reads as not "high". Words unknown to the dictionary stay as they are.
Polarity resolve(const std::string& subject, const std::string& word, const Candidates& candidates,
                 const AntonymTable& table, const corpus::AntonymDictionary& dictionary);

}  // namespace speccc::semantic
