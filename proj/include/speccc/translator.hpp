#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "speccc/corpus.hpp"
#include "speccc/english.hpp"
#include "speccc/ltl.hpp"
#include "speccc/semantic.hpp"

namespace speccc::translator {

/// A sentence the grammar accepts but no template covers.
class UnsupportedConstruct : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int unit_time = 1;
  /// Emit X for "next" on a clause. Off by default: the reference CARA
  /// translations keep "next" consequents in the same step.
  bool next_as_x = false;
};

/// Context shared by every requirement of a corpus.
struct Context {
  const corpus::AntonymDictionary& dictionary;
  const semantic::Candidates& candidates;
  const semantic::AntonymTable& table;
  Options options;
};

/// Central registry of proposition names "word_subject".
class PropositionFactory {
public:
  enum class Source { Verb, Complement };

  struct Key {
    std::string word;  // lemma for verbs, resolved positive word for complements
    std::string subject;
    Source source;
    auto operator<=>(const Key&) const = default;
  };

  struct Use {
    bool via_dictionary = false;
  };

  /// Registers the proposition and returns its name.
  std::string name(const Key& key, bool via_dictionary);
  const std::map<Key, Use>& uses() const { return uses_; }

private:
  std::map<Key, Use> uses_;
  std::map<std::string, Key> by_name_;
};

struct TranslationUnit {
  std::string id;
  ltl::Formula formula;
  std::set<std::string> propositions;
};

/// Literal(s) of one clause: one per subject, joined by the subject list's
/// conjunctions. Negation and antonym polarity are folded in; modal and
/// temporal decorations are not.
ltl::Formula clause_to_literal(const english::Clause& clause, PropositionFactory& factory,
                               const Context& context);

TranslationUnit tree_to_formula(const std::string& id, const english::SyntaxTree& tree,
                                PropositionFactory& factory, const Context& context);

/// Renames "positive_subject" to "subject" for every subject whose
/// candidate words all resolve to one dictionary-backed positive word,
/// unless the short name is already taken.
std::map<std::string, std::string> abbreviate(const PropositionFactory& factory);

/// Error of a whole-corpus run, tagged with the requirement.
class RequirementError : public std::runtime_error {
public:
  RequirementError(const corpus::Requirement& req, const std::string& what, std::size_t column)
      : std::runtime_error(req.id + " (line " + std::to_string(req.line) + ", column " +
                           std::to_string(column) + "): " + what),
        id(req.id),
        line(req.line),
        column(column) {}
  std::string id;
  int line;
  std::size_t column;
};

struct CorpusTranslation {
  std::vector<english::SyntaxTree> trees;
  semantic::Candidates candidates;
  semantic::AntonymTable table;
  std::vector<TranslationUnit> units;  // abbreviations applied
  std::map<std::string, std::string> abbreviations;
};

/// Lexicon used for a corpus: the given one with dictionary words added as
/// subject qualifiers.
english::Lexicon corpus_lexicon(english::Lexicon base, const corpus::AntonymDictionary& dictionary);

CorpusTranslation translate_corpus(const std::vector<corpus::Requirement>& requirements,
                                   const corpus::AntonymDictionary& dictionary,
                                   const english::Lexicon& lexicon, const Options& options = {});

}  // namespace speccc::translator
