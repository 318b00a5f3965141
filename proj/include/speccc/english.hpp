#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace speccc::english {

enum class TokenKind { Word, UnderscoreWord, Number, Comma, Period };

struct Token {
  std::string surface;
  TokenKind kind;
  std::size_t position;  // column, 0-based
  friend bool operator==(const Token&, const Token&) = default;
};

enum class ErrorKind {
  EmptySentence,
  IllegalCharacter,
  GrammarViolation,
  UnknownSubordinator,
  MissingPredicate
};

class ParseError : public std::runtime_error {
public:
  ParseError(ErrorKind kind, std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}
  ErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  ErrorKind kind_;
  std::size_t position_;
};

/// Closed word classes of the grammar plus the lemmatizer's exceptions.
struct Lexicon {
  std::set<std::string> modals{"shall", "should", "will", "would", "can", "could", "must"};
  std::set<std::string> subordinators{"if",     "after", "once",  "when", "whenever",
                                      "while",  "before", "until", "next"};
  std::set<std::string> modifiers{"globally", "always", "sometimes", "eventually"};
  std::set<std::string> conjunctions{"and", "or"};
  std::set<std::string> be_forms{"is",     "are",  "be",      "been",  "being", "was",
                                 "were",   "remain", "remains", "stay", "stays", "become",
                                 "becomes"};
  std::set<std::string> filters{"the", "a", "an", "then"};
  std::set<std::string> negators{"not", "no"};
  std::set<std::string> time_units{"second", "seconds"};
  std::set<std::string> particles{"on", "off", "in", "out", "up", "down"};
  std::set<std::string> pronouns{"it"};
  /// Subordinating words outside the grammar, rejected with a clear error.
  std::set<std::string> foreign_subordinators{"unless", "because", "since", "although",
                                              "though", "whereas"};
  /// Adjectives allowed before a noun as qualifiers ("a valid blood_pressure").
  std::set<std::string> qualifiers;
  std::map<std::string, std::string> verb_exceptions{{"lost", "lose"}};

  /// Extension lines "word : class" where class is one of modal, be,
  /// filter, particle, qualifier, or lemma=<lemma>.
  void extend(std::string_view content);
};

std::vector<Token> tokenize(std::string_view text);

/// Rule-based lemma: exception table, then -ing/-ed/-s stripping with
/// undoubling and silent-e restoration. Lowercases.
std::string lemmatize(std::string_view word, const Lexicon& lexicon);

enum class PredicateForm { Verb, BeParticiple, BeComplement };

struct PredicateInfo {
  std::string modality;  // empty when absent
  std::string be;        // be-form surface, empty for verbs
  PredicateForm form = PredicateForm::Verb;
  std::string head;      // lowercased content word
  std::string lemma;     // lemma for verbs and participles, head for complements
  std::string particle;  // "on" in "powered on", empty when absent
  bool not_before_be = false;  // "will not be" rather than "is not"
};

struct TimeConstraint {
  int amount = 0;
  std::string unit;
};

struct Join {
  std::string conjunction;  // "and" / "or"; empty for the first element
  bool comma = false;
};

struct Subject {
  std::string name;  // lowercased, multi-word subjects fused with '_'
  std::string surface;  // words as written, space separated
  std::vector<std::string> qualifiers;
  std::string pronoun;  // surface pronoun when the subject was resolved from one
  Join join;
};

struct Clause {
  std::optional<std::string> modifier;
  bool next = false;
  std::vector<Subject> subjects;
  PredicateInfo predicate;
  bool negated = false;
  std::optional<TimeConstraint> constraint;
  Join join;  // joining with the previous clause of the group
};

using ClauseGroup = std::vector<Clause>;

struct Subclause {
  std::string subordinator;
  ClauseGroup clauses;
  bool comma = true;  // post-subclauses may follow the main group without one
};

struct SyntaxTree {
  std::vector<Subclause> pre;
  ClauseGroup main;
  std::vector<Subclause> post;
};

SyntaxTree parse_sentence(const std::vector<Token>& tokens, const Lexicon& lexicon);
SyntaxTree parse_sentence(std::string_view text, const Lexicon& lexicon);

/// Sentence text reconstructed from a tree, without filter words.
std::string unparse(const SyntaxTree& tree);

}  // namespace speccc::english
