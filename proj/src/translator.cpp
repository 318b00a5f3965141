#include "speccc/translator.hpp"

namespace speccc::translator {

using english::Clause;
using english::ClauseGroup;
using ltl::Formula;

std::string PropositionFactory::name(const Key& key, bool via_dictionary) {
  std::string n = key.word + "_" + key.subject;
  auto [it, inserted] = by_name_.try_emplace(n, key);
  if (!inserted && it->second != key)
    throw UnsupportedConstruct("proposition name " + n + " is ambiguous");
  uses_[key].via_dictionary |= via_dictionary;
  return n;
}

namespace {

const std::set<std::string> kConditionSubordinators{"if", "when", "whenever", "once", "after", "while"};

// "and" binds tighter than "or".
Formula combine(const std::vector<std::pair<std::string, Formula>>& items) {
  std::vector<Formula> disjuncts;
  std::vector<Formula> current;
  for (const auto& [conjunction, f] : items) {
    if (conjunction == "or" && !current.empty()) {
      disjuncts.push_back(ltl::conj_all(current));
      current.clear();
    }
    current.push_back(f);
  }
  disjuncts.push_back(ltl::conj_all(current));
  return ltl::disj_all(disjuncts);
}

int seconds_of(const english::TimeConstraint& c) {
  // Only second(s) exist in the lexicon.
  return c.amount;
}

Formula clause_formula(const Clause& clause, PropositionFactory& factory, const Context& context) {
  Formula f = clause_to_literal(clause, factory, context);
  const auto& p = clause.predicate;
  const bool eventual =
      (clause.modifier && (*clause.modifier == "eventually" || *clause.modifier == "sometimes")) ||
      p.modality == "will";
  if (clause.constraint) {
    const int seconds = seconds_of(*clause.constraint);
    const int unit = context.options.unit_time;
    if (seconds % unit != 0)
      throw UnsupportedConstruct("time constant " + std::to_string(seconds) +
                                 " is not a multiple of the unit time " + std::to_string(unit));
    f = ltl::timed_next(seconds / unit, f);
  } else if (eventual) {
    f = ltl::eventually(f);
  }
  if (clause.next && context.options.next_as_x) f = ltl::next(f);
  return f;
}

Formula group_formula(const ClauseGroup& group, PropositionFactory& factory, const Context& context) {
  std::vector<std::pair<std::string, Formula>> items;
  for (const auto& clause : group)
    items.emplace_back(clause.join.conjunction, clause_formula(clause, factory, context));
  return combine(items);
}

}  // namespace

Formula clause_to_literal(const Clause& clause, PropositionFactory& factory, const Context& context) {
  const auto word = semantic::candidate_word(clause, context.dictionary);
  std::vector<Formula> literals;
  for (const auto& subject : clause.subjects) {
    bool negated = clause.negated;
    std::string name;
    if (word) {
      const auto pol = semantic::resolve(subject.name, *word, context.candidates, context.table,
                                         context.dictionary);
      negated = negated != pol.negated;
      name = factory.name({pol.positive, subject.name, PropositionFactory::Source::Complement},
                          pol.via_dictionary);
    } else {
      name = factory.name({clause.predicate.lemma, subject.name, PropositionFactory::Source::Verb},
                          false);
    }
    literals.push_back(negated ? ltl::neg(ltl::atom(name)) : ltl::atom(name));
  }
  // A bare comma takes the next explicit conjunction of the list.
  std::vector<std::pair<std::string, Formula>> items;
  std::string pending = "and";
  std::vector<std::string> joins(clause.subjects.size());
  for (std::size_t i = clause.subjects.size(); i-- > 0;) {
    const auto& j = clause.subjects[i].join;
    if (!j.conjunction.empty()) pending = j.conjunction;
    joins[i] = j.conjunction.empty() && j.comma ? pending : j.conjunction;
  }
  for (std::size_t i = 0; i < literals.size(); ++i) items.emplace_back(joins[i], literals[i]);
  return combine(items);
}

TranslationUnit tree_to_formula(const std::string& id, const english::SyntaxTree& tree,
                                PropositionFactory& factory, const Context& context) {
  std::vector<Formula> antecedents;
  auto add_condition = [&](const english::Subclause& sub) {
    if (!kConditionSubordinators.contains(sub.subordinator))
      throw UnsupportedConstruct("no template for a \"" + sub.subordinator + "\" subclause here");
    antecedents.push_back(group_formula(sub.clauses, factory, context));
  };
  for (const auto& sub : tree.pre) add_condition(sub);
  Formula consequent = group_formula(tree.main, factory, context);
  std::optional<Formula> release;
  for (const auto& sub : tree.post) {
    if (sub.subordinator == "until") {
      if (release) throw UnsupportedConstruct("more than one \"until\" subclause");
      release = group_formula(sub.clauses, factory, context);
    } else {
      add_condition(sub);
    }
  }
  if (release) {
    // The obligation holds from every point where the release has not yet happened.
    antecedents.push_back(ltl::neg(*release));
    consequent = ltl::weak_until(consequent, *release);
  }
  Formula f = consequent;
  if (antecedents.empty()) {
    f = ltl::always(f);
  } else {
    for (std::size_t i = antecedents.size(); i-- > 0;) f = ltl::always(ltl::implies(antecedents[i], f));
  }
  return {id, f, ltl::atoms_of(f)};
}

std::map<std::string, std::string> abbreviate(const PropositionFactory& factory) {
  struct Summary {
    std::set<std::string> words;
    bool via_dictionary = false;
  };
  std::map<std::string, Summary> by_subject;
  std::set<std::string> taken;
  for (const auto& [key, use] : factory.uses()) {
    taken.insert(key.word + "_" + key.subject);
    if (key.source != PropositionFactory::Source::Complement) continue;
    auto& s = by_subject[key.subject];
    s.words.insert(key.word);
    s.via_dictionary |= use.via_dictionary;
  }
  std::map<std::string, std::string> renaming;
  for (const auto& [subject, s] : by_subject) {
    if (s.words.size() != 1 || !s.via_dictionary || taken.contains(subject)) continue;
    renaming[*s.words.begin() + "_" + subject] = subject;
  }
  return renaming;
}

english::Lexicon corpus_lexicon(english::Lexicon base, const corpus::AntonymDictionary& dictionary) {
  for (const auto& [word, antonyms] : dictionary.entries) base.qualifiers.insert(word);
  return base;
}

CorpusTranslation translate_corpus(const std::vector<corpus::Requirement>& requirements,
                                   const corpus::AntonymDictionary& dictionary,
                                   const english::Lexicon& lexicon, const Options& options) {
  CorpusTranslation out;
  for (const auto& req : requirements) {
    try {
      out.trees.push_back(english::parse_sentence(req.text, lexicon));
    } catch (const english::ParseError& e) {
      throw RequirementError(req, e.what(), e.position());
    }
  }
  out.candidates = semantic::extract_candidates(out.trees, dictionary);
  out.table = semantic::reason_antonyms(out.candidates, dictionary);
  PropositionFactory factory;
  const Context context{dictionary, out.candidates, out.table, options};
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    try {
      out.units.push_back(tree_to_formula(requirements[i].id, out.trees[i], factory, context));
    } catch (const UnsupportedConstruct& e) {
      throw RequirementError(requirements[i], e.what(), 0);
    }
  }
  out.abbreviations = abbreviate(factory);
  for (auto& unit : out.units) {
    unit.formula = ltl::rename_atoms(unit.formula, out.abbreviations);
    unit.propositions = ltl::atoms_of(unit.formula);
  }
  return out;
}

}  // namespace speccc::translator
