#include "speccc/english.hpp"

#include <cctype>
#include <sstream>

namespace speccc::english {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Repairs a stem left by stripping -ed/-ing.
std::string restore_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) && stem[n - 1] != 'l' &&
      stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  for (std::string_view suffix : {"at", "bl", "iz", "id", "ur", "uc", "iv", "ov", "us", "is", "u"})
    if (ends_with(stem, suffix)) return stem + "e";
  return stem;
}

}  // namespace

void Lexicon::extend(std::string_view content) {
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                  ": expected \"word : class\"");
    const std::string word = lower(trim(line.substr(0, colon)));
    const std::string cls = trim(line.substr(colon + 1));
    if (cls == "modal") modals.insert(word);
    else if (cls == "be") be_forms.insert(word);
    else if (cls == "filter") filters.insert(word);
    else if (cls == "particle") particles.insert(word);
    else if (cls == "qualifier") qualifiers.insert(word);
    else if (cls.starts_with("lemma=")) verb_exceptions[word] = lower(trim(cls.substr(6)));
    else
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                  ": unknown class " + cls);
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    any = true;
    if (c == ',') {
      out.push_back({",", TokenKind::Comma, i++});
    } else if (c == '.') {
      out.push_back({".", TokenKind::Period, i++});
    } else if (is_word_char(c)) {
      const std::size_t start = i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      std::string w(text.substr(start, i - start));
      TokenKind kind = TokenKind::Word;
      bool digits = true;
      for (char ch : w) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
      if (digits) kind = TokenKind::Number;
      else if (w.find('_') != std::string::npos) kind = TokenKind::UnderscoreWord;
      out.push_back({std::move(w), kind, start});
    } else {
      throw ParseError(ErrorKind::IllegalCharacter,
                       std::string("illegal character '") + c + "' at column " + std::to_string(i),
                       i);
    }
  }
  if (!any) throw ParseError(ErrorKind::EmptySentence, "empty sentence", 0);
  return out;
}

std::string lemmatize(std::string_view raw, const Lexicon& lexicon) {
  const std::string w = lower(raw);
  if (auto it = lexicon.verb_exceptions.find(w); it != lexicon.verb_exceptions.end())
    return it->second;
  if (ends_with(w, "ing") && w.size() > 4) return restore_stem(w.substr(0, w.size() - 3));
  if (ends_with(w, "ed") && w.size() > 3) return restore_stem(w.substr(0, w.size() - 2));
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view suffix : {"ches", "shes", "sses", "xes", "zes"})
    if (ends_with(w, suffix)) return w.substr(0, w.size() - 2);
  if (ends_with(w, "s") && w.size() > 2 && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is"))
    return w.substr(0, w.size() - 1);
  return w;
}

namespace {

class Parser {
public:
  Parser(const std::vector<Token>& tokens, const Lexicon& lexicon)
      : tokens_(tokens), lex_(lexicon) {}

  SyntaxTree parse() {
    if (tokens_.empty()) throw ParseError(ErrorKind::EmptySentence, "empty sentence", 0);
    if (tokens_.back().kind != TokenKind::Period)
      fail(ErrorKind::GrammarViolation, "sentence must end with a period", tokens_.size() - 1);
    SyntaxTree tree;
    for (;;) {
      skip_filters();
      check_foreign();
      const std::string w = word(0);
      if (w.empty() || w == "next" || !lex_.subordinators.contains(w)) break;
      ++pos_;
      Subclause sub{w, parse_group(), true};
      if (kind(0) != TokenKind::Comma) expected("',' after a subordinate clause");
      ++pos_;
      tree.pre.push_back(std::move(sub));
    }
    tree.main = parse_group();
    while (kind(0) != TokenKind::Period) {
      bool comma = false;
      if (kind(0) == TokenKind::Comma) {
        comma = true;
        ++pos_;
      }
      check_foreign();
      const std::string w = word(0);
      if (w.empty() || w == "next" || !lex_.subordinators.contains(w))
        expected("subordinator or '.'");
      ++pos_;
      tree.post.push_back({w, parse_group(), comma});
    }
    ++pos_;
    if (pos_ != tokens_.size()) expected("end of sentence");
    return tree;
  }

private:
  [[noreturn]] void fail(ErrorKind k, const std::string& msg, std::size_t index) const {
    const std::size_t col = index < tokens_.size() ? tokens_[index].position : 0;
    throw ParseError(k, msg + " at column " + std::to_string(col), col);
  }

  [[noreturn]] void expected(const std::string& what) const {
    const std::string found = pos_ < tokens_.size() ? tokens_[pos_].surface : "end of input";
    fail(ErrorKind::GrammarViolation, "expected " + what + ", found '" + found + "'", pos_);
  }

  TokenKind kind(std::size_t k) const {
    return pos_ + k < tokens_.size() ? tokens_[pos_ + k].kind : TokenKind::Period;
  }

  // Lowercased word at offset k, empty for punctuation, numbers or the end.
  std::string word(std::size_t k) const {
    if (pos_ + k >= tokens_.size()) return {};
    const Token& t = tokens_[pos_ + k];
    if (t.kind != TokenKind::Word && t.kind != TokenKind::UnderscoreWord) return {};
    return lower(t.surface);
  }

  void skip_filters() {
    while (lex_.filters.contains(word(0))) ++pos_;
  }

  void check_foreign() const {
    if (lex_.foreign_subordinators.contains(word(0)))
      fail(ErrorKind::UnknownSubordinator, "unknown subordinator '" + word(0) + "'", pos_);
  }

  bool at_constraint() const {
    return word(0) == "in" && kind(1) == TokenKind::Number;
  }

  bool is_stop(std::size_t k) const {
    const TokenKind tk = kind(k);
    if (tk == TokenKind::Comma || tk == TokenKind::Period || tk == TokenKind::Number) return true;
    const std::string w = word(k);
    if (w == "in" && kind(k + 1) == TokenKind::Number) return true;
    return lex_.be_forms.contains(w) || lex_.modals.contains(w) || lex_.negators.contains(w) ||
           lex_.conjunctions.contains(w) || lex_.subordinators.contains(w) ||
           lex_.modifiers.contains(w) || lex_.filters.contains(w);
  }

  bool at_predicate_start() const {
    const std::string w = word(0);
    return lex_.be_forms.contains(w) || lex_.modals.contains(w) || w == "not";
  }

  ClauseGroup parse_group() {
    ClauseGroup group;
    group.push_back(parse_clause());
    for (;;) {
      Join join;
      if (lex_.conjunctions.contains(word(0))) {
        join.conjunction = word(0);
        ++pos_;
      } else if (kind(0) == TokenKind::Comma && lex_.conjunctions.contains(word(1))) {
        join = {word(1), true};
        pos_ += 2;
      } else {
        break;
      }
      Clause c = parse_clause();
      c.join = join;
      group.push_back(std::move(c));
    }
    const TokenKind k = kind(0);
    if (k != TokenKind::Comma && k != TokenKind::Period && !lex_.subordinators.contains(word(0)))
      expected("',' or a conjunction between clauses");
    return group;
  }

  Clause parse_clause() {
    Clause clause;
    for (bool progress = true; progress;) {
      progress = false;
      skip_filters();
      const std::string w = word(0);
      if (!clause.modifier && lex_.modifiers.contains(w)) {
        clause.modifier = w;
        ++pos_;
        progress = true;
      } else if (!clause.next && w == "next") {
        clause.next = true;
        ++pos_;
        progress = true;
      }
    }
    check_foreign();
    const std::size_t start = pos_;
    clause.subjects = parse_subject_list();
    if (at_predicate_start()) {
      parse_be_or_modal_predicate(clause);
    } else {
      // Verb predicate: "<subject words> <verb>".
      pos_ = start;
      skip_filters();
      std::vector<std::size_t> run;
      while (!is_stop(run.size())) run.push_back(pos_ + run.size());
      if (run.size() < 2) fail(ErrorKind::MissingPredicate, "missing predicate", pos_ + run.size());
      std::vector<std::size_t> subject_words(run.begin(), run.end() - 1);
      clause.subjects = {make_subject(subject_words)};
      pos_ = run.back() + 1;
      const std::string verb = lower(tokens_[run.back()].surface);
      clause.predicate.form = PredicateForm::Verb;
      clause.predicate.head = verb;
      clause.predicate.lemma = lemmatize(verb, lex_);
    }
    if (at_constraint()) {
      ++pos_;
      const int amount = std::stoi(tokens_[pos_].surface);
      if (amount < 1) fail(ErrorKind::GrammarViolation, "time constant must be positive", pos_);
      ++pos_;
      const std::string unit = word(0);
      if (!lex_.time_units.contains(unit)) expected("time unit");
      ++pos_;
      clause.constraint = TimeConstraint{amount, unit};
    }
    if (!clause.subjects.empty()) last_subject_ = clause.subjects.back().name;
    return clause;
  }

  std::vector<Subject> parse_subject_list() {
    std::vector<Subject> subjects;
    Join join;
    for (;;) {
      skip_filters();
      if (word(0) == "no")
        fail(ErrorKind::GrammarViolation, "'no' before a noun is outside the grammar", pos_);
      std::vector<std::size_t> run;
      while (!is_stop(run.size())) run.push_back(pos_ + run.size());
      if (run.empty()) expected("subject");
      pos_ += run.size();
      Subject s = make_subject(run);
      s.join = join;
      subjects.push_back(std::move(s));
      // Continue the list on "and", ", and" or a bare comma before a noun.
      if (lex_.conjunctions.contains(word(0))) {
        join = {word(0), false};
        ++pos_;
      } else if (kind(0) == TokenKind::Comma && lex_.conjunctions.contains(word(1))) {
        join = {word(1), true};
        pos_ += 2;
      } else if (kind(0) == TokenKind::Comma && !word(1).empty() && !is_stop(1)) {
        join = {"", true};
        ++pos_;
      } else {
        break;
      }
    }
    return subjects;
  }

  Subject make_subject(const std::vector<std::size_t>& run) {
    Subject s;
    std::vector<std::string> words;
    for (std::size_t idx : run) words.push_back(tokens_[idx].surface);
    for (std::size_t i = 0; i < words.size(); ++i) s.surface += (i ? " " : "") + words[i];
    std::size_t first = 0;
    while (words.size() - first > 1 && lex_.qualifiers.contains(lower(words[first])))
      s.qualifiers.push_back(lower(words[first++]));
    if (words.size() - first == 1 && lex_.pronouns.contains(lower(words[first]))) {
      if (last_subject_.empty())
        fail(ErrorKind::GrammarViolation, "pronoun without a preceding subject", run.front());
      s.pronoun = lower(words[first]);
      s.name = last_subject_;
      return s;
    }
    for (std::size_t i = first; i < words.size(); ++i)
      s.name += (i > first ? "_" : "") + lower(words[i]);
    return s;
  }

  void parse_be_or_modal_predicate(Clause& clause) {
    PredicateInfo& p = clause.predicate;
    if (lex_.modals.contains(word(0))) {
      p.modality = word(0);
      ++pos_;
    }
    if (word(0) == "not") {
      clause.negated = true;
      p.not_before_be = true;
      ++pos_;
    }
    if (lex_.be_forms.contains(word(0))) {
      p.be = word(0);
      ++pos_;
      if (word(0) == "not") {
        if (clause.negated) expected("predicate");
        clause.negated = true;
        ++pos_;
      }
      const std::string head = word(0);
      if (head.empty() || is_stop(0))
        fail(ErrorKind::MissingPredicate, "missing predicate after '" + p.be + "'", pos_);
      ++pos_;
      p.head = head;
      if ((ends_with(head, "ed") && head.size() > 3) || (ends_with(head, "ing") && head.size() > 4)) {
        p.form = PredicateForm::BeParticiple;
        p.lemma = lemmatize(head, lex_);
      } else {
        p.form = PredicateForm::BeComplement;
        p.lemma = head;
      }
      if (lex_.particles.contains(word(0)) && !at_constraint()) {
        p.particle = word(0);
        ++pos_;
      }
      return;
    }
    if (p.modality.empty()) fail(ErrorKind::MissingPredicate, "missing predicate", pos_);
    const std::string verb = word(0);
    if (verb.empty() || is_stop(0))
      fail(ErrorKind::MissingPredicate, "missing verb after '" + p.modality + "'", pos_);
    ++pos_;
    p.form = PredicateForm::Verb;
    p.head = verb;
    p.lemma = lemmatize(verb, lex_);
  }

  const std::vector<Token>& tokens_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
  std::string last_subject_;
};

std::string join_text(const Join& j) {
  std::string s = j.comma ? ", " : " ";
  if (!j.conjunction.empty()) s += j.conjunction + " ";
  return s;
}

std::string clause_text(const Clause& c) {
  std::string s;
  auto add = [&](const std::string& w) {
    if (w.empty()) return;
    if (!s.empty()) s += ' ';
    s += w;
  };
  if (c.modifier) add(*c.modifier);
  if (c.next) add("next");
  for (std::size_t i = 0; i < c.subjects.size(); ++i) {
    const Subject& subj = c.subjects[i];
    if (i) s += join_text(subj.join).substr(0, join_text(subj.join).size() - 1);
    for (const auto& q : subj.qualifiers) add(q);
    if (!subj.pronoun.empty()) {
      add(subj.pronoun);
    } else {
      std::string words = subj.surface;
      for (const auto& q : subj.qualifiers) words = words.substr(q.size() + 1);
      add(words);
    }
  }
  const PredicateInfo& p = c.predicate;
  add(p.modality);
  if (c.negated && p.not_before_be) add("not");
  add(p.be);
  if (c.negated && !p.not_before_be) add("not");
  add(p.head);
  add(p.particle);
  if (c.constraint) {
    add("in");
    add(std::to_string(c.constraint->amount));
    add(c.constraint->unit);
  }
  return s;
}

std::string group_text(const ClauseGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += join_text(g[i].join);
    s += clause_text(g[i]);
  }
  return s;
}

}  // namespace

SyntaxTree parse_sentence(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  return Parser(tokens, lexicon).parse();
}

SyntaxTree parse_sentence(std::string_view text, const Lexicon& lexicon) {
  return parse_sentence(tokenize(text), lexicon);
}

std::string unparse(const SyntaxTree& tree) {
  std::string s;
  for (const auto& sub : tree.pre) s += sub.subordinator + " " + group_text(sub.clauses) + ", ";
  s += group_text(tree.main);
  for (const auto& sub : tree.post)
    s += (sub.comma ? ", " : " ") + sub.subordinator + " " + group_text(sub.clauses);
  return s + ".";
}

}  // namespace speccc::english
