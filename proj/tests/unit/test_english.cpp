#include <doctest.h>

#include <algorithm>
#include <cctype>

#include "speccc/corpus.hpp"
#include "speccc/english.hpp"

using namespace speccc;
using namespace speccc::english;

namespace {

std::string squash(std::string_view text, const Lexicon& lex) {
  // Lowercase, drop filter words, normalize spacing around punctuation.
  std::string out;
  for (const auto& t : tokenize(text)) {
    std::string w = t.surface;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t.kind == TokenKind::Word && lex.filters.contains(w)) continue;
    if (t.kind != TokenKind::Comma && t.kind != TokenKind::Period && !out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize splits words, numbers and punctuation") {
  const auto toks = tokenize("eventually the cuff will be inflated.");
  REQUIRE(toks.size() == 7);
  CHECK(toks[0].surface == "eventually");
  CHECK(toks[5].surface == "inflated");
  CHECK(toks[6].kind == TokenKind::Period);
  for (int i = 0; i < 6; ++i) CHECK(toks[i].kind == TokenKind::Word);

  const auto frag = tokenize("in 3 seconds");
  REQUIRE(frag.size() == 3);
  CHECK(frag[1].kind == TokenKind::Number);
  CHECK(frag[1].surface == "3");
  CHECK(frag[2].surface == "seconds");

  CHECK(tokenize("pulse_wave")[0].kind == TokenKind::UnderscoreWord);
  CHECK(tokenize("auto-control")[0].kind == TokenKind::Word);
  CHECK(tokenize("a, b")[1].position == 1);
}

TEST_CASE("tokenize errors") {
  try {
    tokenize("   ");
    FAIL("expected EmptySentence");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::EmptySentence);
  }
  try {
    tokenize("the cuff; is on.");
    FAIL("expected IllegalCharacter");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::IllegalCharacter);
    CHECK(e.position() == 8);
  }
}

TEST_CASE("lemmatize") {
  const Lexicon lex;
  CHECK(lemmatize("entered", lex) == "enter");
  CHECK(lemmatize("inflated", lex) == "inflate");
  CHECK(lemmatize("raised", lex) == "raise");
  CHECK(lemmatize("run", lex) == "run");
  CHECK(lemmatize("running", lex) == "run");
  CHECK(lemmatize("pressed", lex) == "press");
  CHECK(lemmatize("plugged", lex) == "plug");
  CHECK(lemmatize("corroborated", lex) == "corroborate");
  CHECK(lemmatize("issued", lex) == "issue");
  CHECK(lemmatize("provided", lex) == "provide");
  CHECK(lemmatize("disabled", lex) == "disable");
  CHECK(lemmatize("powered", lex) == "power");
  CHECK(lemmatize("Triggered", lex) == "trigger");
  CHECK(lemmatize("lost", lex) == "lose");
  CHECK(lemmatize("sounds", lex) == "sound");
  CHECK(lemmatize("carries", lex) == "carry");
  CHECK(lemmatize("passes", lex) == "pass");
  CHECK(lemmatize("status", lex) == "status");
}

TEST_CASE("lexicon extension") {
  Lexicon lex;
  lex.extend("# comment\nran : lemma=run\nperhaps : filter\n\nhigh : qualifier\n");
  CHECK(lemmatize("ran", lex) == "run");
  CHECK(lex.filters.contains("perhaps"));
  CHECK(lex.qualifiers.contains("high"));
  CHECK_THROWS_AS(lex.extend("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(lex.extend("x : adverb"), std::invalid_argument);
}

TEST_CASE("time clause and modifier tree") {
  const Lexicon lex;
  const auto tree =
      parse_sentence("When auto-control mode is entered, eventually the cuff will be inflated.", lex);
  REQUIRE(tree.pre.size() == 1);
  CHECK(tree.pre[0].subordinator == "when");
  REQUIRE(tree.pre[0].clauses.size() == 1);
  const Clause& ante = tree.pre[0].clauses[0];
  REQUIRE(ante.subjects.size() == 1);
  CHECK(ante.subjects[0].name == "auto-control_mode");
  CHECK(ante.predicate.form == PredicateForm::BeParticiple);
  CHECK(ante.predicate.head == "entered");
  CHECK(ante.predicate.lemma == "enter");

  REQUIRE(tree.main.size() == 1);
  const Clause& main = tree.main[0];
  CHECK(main.modifier == "eventually");
  CHECK(main.subjects[0].name == "cuff");
  CHECK(main.predicate.modality == "will");
  CHECK(main.predicate.lemma == "inflate");
  CHECK_FALSE(main.negated);
  CHECK(tree.post.empty());
}

TEST_CASE("conjoined antecedents with a multi-subject clause and next") {
  const Lexicon lex;
  const auto tree = parse_sentence(
      "If pulse_wave and arterial_line are unavailable, and cuff is selected, and blood_pressure "
      "is not valid, next manual_mode is started.",
      lex);
  REQUIRE(tree.pre.size() == 1);
  CHECK(tree.pre[0].subordinator == "if");
  const auto& group = tree.pre[0].clauses;
  REQUIRE(group.size() == 3);
  REQUIRE(group[0].subjects.size() == 2);
  CHECK(group[0].subjects[0].name == "pulse_wave");
  CHECK(group[0].subjects[1].name == "arterial_line");
  CHECK(group[0].subjects[1].join.conjunction == "and");
  CHECK(group[0].predicate.form == PredicateForm::BeComplement);
  CHECK(group[0].predicate.head == "unavailable");
  CHECK(group[1].join.conjunction == "and");
  CHECK(group[1].join.comma);
  CHECK(group[2].negated);
  CHECK(group[2].predicate.head == "valid");
  REQUIRE(tree.main.size() == 1);
  CHECK(tree.main[0].next);
  CHECK(tree.main[0].predicate.lemma == "start");
}

TEST_CASE("time constraint, post subclause, verbs and pronouns") {
  const Lexicon lex;
  auto t = parse_sentence("If Air_Ok_signal remains low, auto_control_mode is terminated in 3 seconds.", lex);
  CHECK(t.pre[0].clauses[0].subjects[0].name == "air_ok_signal");
  CHECK(t.pre[0].clauses[0].predicate.head == "low");
  REQUIRE(t.main[0].constraint);
  CHECK(t.main[0].constraint->amount == 3);
  CHECK(t.main[0].constraint->unit == "seconds");

  t = parse_sentence("The CARA will be operational whenever the LSTAT is powered on.", lex);
  REQUIRE(t.post.size() == 1);
  CHECK_FALSE(t.post[0].comma);
  CHECK(t.post[0].subordinator == "whenever");
  CHECK(t.post[0].clauses[0].predicate.particle == "on");
  CHECK(t.post[0].clauses[0].predicate.lemma == "power");

  t = parse_sentence("an alarm should sound in 60 seconds.", lex);
  CHECK(t.main[0].predicate.form == PredicateForm::Verb);
  CHECK(t.main[0].predicate.lemma == "sound");
  CHECK(t.main[0].constraint->amount == 60);

  t = parse_sentence("the pump stops.", lex);
  CHECK(t.main[0].subjects[0].name == "pump");
  CHECK(t.main[0].predicate.lemma == "stop");

  t = parse_sentence("When a start_button is enabled, the start_button is enabled until it is pressed.", lex);
  REQUIRE(t.post.size() == 1);
  CHECK(t.post[0].subordinator == "until");
  CHECK(t.post[0].clauses[0].subjects[0].name == "start_button");
  CHECK(t.post[0].clauses[0].subjects[0].pronoun == "it");

  Lexicon with_qualifier;
  with_qualifier.qualifiers.insert("valid");
  t = parse_sentence("If a valid blood_pressure is unavailable in 180 seconds, manual_mode is triggered.",
                     with_qualifier);
  const Subject& s = t.pre[0].clauses[0].subjects[0];
  CHECK(s.name == "blood_pressure");
  CHECK(s.qualifiers == std::vector<std::string>{"valid"});
  CHECK(t.pre[0].clauses[0].constraint->amount == 180);
}

TEST_CASE("bare comma subject list") {
  const Lexicon lex;
  const auto t = parse_sentence("If the arterial_line, or pulse_wave or cuff is lost, alarm is on.", lex);
  const auto& subjects = t.pre[0].clauses[0].subjects;
  REQUIRE(subjects.size() == 3);
  CHECK(subjects[1].join.conjunction == "or");
  CHECK(subjects[1].join.comma);
  CHECK(subjects[2].join.conjunction == "or");
  CHECK(t.main[0].predicate.form == PredicateForm::BeComplement);
}

TEST_CASE("parse errors") {
  const Lexicon lex;
  auto kind_of = [&](std::string_view text) {
    try {
      parse_sentence(text, lex);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::EmptySentence;
  };
  CHECK(kind_of("The pump.") == ErrorKind::MissingPredicate);
  CHECK(kind_of("the pump is.") == ErrorKind::MissingPredicate);
  CHECK(kind_of("unless the pump is on, the alarm is off.") == ErrorKind::UnknownSubordinator);
  CHECK(kind_of("if the pump is on the alarm is off.") == ErrorKind::GrammarViolation);
  CHECK(kind_of("the pump is on") == ErrorKind::GrammarViolation);
  CHECK(kind_of("no pump is on.") == ErrorKind::GrammarViolation);
  CHECK(kind_of("the pump is off in 3 minutes.") == ErrorKind::GrammarViolation);
  CHECK(kind_of("if the pump is on alarm.") == ErrorKind::GrammarViolation);
}

TEST_CASE("appendix corpus parses and unparses") {
  const auto reqs = corpus::load_requirements(std::string(SPECCC_DATA_DIR) + "/cara.req");
  REQUIRE(reqs.size() == 29);
  Lexicon lex;
  lex.qualifiers.insert("valid");
  for (const auto& r : reqs) {
    CAPTURE(r.id);
    SyntaxTree tree;
    REQUIRE_NOTHROW(tree = parse_sentence(r.text, lex));
    CHECK(squash(unparse(tree), lex) == squash(r.text, lex));
  }
}
