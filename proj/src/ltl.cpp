#include "speccc/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace speccc::ltl {

struct Node {
  Op op;
  std::string name;
  int count = 0;
  Formula lhs;
  Formula rhs;
  std::size_t hash = 0;
};

namespace {

bool unary_op(Op op) {
  return op == Op::Not || op == Op::Next || op == Op::TimedNext || op == Op::Eventually ||
         op == Op::Always;
}

bool binary_op(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Iff || op == Op::Until ||
         op == Op::WeakUntil || op == Op::Release;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// A null node stands for `true`.
Formula::Formula() = default;

namespace {
const std::string kEmptyName;
const Formula kTrue;
}  // namespace

Op Formula::op() const { return node_ ? node_->op : Op::True; }
const std::string& Formula::name() const { return node_ ? node_->name : kEmptyName; }
int Formula::count() const { return node_ ? node_->count : 0; }
const Formula& Formula::lhs() const { return node_ ? node_->lhs : kTrue; }
const Formula& Formula::rhs() const { return node_ ? node_->rhs : kTrue; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0x51ed27ULL; }
bool Formula::is_unary() const { return unary_op(op()); }
bool Formula::is_binary() const { return binary_op(op()); }

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (a.op()) {
    case Op::True:
    case Op::False:
      return 0;
    case Op::Atom:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    default:
      break;
  }
  if (a.count() != b.count()) return a.count() < b.count() ? -1 : 1;
  if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
  if (a.is_binary()) return compare(a.rhs(), b.rhs());
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return Formula::compare(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) { return Formula::compare(a, b) < 0; }

Formula make(Op op, std::string name, int count, Formula lhs, Formula rhs) {
  if (op == Op::True) return Formula();
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->count = count;
  std::size_t h = mix(0, static_cast<std::size_t>(op));
  if (op == Op::Atom) {
    h = mix(h, std::hash<std::string>{}(n->name));
  } else if (op != Op::False) {
    n->lhs = std::move(lhs);
    h = mix(h, n->lhs.hash());
    h = mix(h, static_cast<std::size_t>(count));
    if (binary_op(op)) {
      n->rhs = std::move(rhs);
      h = mix(h, n->rhs.hash());
    }
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula tt() { return Formula(); }
Formula ff() { return make(Op::False, {}, 0, {}, {}); }
Formula atom(std::string name) { return make(Op::Atom, std::move(name), 0, {}, {}); }
Formula neg(Formula f) { return make(Op::Not, {}, 0, std::move(f), {}); }
Formula conj(Formula a, Formula b) { return make(Op::And, {}, 0, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return make(Op::Or, {}, 0, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
  return make(Op::Implies, {}, 0, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) { return make(Op::Iff, {}, 0, std::move(a), std::move(b)); }
Formula next(Formula f) { return make(Op::Next, {}, 0, std::move(f), {}); }
Formula timed_next(int n, Formula f) {
  if (n < 1) throw std::invalid_argument("timed next requires a positive length");
  return make(Op::TimedNext, {}, n, std::move(f), {});
}
Formula eventually(Formula f) { return make(Op::Eventually, {}, 0, std::move(f), {}); }
Formula always(Formula f) { return make(Op::Always, {}, 0, std::move(f), {}); }
Formula until(Formula a, Formula b) { return make(Op::Until, {}, 0, std::move(a), std::move(b)); }
Formula weak_until(Formula a, Formula b) {
  return make(Op::WeakUntil, {}, 0, std::move(a), std::move(b));
}
Formula release(Formula a, Formula b) {
  return make(Op::Release, {}, 0, std::move(a), std::move(b));
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return tt();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return ff();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

SyntaxError::SyntaxError(std::string message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength, higher binds tighter.
int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until:
    case Op::WeakUntil:
    case Op::Release: return 5;
    case Op::Not:
    case Op::Next:
    case Op::TimedNext:
    case Op::Eventually:
    case Op::Always: return 6;
    default: return 7;
  }
}

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::Implies: return "->";
    case Op::Iff: return "<->";
    case Op::Until: return "U";
    case Op::WeakUntil: return "W";
    case Op::Release: return "R";
    default: return "?";
  }
}

void print_into(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(f, out);
  if (parens) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  const Op op = f.op();
  switch (op) {
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Atom: out += f.name(); return;
    case Op::Not:
      out += '!';
      print_operand(f.lhs(), precedence(f.lhs().op()) < 6, out);
      return;
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
    case Op::TimedNext: {
      if (op == Op::Next) out += "X ";
      if (op == Op::Eventually) out += "F ";
      if (op == Op::Always) out += "G ";
      if (op == Op::TimedNext) out += "X[" + std::to_string(f.count()) + "] ";
      print_operand(f.lhs(), precedence(f.lhs().op()) < 6, out);
      return;
    }
    default: break;
  }
  const int p = precedence(op);
  const int pl = precedence(f.lhs().op());
  const int pr = precedence(f.rhs().op());
  // && || <-> associate to the left; -> U W R to the right.
  const bool right_assoc = op == Op::Implies || p == 5;
  const bool lparen = right_assoc ? pl <= p : pl < p;
  const bool rparen = right_assoc ? pr < p : pr <= p;
  print_operand(f.lhs(), lparen, out);
  out += ' ';
  out += binary_symbol(op);
  out += ' ';
  print_operand(f.rhs(), rparen, out);
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, LParen, RParen, Not, And, Or, Implies, Iff, Until, Weak, Next, TimedNext,
                 Eventually, Always, True, False, End };

struct Token {
  Tok kind;
  std::string text;
  int count = 0;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    const std::size_t start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(start, len)), 0, start});
      i += len;
    };
    if (c == '(') { push(Tok::LParen, 1); continue; }
    if (c == ')') { push(Tok::RParen, 1); continue; }
    if (c == '!' || c == '~') { push(Tok::Not, 1); continue; }
    if (s.compare(i, 2, "&&") == 0) { push(Tok::And, 2); continue; }
    if (s.compare(i, 2, "||") == 0) { push(Tok::Or, 2); continue; }
    if (s.compare(i, 3, "<->") == 0) { push(Tok::Iff, 3); continue; }
    if (s.compare(i, 2, "->") == 0) { push(Tok::Implies, 2); continue; }
    if (ident_char(c) && c != '-') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j]) && !(s[j] == '-' && j + 1 < s.size() && s[j + 1] == '>'))
        ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      if (word == "true") { out.push_back({Tok::True, word, 0, start}); continue; }
      if (word == "false") { out.push_back({Tok::False, word, 0, start}); continue; }
      if (word == "U") { out.push_back({Tok::Until, word, 0, start}); continue; }
      if (word == "W") { out.push_back({Tok::Weak, word, 0, start}); continue; }
      const bool op_run = std::all_of(word.begin(), word.end(),
                                      [](char ch) { return ch == 'G' || ch == 'F' || ch == 'X'; });
      if (op_run) {
        for (std::size_t k = 0; k < word.size(); ++k) {
          Tok kind = word[k] == 'G' ? Tok::Always : word[k] == 'F' ? Tok::Eventually : Tok::Next;
          out.push_back({kind, std::string(1, word[k]), 0, start + k});
        }
        // X[n] timed form
        if (word.back() == 'X' && i < s.size() && s[i] == '[') {
          std::size_t close = s.find(']', i);
          if (close == std::string_view::npos) throw SyntaxError("unterminated X[", i);
          std::string digits(s.substr(i + 1, close - i - 1));
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                             [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw SyntaxError("expected a number inside X[...]", i + 1);
          const int n = std::stoi(digits);
          if (n < 1) throw SyntaxError("X[n] needs n >= 1", i + 1);
          out.back().kind = Tok::TimedNext;
          out.back().count = n;
          i = close + 1;
        }
        continue;
      }
      out.push_back({Tok::Ident, word, 0, start});
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", 0, s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::Iff)) f = iff(f, parse_implies());
    return f;
  }
  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::Implies)) return implies(f, parse_implies());
    return f;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = disj(f, parse_and());
    return f;
  }
  Formula parse_and() {
    Formula f = parse_until();
    while (accept(Tok::And)) f = conj(f, parse_until());
    return f;
  }
  Formula parse_until() {
    Formula f = parse_unary();
    if (accept(Tok::Until)) return until(f, parse_until());
    if (accept(Tok::Weak)) return weak_until(f, parse_until());
    return f;
  }
  Formula parse_unary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Not: return neg(parse_unary());
      case Tok::Next: return next(parse_unary());
      case Tok::TimedNext: {
        const int n = t.count;
        return timed_next(n, parse_unary());
      }
      case Tok::Eventually: return eventually(parse_unary());
      case Tok::Always: return always(parse_unary());
      case Tok::True: return tt();
      case Tok::False: return ff();
      case Tok::Ident: return atom(t.text);
      case Tok::LParen: {
        Formula f = parse_iff();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return f;
      }
      default:
        throw SyntaxError(t.kind == Tok::End ? "unexpected end of formula"
                                             : "unexpected '" + t.text + "'",
                          t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(lex(text)).parse_all(); }

// ---------------------------------------------------------------------------
// Transformations

Formula expand_timed_next(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    case Op::TimedNext: {
      Formula body = expand_timed_next(f.lhs());
      for (int i = 0; i < f.count(); ++i) body = next(body);
      return body;
    }
    default:
      break;
  }
  Formula l = expand_timed_next(f.lhs());
  if (f.is_binary()) return make(f.op(), {}, 0, l, expand_timed_next(f.rhs()));
  return make(f.op(), {}, 0, l, {});
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.op()) {
    case Op::True: return negated ? ff() : tt();
    case Op::False: return negated ? tt() : ff();
    case Op::Atom: return negated ? neg(f) : f;
    case Op::Not: return nnf(f.lhs(), !negated);
    case Op::And:
      return negated ? disj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : conj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Or:
      return negated ? conj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : disj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Implies:
      return negated ? conj(nnf(f.lhs(), false), nnf(f.rhs(), true))
                     : disj(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case Op::Iff: {
      const Formula a = nnf(f.lhs(), false), na = nnf(f.lhs(), true);
      const Formula b = nnf(f.rhs(), false), nb = nnf(f.rhs(), true);
      return negated ? disj(conj(a, nb), conj(na, b)) : disj(conj(a, b), conj(na, nb));
    }
    case Op::Next: return next(nnf(f.lhs(), negated));
    case Op::TimedNext: {
      Formula body = nnf(f.lhs(), negated);
      for (int i = 0; i < f.count(); ++i) body = next(body);
      return body;
    }
    case Op::Eventually:
      return negated ? release(ff(), nnf(f.lhs(), true)) : until(tt(), nnf(f.lhs(), false));
    case Op::Always:
      return negated ? until(tt(), nnf(f.lhs(), true)) : release(ff(), nnf(f.lhs(), false));
    case Op::Until:
      return negated ? release(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : until(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Release:
      return negated ? until(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : release(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::WeakUntil: {
      // a W b == b R (a || b);  !(a W b) == !b U (!a && !b)
      const Formula a = nnf(f.lhs(), negated), b = nnf(f.rhs(), negated);
      return negated ? until(b, conj(a, b)) : release(b, disj(a, b));
    }
  }
  return f;
}

void flatten(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    flatten(f.lhs(), op, out);
    flatten(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

Formula normalize_rec(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    case Op::Not: {
      if (f.lhs().op() == Op::Not) return normalize_rec(f.lhs().lhs());
      return neg(normalize_rec(f.lhs()));
    }
    case Op::And:
    case Op::Or: {
      std::vector<Formula> parts;
      flatten(f, f.op(), parts);
      for (auto& p : parts) p = normalize_rec(p);
      // normalization of a part may expose the same operator again
      std::vector<Formula> flat;
      for (auto& p : parts) flatten(p, f.op(), flat);
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      return f.op() == Op::And ? conj_all(flat) : disj_all(flat);
    }
    default:
      break;
  }
  Formula l = normalize_rec(f.lhs());
  if (f.is_binary()) return make(f.op(), {}, 0, l, normalize_rec(f.rhs()));
  return make(f.op(), {}, f.count(), l, {});
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) {
    out.insert(f.name());
    return;
  }
  if (f.op() == Op::True || f.op() == Op::False) return;
  collect_atoms(f.lhs(), out);
  if (f.is_binary()) collect_atoms(f.rhs(), out);
}

void collect_lengths(const Formula& f, std::vector<int>& out) {
  if (f.op() == Op::True || f.op() == Op::False || f.op() == Op::Atom) return;
  if (f.op() == Op::TimedNext) out.push_back(f.count());
  collect_lengths(f.lhs(), out);
  if (f.is_binary()) collect_lengths(f.rhs(), out);
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula normalize(const Formula& f) { return normalize_rec(expand_timed_next(f)); }

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<int> timed_next_lengths(const Formula& f) {
  std::vector<int> out;
  collect_lengths(f, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  if (f.op() == Op::True || f.op() == Op::False || f.op() == Op::Atom) return 1;
  std::size_t n = 1 + formula_size(f.lhs());
  if (f.is_binary()) n += formula_size(f.rhs());
  return n;
}

// ---------------------------------------------------------------------------
// .ltl files

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<LabeledFormula> parse_ltl_file(std::string_view content) {
  std::vector<LabeledFormula> out;
  std::istringstream in{std::string(content)};
  std::string line;
  std::string pending_label;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) {
      pending_label.clear();
      continue;
    }
    if (t[0] == '#') {
      pending_label = trim(std::string_view(t).substr(1));
      continue;
    }
    LabeledFormula lf;
    if (t.rfind("assume:", 0) == 0) {
      lf.assumption = true;
      t = trim(std::string_view(t).substr(7));
    } else if (t.rfind("guarantee:", 0) == 0) {
      t = trim(std::string_view(t).substr(10));
    }
    try {
      lf.formula = parse_formula(t);
    } catch (const SyntaxError& e) {
      throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
    lf.label = pending_label;
    pending_label.clear();
    out.push_back(std::move(lf));
  }
  return out;
}

std::string format_ltl_file(const std::vector<LabeledFormula>& formulas) {
  std::string out;
  for (const auto& lf : formulas) {
    if (!lf.label.empty()) out += "# " + lf.label + "\n";
    if (lf.assumption) out += "assume: ";
    out += print_formula(lf.formula);
    out += '\n';
  }
  return out;
}

}  // namespace speccc::ltl
