#include "oind/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace oind {

std::string Signature::to_string() const {
  std::string s = "0s";
  if (has_p) s += 'p';
  if (has_plus) s += '+';
  if (has_times) s += '*';
  return s;
}

Signature Signature::from_string(const std::string& s) {
  Signature sig;
  for (char c : s) {
    switch (c) {
      case '0':
      case 's': break;
      case 'p': sig.has_p = true; break;
      case '+': sig.has_plus = true; break;
      case '*': sig.has_times = true; break;
      default:
        throw SignatureError("unknown symbol in signature: " + std::string(1, c));
    }
  }
  return sig;
}

Term::Term(TermKind k, std::string name, TermPtr a, TermPtr b)
    : kind_(k), name_(std::move(name)), a_(std::move(a)), b_(std::move(b)) {
  size_ = 1;
  has_var_ = kind_ == TermKind::Var;
  if (a_) {
    size_ += a_->size_;
    has_var_ = has_var_ || a_->has_var_;
  }
  if (b_) {
    size_ += b_->size_;
    has_var_ = has_var_ || b_->has_var_;
  }
}

TermPtr Term::zero() {
  static const TermPtr t(new Term(TermKind::Zero, "", nullptr, nullptr));
  return t;
}
TermPtr Term::var() {
  static const TermPtr t(new Term(TermKind::Var, "", nullptr, nullptr));
  return t;
}
TermPtr Term::param(std::string name) {
  return TermPtr(new Term(TermKind::Param, std::move(name), nullptr, nullptr));
}
TermPtr Term::s(TermPtr t) {
  return TermPtr(new Term(TermKind::S, "", std::move(t), nullptr));
}
TermPtr Term::p(TermPtr t) {
  return TermPtr(new Term(TermKind::P, "", std::move(t), nullptr));
}
TermPtr Term::plus(TermPtr l, TermPtr r) {
  return TermPtr(new Term(TermKind::Plus, "", std::move(l), std::move(r)));
}
TermPtr Term::times(TermPtr l, TermPtr r) {
  return TermPtr(new Term(TermKind::Times, "", std::move(l), std::move(r)));
}
TermPtr Term::iter_s(unsigned n, TermPtr t) {
  for (unsigned i = 0; i < n; ++i) t = s(std::move(t));
  return t;
}
TermPtr Term::numeral(unsigned n) { return iter_s(n, zero()); }

void Term::collect_params(std::vector<std::string>& out) const {
  if (kind_ == TermKind::Param) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) out.push_back(name_);
  }
  if (a_) a_->collect_params(out);
  if (b_) b_->collect_params(out);
}

std::vector<std::string> Term::params() const {
  std::vector<std::string> out;
  collect_params(out);
  return out;
}

bool Term::uses_only(const Signature& sig) const {
  switch (kind_) {
    case TermKind::P:
      if (!sig.has_p) return false;
      break;
    case TermKind::Plus:
      if (!sig.has_plus) return false;
      break;
    case TermKind::Times:
      if (!sig.has_times) return false;
      break;
    default: break;
  }
  if (a_ && !a_->uses_only(sig)) return false;
  if (b_ && !b_->uses_only(sig)) return false;
  return true;
}

void Term::check_signature(const Signature& sig) const {
  switch (kind_) {
    case TermKind::P:
      if (!sig.has_p) throw SignatureError("symbol p not in signature " + sig.to_string());
      break;
    case TermKind::Plus:
      if (!sig.has_plus) throw SignatureError("symbol + not in signature " + sig.to_string());
      break;
    case TermKind::Times:
      if (!sig.has_times) throw SignatureError("symbol * not in signature " + sig.to_string());
      break;
    default: break;
  }
  if (a_) a_->check_signature(sig);
  if (b_) b_->check_signature(sig);
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Zero:
    case TermKind::Var: return true;
    case TermKind::Param: return a->name() == b->name();
    case TermKind::S:
    case TermKind::P: return term_equal(a->child(), b->child());
    case TermKind::Plus:
    case TermKind::Times:
      return term_equal(a->left(), b->left()) && term_equal(a->right(), b->right());
  }
  return false;
}

bool term_less(const TermPtr& a, const TermPtr& b) {
  if (a->size() != b->size()) return a->size() < b->size();
  return print_term(a) < print_term(b);
}

TermPtr subst_var(const TermPtr& t, const TermPtr& repl) {
  switch (t->kind()) {
    case TermKind::Var: return repl;
    case TermKind::Zero:
    case TermKind::Param: return t;
    case TermKind::S: return Term::s(subst_var(t->child(), repl));
    case TermKind::P: return Term::p(subst_var(t->child(), repl));
    case TermKind::Plus:
      return Term::plus(subst_var(t->left(), repl), subst_var(t->right(), repl));
    case TermKind::Times:
      return Term::times(subst_var(t->left(), repl), subst_var(t->right(), repl));
  }
  return t;
}

TermPtr subst_param(const TermPtr& t, const std::string& name, const TermPtr& repl) {
  switch (t->kind()) {
    case TermKind::Param: return t->name() == name ? repl : t;
    case TermKind::Zero:
    case TermKind::Var: return t;
    case TermKind::S: return Term::s(subst_param(t->child(), name, repl));
    case TermKind::P: return Term::p(subst_param(t->child(), name, repl));
    case TermKind::Plus:
      return Term::plus(subst_param(t->left(), name, repl), subst_param(t->right(), name, repl));
    case TermKind::Times:
      return Term::times(subst_param(t->left(), name, repl), subst_param(t->right(), name, repl));
  }
  return t;
}

Formula::Formula(FormulaKind k, Literal l, std::vector<FormulaPtr> children)
    : kind_(k), lit_(std::move(l)), children_(std::move(children)) {}

FormulaPtr Formula::lit(Literal l) {
  return FormulaPtr(new Formula(FormulaKind::Lit, std::move(l), {}));
}

static std::vector<FormulaPtr> flatten(FormulaKind k, std::vector<FormulaPtr> fs) {
  std::vector<FormulaPtr> out;
  for (auto& f : fs) {
    if (f->kind() == k) {
      for (auto& c : f->children()) out.push_back(c);
    } else {
      out.push_back(f);
    }
  }
  return out;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("empty conjunction");
  if (fs.size() == 1) return fs[0];
  return FormulaPtr(new Formula(FormulaKind::And, {}, flatten(FormulaKind::And, std::move(fs))));
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("empty disjunction");
  if (fs.size() == 1) return fs[0];
  return FormulaPtr(new Formula(FormulaKind::Or, {}, flatten(FormulaKind::Or, std::move(fs))));
}

FormulaPtr Formula::negate(FormulaPtr f) {
  if (f->kind() == FormulaKind::Lit) {
    Literal l = f->literal();
    l.negated = !l.negated;
    return lit(std::move(l));
  }
  if (f->kind() == FormulaKind::Not) return f->children()[0];
  return FormulaPtr(new Formula(FormulaKind::Not, {}, {std::move(f)}));
}

FormulaPtr Formula::clause(std::vector<Literal> lits) {
  std::vector<FormulaPtr> fs;
  for (auto& l : lits) fs.push_back(lit(std::move(l)));
  return disj(std::move(fs));
}

FormulaPtr Formula::dual_clause(std::vector<Literal> lits) {
  std::vector<FormulaPtr> fs;
  for (auto& l : lits) fs.push_back(lit(std::move(l)));
  return conj(std::move(fs));
}

std::size_t Formula::term_size() const {
  if (kind_ == FormulaKind::Lit) return lit_.lhs->size() + lit_.rhs->size();
  std::size_t n = 0;
  for (auto& c : children_) n += c->term_size();
  return n;
}

bool Formula::has_var() const {
  if (kind_ == FormulaKind::Lit) return lit_.lhs->has_var() || lit_.rhs->has_var();
  for (auto& c : children_)
    if (c->has_var()) return true;
  return false;
}

std::vector<std::string> Formula::params() const {
  std::vector<std::string> out;
  if (kind_ == FormulaKind::Lit) {
    lit_.lhs->collect_params(out);
    lit_.rhs->collect_params(out);
    return out;
  }
  for (auto& c : children_)
    for (auto& p : c->params())
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

void Formula::check_signature(const Signature& sig) const {
  if (kind_ == FormulaKind::Lit) {
    lit_.lhs->check_signature(sig);
    lit_.rhs->check_signature(sig);
    return;
  }
  for (auto& c : children_) c->check_signature(sig);
}

std::vector<Literal> Formula::literals() const {
  std::vector<Literal> out;
  if (kind_ == FormulaKind::Lit) {
    out.push_back(lit_);
    return out;
  }
  for (auto& c : children_)
    for (auto& l : c->literals()) out.push_back(l);
  return out;
}

FormulaPtr subst_var(const FormulaPtr& f, const TermPtr& repl) {
  if (f->kind() == FormulaKind::Lit) {
    Literal l = f->literal();
    l.lhs = subst_var(l.lhs, repl);
    l.rhs = subst_var(l.rhs, repl);
    return Formula::lit(std::move(l));
  }
  std::vector<FormulaPtr> cs;
  for (auto& c : f->children()) cs.push_back(subst_var(c, repl));
  switch (f->kind()) {
    case FormulaKind::And: return Formula::conj(std::move(cs));
    case FormulaKind::Or: return Formula::disj(std::move(cs));
    default: return Formula::negate(cs[0]);
  }
}

FormulaPtr subst_param(const FormulaPtr& f, const std::string& name, const TermPtr& repl) {
  if (f->kind() == FormulaKind::Lit) {
    Literal l = f->literal();
    l.lhs = subst_param(l.lhs, name, repl);
    l.rhs = subst_param(l.rhs, name, repl);
    return Formula::lit(std::move(l));
  }
  std::vector<FormulaPtr> cs;
  for (auto& c : f->children()) cs.push_back(subst_param(c, name, repl));
  switch (f->kind()) {
    case FormulaKind::And: return Formula::conj(std::move(cs));
    case FormulaKind::Or: return Formula::disj(std::move(cs));
    default: return Formula::negate(cs[0]);
  }
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind() != b->kind()) return false;
  if (a->kind() == FormulaKind::Lit) return a->literal() == b->literal();
  if (a->children().size() != b->children().size()) return false;
  for (std::size_t i = 0; i < a->children().size(); ++i)
    if (!formula_equal(a->children()[i], b->children()[i])) return false;
  return true;
}

const char* scheme_name(SchemeClass c) {
  switch (c) {
    case SchemeClass::IAtom: return "iatom";
    case SchemeClass::ILiteral: return "iliteral";
    case SchemeClass::IClause: return "iclause";
    case SchemeClass::IDClause: return "idclause";
    case SchemeClass::IOpen: return "iopen";
  }
  return "?";
}

SchemeClass scheme_from_name(const std::string& name) {
  if (name == "iatom") return SchemeClass::IAtom;
  if (name == "iliteral") return SchemeClass::ILiteral;
  if (name == "iclause") return SchemeClass::IClause;
  if (name == "idclause") return SchemeClass::IDClause;
  if (name == "iopen") return SchemeClass::IOpen;
  throw std::invalid_argument("unknown scheme class: " + name);
}

bool Classification::in_class(SchemeClass c) const {
  switch (c) {
    case SchemeClass::IAtom: return is_atom;
    case SchemeClass::ILiteral: return is_literal;
    case SchemeClass::IClause: return is_clause;
    case SchemeClass::IDClause: return is_dual_clause;
    case SchemeClass::IOpen: return is_open;
  }
  return false;
}

Classification classify(const FormulaPtr& f) {
  Classification c;
  switch (f->kind()) {
    case FormulaKind::Lit:
      c.is_atom = !f->literal().negated;
      c.is_literal = true;
      c.is_clause = true;
      c.is_dual_clause = true;
      break;
    case FormulaKind::Or:
      c.is_clause = std::all_of(f->children().begin(), f->children().end(),
                                [](const FormulaPtr& g) { return g->kind() == FormulaKind::Lit; });
      break;
    case FormulaKind::And:
      c.is_dual_clause = std::all_of(f->children().begin(), f->children().end(),
                                     [](const FormulaPtr& g) { return g->kind() == FormulaKind::Lit; });
      break;
    case FormulaKind::Not:
      break;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Printing. Canonical form: no numeral sugar, `*` binds tighter than `+`,
// both left-associative, parentheses only where required.

namespace {

void print_term_rec(const TermPtr& t, std::ostream& os, int parent_prec, bool right_operand) {
  // precedence: 0 = +, 1 = *, 2 = atomic
  switch (t->kind()) {
    case TermKind::Zero: os << '0'; return;
    case TermKind::Var: os << 'x'; return;
    case TermKind::Param: os << t->name(); return;
    case TermKind::S:
      os << "s(";
      print_term_rec(t->child(), os, 0, false);
      os << ')';
      return;
    case TermKind::P:
      os << "p(";
      print_term_rec(t->child(), os, 0, false);
      os << ')';
      return;
    case TermKind::Plus: {
      bool paren = parent_prec > 0 || (parent_prec == 0 && right_operand);
      if (paren) os << '(';
      print_term_rec(t->left(), os, 0, false);
      os << '+';
      print_term_rec(t->right(), os, 0, true);
      if (paren) os << ')';
      return;
    }
    case TermKind::Times: {
      bool paren = parent_prec > 1 || (parent_prec == 1 && right_operand);
      if (paren) os << '(';
      print_term_rec(t->left(), os, 1, false);
      os << '*';
      print_term_rec(t->right(), os, 1, true);
      if (paren) os << ')';
      return;
    }
  }
}

void print_formula_rec(const FormulaPtr& f, std::ostream& os, bool top) {
  switch (f->kind()) {
    case FormulaKind::Lit:
      os << print_literal(f->literal());
      return;
    case FormulaKind::Or:
    case FormulaKind::And: {
      const char* sep = f->kind() == FormulaKind::Or ? " | " : " & ";
      if (!top) os << '(';
      bool first = true;
      for (auto& c : f->children()) {
        if (!first) os << sep;
        first = false;
        print_formula_rec(c, os, false);
      }
      if (!top) os << ')';
      return;
    }
    case FormulaKind::Not:
      os << "!(";
      print_formula_rec(f->children()[0], os, true);
      os << ')';
      return;
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  print_term_rec(t, os, 0, false);
  return os.str();
}

std::string print_literal(const Literal& l) {
  return print_term(l.lhs) + (l.negated ? "!=" : "=") + print_term(l.rhs);
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula_rec(f, os, true);
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing.
//
//   term    := factor ("+" factor)*
//   factor  := atom ("*" atom)*
//   atom    := "0" | numeral | "x" | ident | "s(" term ")" | "p(" term ")" | "(" term ")"
//   formula := part (("|" part)* | ("&" part)*)     -- no mixing without parens
//   part    := term ("="|"!=") term | "(" formula ")" | "!(" formula ")"

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

  TermPtr parse_term_all() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

  FormulaPtr parse_formula_all() {
    FormulaPtr f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg + " at position " + std::to_string(pos_), pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(const std::string& s) {
    skip_ws();
    if (text_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  TermPtr term() {
    TermPtr t = factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        if (!sig_.has_plus) fail("symbol + not in signature " + sig_.to_string());
        ++pos_;
        t = Term::plus(t, factor());
      } else {
        return t;
      }
    }
  }

  TermPtr factor() {
    TermPtr t = atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        if (!sig_.has_times) fail("symbol * not in signature " + sig_.to_string());
        ++pos_;
        t = Term::times(t, atom());
      } else {
        return t;
      }
    }
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (n > 100000) fail("numeral too large");
        ++pos_;
      }
      return Term::numeral(static_cast<unsigned>(n));
    }
    if (c == '(') {
      ++pos_;
      TermPtr t = term();
      expect(')');
      return t;
    }
    if (c == 's' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      pos_ += 2;
      TermPtr t = term();
      expect(')');
      return Term::s(t);
    }
    if (c == 'p' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      if (!sig_.has_p) fail("symbol p not in signature " + sig_.to_string());
      pos_ += 2;
      TermPtr t = term();
      expect(')');
      return Term::p(t);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "x") return Term::var();
      return Term::param(std::move(name));
    }
    fail("unexpected character");
  }

  FormulaPtr part() {
    skip_ws();
    if (eat("!(")) {
      FormulaPtr f = formula();
      expect(')');
      return Formula::negate(f);
    }
    // A '(' may open either a parenthesized formula or a parenthesized term;
    // try the formula reading first.
    if (peek() == '(') {
      std::size_t save = pos_;
      ++pos_;
      try {
        FormulaPtr f = formula();
        expect(')');
        return f;
      } catch (const SyntaxError&) {
        pos_ = save;
      }
    }
    TermPtr l = term();
    bool neg;
    if (eat("!=")) {
      neg = true;
    } else if (eat('=')) {
      neg = false;
    } else {
      fail("expected '=' or '!='");
    }
    TermPtr r = term();
    return Formula::lit({neg, std::move(l), std::move(r)});
  }

  FormulaPtr formula() {
    std::vector<FormulaPtr> fs;
    fs.push_back(part());
    skip_ws();
    char op = peek();
    if (op != '|' && op != '&') return fs[0];
    while (eat(op)) fs.push_back(part());
    skip_ws();
    if (peek() == (op == '|' ? '&' : '|')) fail("mixed '|' and '&' require parentheses");
    return op == '|' ? Formula::disj(std::move(fs)) : Formula::conj(std::move(fs));
  }

  const std::string& text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_term_all();
}

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_formula_all();
}

}  // namespace oind
