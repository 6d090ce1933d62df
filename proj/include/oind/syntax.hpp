#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace oind {

// Sub-signature of {0, s, p, +, *}. 0 and s are always present.
struct Signature {
  bool has_p = false;
  bool has_plus = false;
  bool has_times = false;

  static Signature full() { return {true, true, true}; }
  static Signature zero_s() { return {false, false, false}; }

  bool operator==(const Signature&) const = default;

  // "0s", "0sp", "0sp+", "0sp+*", ...
  std::string to_string() const;
  static Signature from_string(const std::string& s);
};

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TermKind { Zero, Var, Param, S, P, Plus, Times };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree over a sub-signature of {0,s,p,+,*}. Var is the single
// induction variable x; Param is a named free variable.
class Term {
 public:
  static TermPtr zero();
  static TermPtr var();
  static TermPtr param(std::string name);
  static TermPtr s(TermPtr t);
  static TermPtr p(TermPtr t);
  static TermPtr plus(TermPtr l, TermPtr r);
  static TermPtr times(TermPtr l, TermPtr r);
  // s^n(t)
  static TermPtr iter_s(unsigned n, TermPtr t);
  // numeral n as s^n(0)
  static TermPtr numeral(unsigned n);

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const TermPtr& left() const { return a_; }
  const TermPtr& right() const { return b_; }
  const TermPtr& child() const { return a_; }

  std::size_t size() const { return size_; }
  bool has_var() const { return has_var_; }

  void collect_params(std::vector<std::string>& out) const;
  std::vector<std::string> params() const;

  bool uses_only(const Signature& sig) const;
  void check_signature(const Signature& sig) const;

 private:
  Term(TermKind k, std::string name, TermPtr a, TermPtr b);

  TermKind kind_;
  std::string name_;
  TermPtr a_, b_;
  std::size_t size_;
  bool has_var_;
};

bool term_equal(const TermPtr& a, const TermPtr& b);
// Total order used for deterministic tie-breaks: size, then printed form.
bool term_less(const TermPtr& a, const TermPtr& b);

// Substitute `repl` for the induction variable.
TermPtr subst_var(const TermPtr& t, const TermPtr& repl);
// Substitute a term for a named parameter.
TermPtr subst_param(const TermPtr& t, const std::string& name, const TermPtr& repl);

struct Literal {
  bool negated = false;
  TermPtr lhs, rhs;

  bool operator==(const Literal& o) const {
    return negated == o.negated && term_equal(lhs, o.lhs) && term_equal(rhs, o.rhs);
  }
};

enum class FormulaKind { Lit, And, Or, Not };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Quantifier-free formula over equality literals.
class Formula {
 public:
  static FormulaPtr lit(Literal l);
  static FormulaPtr atom(TermPtr l, TermPtr r) { return lit({false, std::move(l), std::move(r)}); }
  static FormulaPtr neg_atom(TermPtr l, TermPtr r) { return lit({true, std::move(l), std::move(r)}); }
  static FormulaPtr conj(std::vector<FormulaPtr> fs);
  static FormulaPtr disj(std::vector<FormulaPtr> fs);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr clause(std::vector<Literal> lits);
  static FormulaPtr dual_clause(std::vector<Literal> lits);

  FormulaKind kind() const { return kind_; }
  const Literal& literal() const { return lit_; }
  const std::vector<FormulaPtr>& children() const { return children_; }

  std::size_t term_size() const;  // sum of term sizes of all literals
  bool has_var() const;
  std::vector<std::string> params() const;
  void check_signature(const Signature& sig) const;

  // All literals, left to right. Only meaningful structure-wise for
  // clause/dual-clause shaped formulas but defined for every tree.
  std::vector<Literal> literals() const;

 private:
  Formula(FormulaKind k, Literal l, std::vector<FormulaPtr> children);

  FormulaKind kind_;
  Literal lit_;
  std::vector<FormulaPtr> children_;
};

FormulaPtr subst_var(const FormulaPtr& f, const TermPtr& repl);
FormulaPtr subst_param(const FormulaPtr& f, const std::string& name, const TermPtr& repl);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Induction scheme classes. Inclusion: atom => literal => clause, dclause.
enum class SchemeClass { IAtom, ILiteral, IClause, IDClause, IOpen };

const char* scheme_name(SchemeClass c);
SchemeClass scheme_from_name(const std::string& name);

struct Classification {
  bool is_atom = false;
  bool is_literal = false;
  bool is_clause = false;
  bool is_dual_clause = false;
  bool is_open = true;  // every quantifier-free formula

  bool in_class(SchemeClass c) const;
};

Classification classify(const FormulaPtr& f);

std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_literal(const Literal& l);

TermPtr parse_term(const std::string& text, const Signature& sig);
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

}  // namespace oind
