#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oind/algebra.hpp"
#include "oind/syntax.hpp"

namespace oind {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element of one of the zoo structures. Nat carries the value for the
// standard and infinite models, Fin indexes a finite domain.
struct Element {
  enum class Kind { Nat, Inf, A, B, Fin };
  Kind kind = Kind::Nat;
  Int nat = 0;
  int fin = 0;

  static Element nat_of(Int n) { return {Kind::Nat, std::move(n), 0}; }
  static Element inf() { return {Kind::Inf, 0, 0}; }
  static Element a() { return {Kind::A, 0, 0}; }
  static Element b() { return {Kind::B, 0, 0}; }
  static Element fin_of(int i) { return {Kind::Fin, 0, i}; }

  bool operator==(const Element& o) const { return kind == o.kind && (kind != Kind::Nat || nat == o.nat) && (kind != Kind::Fin || fin == o.fin); }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

using Env = std::map<std::string, Element>;

class Structure;
using StructurePtr = std::shared_ptr<const Structure>;

// Uniform evaluation interface over the model zoo. Structures are immutable
// and shareable.
class Structure {
 public:
  virtual ~Structure() = default;

  virtual const std::string& name() const = 0;
  virtual const Signature& signature() const = 0;

  virtual Element zero() const = 0;
  virtual Element succ(const Element& e) const = 0;
  virtual Element pred(const Element& e) const = 0;
  virtual Element add(const Element& l, const Element& r) const = 0;
  virtual Element mul(const Element& l, const Element& r) const = 0;

  virtual bool is_finite() const { return false; }
  // Finite structures only.
  virtual int domain_size() const { return -1; }
  virtual std::string element_name(const Element& e) const;

  // Bounded probe set used for witness search and bounded sentence checking
  // on infinite domains; for finite domains, the whole domain.
  virtual std::vector<Element> probe_elements(unsigned slice) const = 0;
};

Element eval_term(const Structure& m, const TermPtr& t, const Element& x_val, const Env& params);
bool eval_literal(const Structure& m, const Literal& l, const Element& x_val, const Env& params);
bool eval_open(const Structure& m, const FormulaPtr& f, const Element& x_val, const Env& params);

std::string element_to_string(const Structure& m, const Element& e);
Element element_from_string(const Structure& m, const std::string& s);

// Finite structure from explicit tables.
class FiniteStructure : public Structure {
 public:
  FiniteStructure(std::string name, Signature sig, std::vector<std::string> domain,
                  int zero_index, std::vector<int> s_table, std::vector<int> p_table,
                  std::vector<std::vector<int>> plus_table,
                  std::vector<std::vector<int>> times_table);

  const std::string& name() const override { return name_; }
  const Signature& signature() const override { return sig_; }

  Element zero() const override { return Element::fin_of(zero_index_); }
  Element succ(const Element& e) const override;
  Element pred(const Element& e) const override;
  Element add(const Element& l, const Element& r) const override;
  Element mul(const Element& l, const Element& r) const override;

  bool is_finite() const override { return true; }
  int domain_size() const override { return static_cast<int>(domain_.size()); }
  std::string element_name(const Element& e) const override;
  std::vector<Element> probe_elements(unsigned slice) const override;

  const std::vector<std::string>& domain() const { return domain_; }
  int succ_index(int i) const { return s_table_[static_cast<std::size_t>(i)]; }

  static std::shared_ptr<const FiniteStructure> from_json(const std::string& json_text);
  std::string to_json() const;

 private:
  int check(const Element& e) const;

  std::string name_;
  Signature sig_;
  std::vector<std::string> domain_;
  int zero_index_;
  std::vector<int> s_table_, p_table_;
  std::vector<std::vector<int>> plus_table_, times_table_;
};

struct ModelFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// N with an absorbing point at infinity; s, p, + and * treat infinity as a
// fixed point, with inf*0 = 0.
class NInfStructure : public Structure {
 public:
  explicit NInfStructure(Signature sig);
  const std::string& name() const override { return name_; }
  const Signature& signature() const override { return sig_; }
  Element zero() const override { return Element::nat_of(0); }
  Element succ(const Element& e) const override;
  Element pred(const Element& e) const override;
  Element add(const Element& l, const Element& r) const override;
  Element mul(const Element& l, const Element& r) const override;
  std::vector<Element> probe_elements(unsigned slice) const override;

 private:
  Signature sig_;
  std::string name_;
};

// N plus two extra points a and b that are fixed by s and p, row-absorbing
// for + and *, and swapped by standard rows.
class NabStructure : public Structure {
 public:
  explicit NabStructure(Signature sig);
  const std::string& name() const override { return name_; }
  const Signature& signature() const override { return sig_; }
  Element zero() const override { return Element::nat_of(0); }
  Element succ(const Element& e) const override;
  Element pred(const Element& e) const override;
  Element add(const Element& l, const Element& r) const override;
  Element mul(const Element& l, const Element& r) const override;
  std::vector<Element> probe_elements(unsigned slice) const override;

 private:
  Signature sig_;
  std::string name_;
};

// Standard model, p truncated at 0.
class StandardStructure : public Structure {
 public:
  explicit StandardStructure(Signature sig);
  const std::string& name() const override { return name_; }
  const Signature& signature() const override { return sig_; }
  Element zero() const override { return Element::nat_of(0); }
  Element succ(const Element& e) const override;
  Element pred(const Element& e) const override;
  Element add(const Element& l, const Element& r) const override;
  Element mul(const Element& l, const Element& r) const override;
  std::vector<Element> probe_elements(unsigned slice) const override;

 private:
  Signature sig_;
  std::string name_;
};

// Named structure catalog: standard, ninf (with reducts), nab, and the two
// finite countermodels lollipop5 and lollipop6.
std::vector<StructurePtr> zoo();
StructurePtr zoo_lookup(const std::string& name);

std::shared_ptr<const FiniteStructure> make_lollipop5();
std::shared_ptr<const FiniteStructure> make_lollipop6();

// Z_k with the full signature: s adds 1 mod k, p subtracts 1 mod k, ring ops
// mod k. Satisfies every induction scheme (the s-orbit of 0 is the domain).
std::shared_ptr<const FiniteStructure> make_cyclic(int k);

}  // namespace oind
