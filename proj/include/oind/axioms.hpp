#pragma once

#include <string>
#include <vector>

#include "oind/syntax.hpp"

namespace oind {

enum class Quantifier { ForAll, Exists };

struct QuantifiedVar {
  Quantifier q;
  std::string var;
};

// Prenex sentence: quantifier prefix over named variables, quantifier-free
// matrix in which the bound variables appear as parameters.
struct Sentence {
  std::vector<QuantifiedVar> prefix;
  FormulaPtr matrix;

  std::string to_string() const;
};

enum class AxiomFamily {
  A1, A2, A3, A3a, A4, A5, A6, A7, SUR,
  Bnm,       // B_{n,m}: s^n0 = s^{n+m}0 -> forall x, x = s^k0 for some k < n+m
  BnmPrime,  // B'_{n,m}: s^n0 = s^{m+1}0 -> forall x, x = s^k0 for some k <= m
  Bn,        // x != s^n x
  B1, B2, B3, B4, B5, B6, B7,
  Cd,        // weak multiplicative cancellation
};

struct AxiomId {
  AxiomFamily family;
  unsigned n = 0, m = 0;  // Bnm/BnmPrime use both, Bn and Cd use n only

  bool operator==(const AxiomId&) const = default;

  // "A1".."A7", "A3a", "SUR", "B(n,m)", "B'(n,m)", "Bn(n)", "B1".."B7", "C(d)"
  std::string to_string() const;
  static AxiomId parse(const std::string& text);
};

struct AxiomParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The sentence for an axiom id. Numeral coefficients are expanded through s,
// and d*y in C'_d is rendered as the d-fold left-associated sum.
Sentence gen(const AxiomId& id);

// Smallest signature in which the axiom is expressible.
Signature axiom_signature(const AxiomId& id);

enum class TheoryName { T0, T1, T2, T3, T4, T5 };

TheoryName theory_from_name(const std::string& name);
const char* theory_name(TheoryName t);

struct Theory {
  Signature signature;
  std::vector<AxiomId> axioms;
};

Theory theory(TheoryName name);

// The translation between the two lollipop axiom families; an involution on
// valid ids.
AxiomId bnm_translate(const AxiomId& id);

// "forall x,y: x+y=y+x", "forall x exists y: x=0 | x=s(y)". The quantified
// variables appear as parameters in the matrix; a bare matrix is a closed
// formula.
Sentence parse_sentence(const std::string& text, const Signature& sig);

}  // namespace oind
