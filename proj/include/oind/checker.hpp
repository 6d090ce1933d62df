#pragma once

#include <optional>

#include "oind/axioms.hpp"
#include "oind/models.hpp"

namespace oind {

enum class Status { Holds, Fails, Unknown };

// Outcome of a check. `bounded` qualifies Holds verdicts obtained by slice
// testing rather than decision; Fails verdicts always carry a re-checkable
// witness.
struct Verdict {
  Status status = Status::Unknown;
  bool bounded = false;
  std::string witness;
  std::string method;  // "decision" | "enumeration" | "bounded-test"
  std::string note;

  std::string to_string() const;  // "holds" | "holds(bounded)" | "fails" | "unknown"
  static Verdict holds(std::string method);
  static Verdict holds_bounded(std::string note = "");
  static Verdict fails(std::string witness, std::string method);
  static Verdict unknown(std::string note);
};

struct CheckOptions {
  unsigned slice = 16;
  unsigned max_term_size = 6;
};

// An induction formula with its parameters instantiated.
struct InductionInstance {
  FormulaPtr formula;  // open formula in x and the parameter names
  Env params;

  std::string to_string(const Structure& m) const;
};

// Truth of a prenex sentence. Finite structures are decided by enumeration;
// the infinite-point model is decided via eventual polynomials; everything
// else is slice-tested.
Verdict eval_sentence(const Structure& m, const Sentence& s, const CheckOptions& opt = {});

// Truth of the induction axiom for one instantiated formula.
Verdict check_instance(const Structure& m, const InductionInstance& inst,
                       const CheckOptions& opt = {});

// Exact truth of "for all x, f" in the infinite-point model. Total.
bool decide_forall_ninf(const NInfStructure& m, const FormulaPtr& f, const Env& params);

struct DefinableFunction {
  std::vector<int> table;  // domain index -> domain index
  TermPtr witness;         // minimal term; parameters are named after elements
};

// All unary maps cut out by terms with instantiated parameters, each with a
// minimal witness (size, then printed form).
struct DefinableFunctionFamily {
  std::vector<DefinableFunction> functions;

  const DefinableFunction* find(const std::vector<int>& table) const;
};

DefinableFunctionFamily definable_functions(const FiniteStructure& m);

struct DefinableSet {
  std::vector<bool> members;
  FormulaPtr witness;  // parameters named after elements
};

struct DefinableSetFamily {
  SchemeClass level;
  std::vector<DefinableSet> sets;
};

// Sets definable at a scheme level: atoms, literals, clause closure (unions),
// dual-clause closure (intersections).
DefinableSetFamily definable_sets(const FiniteStructure& m, SchemeClass level);

// Exact decision: the scheme holds iff every definable inductive set at its
// level is the whole domain. Fails verdicts carry a witness instance.
Verdict decide_scheme(const FiniteStructure& m, SchemeClass cls);

// Recover the instance behind a failing decide_scheme verdict, for
// re-validation through check_instance.
std::optional<InductionInstance> scheme_counterexample(const FiniteStructure& m, SchemeClass cls);

// Bounded enumeration of instances of a scheme class with terms over
// `term_sig` up to `max_size` total term size and parameters drawn from a
// small probe set.
Verdict witness_search(const Structure& m, SchemeClass cls, unsigned max_size,
                       const Signature& term_sig, const CheckOptions& opt = {});

// A hypothesis for entailment testing: either a scheme or an axiom.
struct Hypothesis {
  bool is_scheme = false;
  SchemeClass scheme = SchemeClass::IAtom;
  AxiomId axiom{};

  static Hypothesis of(SchemeClass c) { return {true, c, {}}; }
  static Hypothesis of(AxiomId a) { return {false, SchemeClass::IAtom, a}; }
  std::string to_string() const;
};

struct EntailmentRow {
  std::string model;
  std::string conclusion;
  enum class Outcome { Pass, Violation, Skipped } outcome;
  std::string note;
};

struct EntailmentReport {
  std::vector<EntailmentRow> rows;
  bool ok = true;  // no violations
};

// For every model in which all hypotheses provably hold, every conclusion
// must hold; violations are hard failures. Unknown or merely bounded
// hypothesis verdicts skip the model.
EntailmentReport semantic_entailment(const std::vector<StructurePtr>& models,
                                     const std::vector<Hypothesis>& hypotheses,
                                     const std::vector<AxiomId>& conclusions,
                                     const CheckOptions& opt = {});

// Verdict for a scheme on an arbitrary zoo structure: exact decision when
// finite, witness search against the decision procedure on the
// infinite-point model, bounded search elsewhere.
Verdict scheme_verdict(const Structure& m, SchemeClass cls, const CheckOptions& opt = {});

}  // namespace oind
