#include "oind/checker.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace oind {

// ---------------------------------------------------------------------------
// Verdict

std::string Verdict::to_string() const {
  switch (status) {
    case Status::Holds: return bounded ? "holds(bounded)" : "holds";
    case Status::Fails: return "fails";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

Verdict Verdict::holds(std::string method) {
  return {Status::Holds, false, "", std::move(method), ""};
}

Verdict Verdict::holds_bounded(std::string note) {
  return {Status::Holds, true, "", "bounded-test", std::move(note)};
}

Verdict Verdict::fails(std::string witness, std::string method) {
  return {Status::Fails, false, std::move(witness), std::move(method), ""};
}

Verdict Verdict::unknown(std::string note) {
  return {Status::Unknown, false, "", "", std::move(note)};
}

std::string InductionInstance::to_string(const Structure& m) const {
  std::ostringstream os;
  os << "I(" << print_formula(formula) << ")";
  if (!params.empty()) {
    os << " [";
    bool first = true;
    for (auto& [k, v] : params) {
      if (!first) os << ", ";
      first = false;
      os << k << ":=" << element_to_string(m, v);
    }
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Decision procedure for the infinite-point model.
//
// Quantified variables range over {0..T} U {infinity} U a generic regime
// "> T"; in the generic regime term values are represented by eventual
// polynomials valid once every generic variable is large enough. The budget
// collects every threshold and root bound the analysis relies on; whenever it
// exceeds T the whole analysis reruns with a larger T, so concluded verdicts
// never rest on an uncovered region.

namespace {

struct GiveUp {};

struct Abs {
  bool inf = false;
  Polynomial poly;     // over the generic variable names
  unsigned valid = 0;  // trustworthy once every generic variable >= valid

  static Abs of_nat(const Int& n) {
    Abs a;
    a.poly = Polynomial::constant(n);
    return a;
  }
  static Abs of_inf() {
    Abs a;
    a.inf = true;
    return a;
  }
  static Abs generic(const std::string& v) {
    Abs a;
    a.poly = Polynomial::variable(v);
    return a;
  }
  static Abs of_element(const Element& e) {
    if (e.kind == Element::Kind::Inf) return of_inf();
    if (e.kind == Element::Kind::Nat) return of_nat(e.nat);
    throw EvalError("element outside the infinite-point model");
  }
};

using AbsEnv = std::map<std::string, Abs>;

struct Budget {
  unsigned T;
  unsigned needed = 0;

  void require(unsigned n) { needed = std::max(needed, n); }
};

Int corner_value(const Polynomial& q, unsigned n) {
  std::map<std::string, Int> vals;
  for (auto& v : q.variables()) vals[v] = n;
  return q.evaluate(vals);
}

// Smallest n >= start with q >= 1 on the region "all variables >= n". Sound
// because term-value polynomials are monotone non-decreasing in each variable
// on their validity region, so the diagonal corner is the minimum.
unsigned ensure_positive(const Polynomial& q, unsigned start) {
  unsigned n = start;
  while (corner_value(q, n) < 1) {
    if (++n > 100000) throw GiveUp{};
  }
  return n;
}

Abs abs_term(const TermPtr& t, const AbsEnv& env) {
  switch (t->kind()) {
    case TermKind::Zero: return Abs::of_nat(0);
    case TermKind::Var: {
      auto it = env.find("x");
      if (it == env.end()) throw EvalError("unbound induction variable");
      return it->second;
    }
    case TermKind::Param: {
      auto it = env.find(t->name());
      if (it == env.end()) throw EvalError("unbound parameter " + t->name());
      return it->second;
    }
    case TermKind::S: {
      Abs c = abs_term(t->child(), env);
      if (c.inf) return c;
      c.poly = c.poly + Polynomial::constant(1);
      return c;
    }
    case TermKind::P: {
      Abs c = abs_term(t->child(), env);
      if (c.inf || c.poly.is_zero()) return c;
      if (c.poly.is_constant()) {
        c.poly = c.poly - Polynomial::constant(1);
        return c;
      }
      c.valid = ensure_positive(c.poly, c.valid);
      c.poly = c.poly - Polynomial::constant(1);
      return c;
    }
    case TermKind::Plus: {
      Abs l = abs_term(t->left(), env);
      Abs r = abs_term(t->right(), env);
      unsigned valid = std::max(l.valid, r.valid);
      if (l.inf || r.inf) {
        Abs a = Abs::of_inf();
        a.valid = valid;
        return a;
      }
      l.poly = l.poly + r.poly;
      l.valid = valid;
      return l;
    }
    case TermKind::Times: {
      Abs l = abs_term(t->left(), env);
      Abs r = abs_term(t->right(), env);
      unsigned valid = std::max(l.valid, r.valid);
      if (!l.inf && !r.inf) {
        l.poly = l.poly * r.poly;
        l.valid = valid;
        return l;
      }
      const Abs& fin = l.inf ? r : l;
      if (l.inf && r.inf) {
        Abs a = Abs::of_inf();
        a.valid = valid;
        return a;
      }
      if (fin.poly.is_zero()) {
        Abs a = Abs::of_nat(0);
        a.valid = valid;
        return a;
      }
      if (!fin.poly.is_constant()) valid = ensure_positive(fin.poly, valid);
      Abs a = Abs::of_inf();
      a.valid = valid;
      return a;
    }
  }
  throw EvalError("bad term");
}

struct AtomStatus {
  int tri;  // 1 true, 0 false, -1 varies over the generic region
  Polynomial d;
};

AtomStatus abs_atom(const TermPtr& lhs, const TermPtr& rhs, const AbsEnv& env, Budget& budget) {
  Abs l = abs_term(lhs, env);
  Abs r = abs_term(rhs, env);
  budget.require(l.valid);
  budget.require(r.valid);
  if (l.inf && r.inf) return {1, {}};
  if (l.inf != r.inf) return {0, {}};  // generic values are finite
  Polynomial d = l.poly - r.poly;
  if (d.is_zero()) return {1, {}};
  if (d.is_constant()) return {0, {}};
  auto vars = d.variables();
  if (vars.size() == 1) {
    std::vector<Int> roots;
    try {
      roots = natural_roots(d);
    } catch (const std::overflow_error&) {
      throw GiveUp{};
    }
    if (roots.empty()) return {0, {}};
    const Int& rmax = roots.back();
    if (rmax > 1000000) throw GiveUp{};
    if (rmax <= budget.T) {
      budget.require(static_cast<unsigned>(rmax));
      return {0, {}};  // every root is covered by the concrete scan
    }
    // roots inside the generic region: the atom varies there; retry with a
    // larger T if the realization grid cannot reach the last root
    if (rmax > budget.T + 3) budget.require(static_cast<unsigned>(rmax));
  }
  if (d.coefficients().begin()->second < 0) d = -d;
  return {-1, std::move(d)};
}

int tri_not(int v) { return v < 0 ? -1 : 1 - v; }

int tri_formula(const FormulaPtr& f, const std::function<int(const Literal&)>& lit_val) {
  switch (f->kind()) {
    case FormulaKind::Lit: return lit_val(f->literal());
    case FormulaKind::And: {
      int out = 1;
      for (auto& c : f->children()) {
        int v = tri_formula(c, lit_val);
        if (v == 0) return 0;
        if (v < 0) out = -1;
      }
      return out;
    }
    case FormulaKind::Or: {
      int out = 0;
      for (auto& c : f->children()) {
        int v = tri_formula(c, lit_val);
        if (v == 1) return 1;
        if (v < 0) out = -1;
      }
      return out;
    }
    case FormulaKind::Not: return tri_not(tri_formula(f->children()[0], lit_val));
  }
  throw EvalError("bad formula");
}

struct DecideResult {
  int tri = -1;  // 1 holds, 0 fails, -1 undecided
  Env witness;   // full concrete assignment when tri == 0
  std::string note;
};

struct NinfDecider {
  const NInfStructure& m;
  const std::vector<QuantifiedVar>& prefix;
  FormulaPtr matrix;
  Budget budget;
  std::vector<std::string> generics;

  Env concretize(const AbsEnv& env, const std::map<std::string, Int>& valuation) const {
    Env out;
    for (auto& [name, abs] : env) {
      if (abs.inf)
        out[name] = Element::inf();
      else
        out[name] = Element::nat_of(abs.poly.evaluate(valuation));
    }
    return out;
  }

  std::map<std::string, Int> default_valuation() const {
    std::map<std::string, Int> v;
    for (auto& g : generics) v[g] = budget.T + 1;
    return v;
  }

  // nullopt: the candidate point does not actually refute the matrix (the
  // abstract analysis was conservative); callers fall through.
  std::optional<Env> verified_counterexample(const AbsEnv& env,
                                             const std::map<std::string, Int>& valuation) {
    Env full = concretize(env, valuation);
    if (!eval_open(m, matrix, m.zero(), full)) return full;
    return std::nullopt;
  }

  DecideResult leaf(const AbsEnv& env) {
    std::vector<std::pair<std::string, Polynomial>> classes;
    auto resolver = [&](const std::map<std::string, bool>* assignment) {
      return [&, assignment](const Literal& lit) -> int {
        AtomStatus st = abs_atom(lit.lhs, lit.rhs, env, budget);
        int v = st.tri;
        if (v < 0) {
          std::string key = st.d.to_string();
          if (assignment) {
            v = assignment->at(key) ? 1 : 0;
          } else {
            bool known = false;
            for (auto& [k, p] : classes) known = known || k == key;
            if (!known) classes.emplace_back(key, st.d);
          }
        }
        return lit.negated ? tri_not(v) : v;
      };
    };

    int v0 = tri_formula(matrix, resolver(nullptr));
    if (v0 == 1) return {1, {}, ""};
    if (v0 == 0) {
      if (auto w = verified_counterexample(env, default_valuation())) return {0, *w, ""};
      return {-1, {}, "abstract refutation did not concretize"};
    }

    if (classes.size() > 6) return {-1, {}, "too many varying atoms"};
    if (generics.empty()) return {-1, {}, "varying atom without generic variables"};

    bool unresolved = false;
    for (unsigned mask = 0; mask < (1u << classes.size()); ++mask) {
      std::map<std::string, bool> assignment;
      for (std::size_t i = 0; i < classes.size(); ++i)
        assignment[classes[i].first] = (mask >> i) & 1;
      if (tri_formula(matrix, resolver(&assignment)) != 0) continue;

      // look for a region point realizing this falsifying combination
      bool realized = false;
      std::vector<unsigned> idx(generics.size(), 0);
      const unsigned grid = 4;
      for (;;) {
        std::map<std::string, Int> valuation;
        for (std::size_t i = 0; i < generics.size(); ++i)
          valuation[generics[i]] = budget.T + 1 + idx[i];
        bool match = true;
        for (std::size_t i = 0; i < classes.size() && match; ++i)
          match = (classes[i].second.evaluate(valuation) == 0) == assignment[classes[i].first];
        if (match) {
          if (auto w = verified_counterexample(env, valuation)) return {0, *w, ""};
          realized = true;  // inconsistent; fall back to unknown below
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == grid) idx[k++] = 0;
        if (k == idx.size()) break;
      }
      (void)realized;
      unresolved = true;
    }
    if (unresolved) return {-1, {}, "varying atoms not separable at this bound"};
    return {1, {}, ""};
  }

  DecideResult rec(std::size_t i, AbsEnv& env) {
    if (i == prefix.size()) return leaf(env);
    const auto& qv = prefix[i];
    std::vector<Abs> candidates;
    for (unsigned k = 0; k <= budget.T; ++k) candidates.push_back(Abs::of_nat(k));
    candidates.push_back(Abs::of_inf());
    std::size_t generic_at = candidates.size();
    candidates.push_back(Abs::generic(qv.var));
    if (qv.q == Quantifier::Exists) {
      int span = static_cast<int>(std::min(budget.T, 8u));
      for (auto& g : generics) {
        for (int c = -span; c <= span; ++c) {
          if (c == 0) continue;
          Abs a;
          a.poly = Polynomial::variable(g) + Polynomial::constant(c);
          a.valid = c < 0 ? static_cast<unsigned>(-c) : 0;
          candidates.push_back(a);
        }
      }
    }

    bool any_undecided = false;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      bool is_generic = ci == generic_at;
      env[qv.var] = candidates[ci];
      if (is_generic) generics.push_back(qv.var);
      DecideResult r = rec(i + 1, env);
      if (is_generic) generics.pop_back();
      env.erase(qv.var);
      if (qv.q == Quantifier::ForAll) {
        if (r.tri == 0) return r;
        if (r.tri < 0) any_undecided = true;
      } else {
        if (r.tri == 1) return r;
        if (r.tri < 0) any_undecided = true;
      }
    }
    if (qv.q == Quantifier::ForAll)
      return any_undecided ? DecideResult{-1, {}, "undecided branch"} : DecideResult{1, {}, ""};
    return {-1, {}, "existential candidates exhausted"};
  }
};

std::string witness_string(const Structure& m, const std::vector<QuantifiedVar>& prefix,
                           const Env& env) {
  std::ostringstream os;
  bool first = true;
  for (auto& qv : prefix) {
    auto it = env.find(qv.var);
    if (it == env.end()) continue;
    if (!first) os << ", ";
    first = false;
    os << qv.var << "=" << element_to_string(m, it->second);
  }
  return os.str();
}

Verdict ninf_decide(const NInfStructure& m, const std::vector<QuantifiedVar>& prefix,
                    const FormulaPtr& matrix0, const Env& params) {
  if (prefix.size() > 3) return Verdict::unknown("quantifier prefix longer than supported");
  FormulaPtr matrix = subst_var(matrix0, Term::param("x"));
  unsigned T = 4;
  for (int attempt = 0; attempt < 12; ++attempt) {
    NinfDecider d{m, prefix, matrix, Budget{T}, {}};
    AbsEnv env;
    for (auto& [k, v] : params) env[k] = Abs::of_element(v);
    DecideResult r;
    try {
      r = d.rec(0, env);
    } catch (const GiveUp&) {
      return Verdict::unknown("coefficient growth beyond decision budget");
    }
    if (r.tri == 0) return Verdict::fails(witness_string(m, prefix, r.witness), "decision");
    if (d.budget.needed <= T) {
      if (r.tri == 1) return Verdict::holds("decision");
      return Verdict::unknown(r.note.empty() ? "undecided" : r.note);
    }
    if (d.budget.needed > 2000) return Verdict::unknown("threshold beyond decision budget");
    T = d.budget.needed;
  }
  return Verdict::unknown("threshold did not stabilize");
}

}  // namespace

bool decide_forall_ninf(const NInfStructure& m, const FormulaPtr& f, const Env& params) {
  std::vector<QuantifiedVar> prefix{{Quantifier::ForAll, "x"}};
  Verdict v = ninf_decide(m, prefix, f, params);
  if (v.status == Status::Unknown)
    throw std::logic_error("decision procedure gave up on a universal formula: " + v.note);
  return v.status == Status::Holds;
}

// ---------------------------------------------------------------------------
// Sentence evaluation

namespace {

// Exhaustive (finite domains) or probe-based recursion over the prefix.
// Returns a refuting assignment of the universally quantified variables.
std::optional<Env> scan_prefix(const Structure& m, const std::vector<QuantifiedVar>& prefix,
                               const FormulaPtr& matrix, std::size_t i, Env& env,
                               const std::vector<Element>& pool) {
  if (i == prefix.size())
    return eval_open(m, matrix, m.zero(), env) ? std::nullopt : std::optional<Env>(env);
  const auto& qv = prefix[i];
  for (auto& e : pool) {
    env[qv.var] = e;
    auto fail = scan_prefix(m, prefix, matrix, i + 1, env, pool);
    env.erase(qv.var);
    if (qv.q == Quantifier::ForAll) {
      if (fail) return fail;
    } else {
      if (!fail) return std::nullopt;
    }
  }
  if (qv.q == Quantifier::ForAll) return std::nullopt;
  return env;  // no witness for the existential among the pool
}

bool prefix_has_exists(const std::vector<QuantifiedVar>& prefix) {
  return std::any_of(prefix.begin(), prefix.end(),
                     [](const QuantifiedVar& q) { return q.q == Quantifier::Exists; });
}

}  // namespace

Verdict eval_sentence(const Structure& m, const Sentence& s, const CheckOptions& opt) {
  FormulaPtr matrix = subst_var(s.matrix, Term::param("x"));
  matrix->check_signature(m.signature());
  if (auto* ninf = dynamic_cast<const NInfStructure*>(&m))
    return ninf_decide(*ninf, s.prefix, matrix, {});
  if (m.is_finite()) {
    Env env;
    auto fail = scan_prefix(m, s.prefix, matrix, 0, env, m.probe_elements(0));
    if (fail) return Verdict::fails(witness_string(m, s.prefix, *fail), "enumeration");
    return Verdict::holds("enumeration");
  }
  Env env;
  auto fail = scan_prefix(m, s.prefix, matrix, 0, env, m.probe_elements(opt.slice));
  if (fail) {
    if (prefix_has_exists(s.prefix))
      return Verdict::unknown("refuted on a slice, but an existential was slice-limited");
    return Verdict::fails(witness_string(m, s.prefix, *fail), "bounded-test");
  }
  return Verdict::holds_bounded("verified on a slice of size " + std::to_string(opt.slice));
}

// ---------------------------------------------------------------------------
// Induction instances

namespace {

FormulaPtr step_formula(const FormulaPtr& phi) {
  return Formula::disj({Formula::negate(phi), subst_var(phi, Term::s(Term::var()))});
}

}  // namespace

Verdict check_instance(const Structure& m, const InductionInstance& inst,
                       const CheckOptions& opt) {
  const FormulaPtr& phi = inst.formula;
  phi->check_signature(m.signature());
  FormulaPtr base = subst_var(phi, Term::zero());
  FormulaPtr step = step_formula(phi);

  if (auto* ninf = dynamic_cast<const NInfStructure*>(&m)) {
    std::vector<QuantifiedVar> one{{Quantifier::ForAll, "x"}};
    Verdict vb = ninf_decide(*ninf, {}, base, inst.params);
    Verdict vs = ninf_decide(*ninf, one, step, inst.params);
    Verdict vc = ninf_decide(*ninf, one, phi, inst.params);
    if (vc.status == Status::Holds) return Verdict::holds("decision");
    if (vb.status == Status::Fails || vs.status == Status::Fails) {
      Verdict v = Verdict::holds("decision");
      v.note = "induction hypothesis fails";
      return v;
    }
    if (vb.status == Status::Holds && vs.status == Status::Holds && vc.status == Status::Fails)
      return Verdict::fails(vc.witness, "decision");
    return Verdict::unknown("component undecided: " + vb.note + vs.note + vc.note);
  }

  std::vector<Element> pool = m.is_finite() ? m.probe_elements(0) : m.probe_elements(opt.slice);
  bool exact = m.is_finite();
  std::string method = exact ? "enumeration" : "bounded-test";

  if (!eval_open(m, base, m.zero(), inst.params)) {
    Verdict v = Verdict::holds(method);
    v.bounded = false;
    v.note = "induction hypothesis fails";
    return v;
  }
  for (auto& e : pool) {
    if (eval_open(m, phi, e, inst.params) && !eval_open(m, phi, m.succ(e), inst.params)) {
      Verdict v = Verdict::holds(method);
      v.note = "induction hypothesis fails";
      return v;
    }
  }
  for (auto& e : pool) {
    if (!eval_open(m, phi, e, inst.params)) {
      Verdict v = Verdict::fails("x=" + element_to_string(m, e), method);
      if (!exact) v.note = "induction hypothesis verified on a slice only";
      return v;
    }
  }
  return exact ? Verdict::holds(method) : Verdict::holds_bounded();
}

// ---------------------------------------------------------------------------
// Definable functions and sets on finite structures

namespace {

struct QueueItem {
  std::size_t size;
  std::string print;
  TermPtr term;
  std::vector<int> table;

  bool operator>(const QueueItem& o) const {
    if (size != o.size) return size > o.size;
    return print > o.print;
  }
};

std::vector<int> apply_unary(const FiniteStructure& m, const std::vector<int>& t, bool pred) {
  std::vector<int> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Element e = Element::fin_of(t[i]);
    out[i] = (pred ? m.pred(e) : m.succ(e)).fin;
  }
  return out;
}

std::vector<int> apply_binary(const FiniteStructure& m, const std::vector<int>& a,
                              const std::vector<int>& b, bool times) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Element l = Element::fin_of(a[i]), r = Element::fin_of(b[i]);
    out[i] = (times ? m.mul(l, r) : m.add(l, r)).fin;
  }
  return out;
}

}  // namespace

const DefinableFunction* DefinableFunctionFamily::find(const std::vector<int>& table) const {
  for (auto& f : functions)
    if (f.table == table) return &f;
  return nullptr;
}

DefinableFunctionFamily definable_functions(const FiniteStructure& m) {
  const int n = m.domain_size();
  const Signature& sig = m.signature();
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> pq;

  auto push = [&](TermPtr t, std::vector<int> table) {
    std::string pr = print_term(t);
    pq.push({t->size(), std::move(pr), std::move(t), std::move(table)});
  };

  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
  push(Term::var(), identity);
  push(Term::zero(), std::vector<int>(static_cast<std::size_t>(n), m.zero().fin));
  for (int i = 0; i < n; ++i)
    push(Term::param(m.domain()[static_cast<std::size_t>(i)]),
         std::vector<int>(static_cast<std::size_t>(n), i));

  DefinableFunctionFamily fam;
  std::set<std::vector<int>> seen;
  while (!pq.empty()) {
    QueueItem it = pq.top();
    pq.pop();
    if (seen.count(it.table)) continue;
    seen.insert(it.table);
    push(Term::s(it.term), apply_unary(m, it.table, false));
    if (sig.has_p) push(Term::p(it.term), apply_unary(m, it.table, true));
    for (auto& g : fam.functions) {
      if (sig.has_plus) {
        push(Term::plus(it.term, g.witness), apply_binary(m, it.table, g.table, false));
        push(Term::plus(g.witness, it.term), apply_binary(m, g.table, it.table, false));
      }
      if (sig.has_times) {
        push(Term::times(it.term, g.witness), apply_binary(m, it.table, g.table, true));
        push(Term::times(g.witness, it.term), apply_binary(m, g.table, it.table, true));
      }
    }
    if (sig.has_plus) push(Term::plus(it.term, it.term), apply_binary(m, it.table, it.table, false));
    if (sig.has_times) push(Term::times(it.term, it.term), apply_binary(m, it.table, it.table, true));
    fam.functions.push_back({std::move(it.table), std::move(it.term)});
  }
  return fam;
}

DefinableSetFamily definable_sets(const FiniteStructure& m, SchemeClass level) {
  if (level == SchemeClass::IOpen)
    throw std::invalid_argument("no exact set family for the full open class");
  const std::size_t n = static_cast<std::size_t>(m.domain_size());
  DefinableFunctionFamily fam = definable_functions(m);

  DefinableSetFamily out;
  out.level = level;
  std::set<std::vector<bool>> seen;
  auto add = [&](std::vector<bool> members, FormulaPtr witness) {
    if (seen.count(members)) return false;
    seen.insert(members);
    out.sets.push_back({std::move(members), std::move(witness)});
    return true;
  };

  for (std::size_t i = 0; i < fam.functions.size(); ++i) {
    for (std::size_t j = i; j < fam.functions.size(); ++j) {
      const auto& f = fam.functions[i];
      const auto& g = fam.functions[j];
      std::vector<bool> members(n), complement(n);
      for (std::size_t a = 0; a < n; ++a) {
        members[a] = f.table[a] == g.table[a];
        complement[a] = !members[a];
      }
      add(members, Formula::atom(f.witness, g.witness));
      if (level != SchemeClass::IAtom)
        add(complement, Formula::neg_atom(f.witness, g.witness));
    }
  }

  if (level == SchemeClass::IClause || level == SchemeClass::IDClause) {
    bool combine_union = level == SchemeClass::IClause;
    for (std::size_t i = 0; i < out.sets.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<bool> members(n);
        for (std::size_t a = 0; a < n; ++a)
          members[a] = combine_union ? (out.sets[i].members[a] || out.sets[j].members[a])
                                     : (out.sets[i].members[a] && out.sets[j].members[a]);
        std::vector<FormulaPtr> parts{out.sets[j].witness, out.sets[i].witness};
        add(members, combine_union ? Formula::disj(parts) : Formula::conj(parts));
      }
    }
  }
  return out;
}

namespace {

std::optional<InductionInstance> inductive_proper_subset(const FiniteStructure& m,
                                                         SchemeClass cls) {
  DefinableSetFamily sets = definable_sets(m, cls);
  const std::size_t n = static_cast<std::size_t>(m.domain_size());
  for (auto& s : sets.sets) {
    if (!s.members[static_cast<std::size_t>(m.zero().fin)]) continue;
    bool closed = true, full = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      full = full && s.members[a];
      if (s.members[a])
        closed = s.members[static_cast<std::size_t>(m.succ_index(static_cast<int>(a)))];
    }
    if (!closed || full) continue;
    InductionInstance inst;
    inst.formula = s.witness;
    for (auto& p : s.witness->params()) inst.params[p] = element_from_string(m, p);
    return inst;
  }
  return std::nullopt;
}

}  // namespace

std::optional<InductionInstance> scheme_counterexample(const FiniteStructure& m, SchemeClass cls) {
  return inductive_proper_subset(m, cls);
}

Verdict decide_scheme(const FiniteStructure& m, SchemeClass cls) {
  auto inst = inductive_proper_subset(m, cls);
  if (!inst) return Verdict::holds("decision");
  return Verdict::fails(inst->to_string(m), "decision");
}

// ---------------------------------------------------------------------------
// Bounded witness search

namespace {

std::vector<std::vector<TermPtr>> terms_by_size(const Signature& sig, unsigned max_size) {
  std::vector<std::vector<TermPtr>> by(max_size + 1);
  if (max_size < 1) return by;
  by[1] = {Term::zero(), Term::var(), Term::param("z"), Term::param("w")};
  for (unsigned k = 2; k <= max_size; ++k) {
    for (auto& t : by[k - 1]) {
      by[k].push_back(Term::s(t));
      if (sig.has_p) by[k].push_back(Term::p(t));
    }
    for (unsigned i = 1; i + 1 < k; ++i) {
      for (auto& l : by[i]) {
        for (auto& r : by[k - 1 - i]) {
          if (sig.has_plus) by[k].push_back(Term::plus(l, r));
          if (sig.has_times) by[k].push_back(Term::times(l, r));
        }
      }
    }
  }
  return by;
}

// Every parameter assignment from the pool, in pool order.
void for_each_env(const std::vector<std::string>& names, const std::vector<Element>& pool,
                  std::size_t i, Env& env, const std::function<bool(const Env&)>& body,
                  bool& stop) {
  if (stop) return;
  if (i == names.size()) {
    stop = body(env);
    return;
  }
  for (auto& e : pool) {
    env[names[i]] = e;
    for_each_env(names, pool, i + 1, env, body, stop);
    if (stop) break;
  }
  env.erase(names[i]);
}

}  // namespace

Verdict witness_search(const Structure& m, SchemeClass cls, unsigned max_size,
                       const Signature& term_sig, const CheckOptions& opt) {
  if (!m.signature().has_p && term_sig.has_p)
    throw SignatureError("search signature uses p outside the model's signature");
  if (!m.signature().has_plus && term_sig.has_plus)
    throw SignatureError("search signature uses + outside the model's signature");
  if (!m.signature().has_times && term_sig.has_times)
    throw SignatureError("search signature uses * outside the model's signature");

  auto by = terms_by_size(term_sig, max_size > 0 ? max_size - 1 : 0);
  std::vector<Element> pool = m.probe_elements(std::min(opt.slice, 3u));

  std::vector<FormulaPtr> candidates;
  std::vector<Literal> literal_pool;
  for (unsigned s1 = 1; s1 < by.size(); ++s1) {
    for (unsigned s2 = s1; s1 + s2 <= max_size && s2 < by.size(); ++s2) {
      for (std::size_t i = 0; i < by[s1].size(); ++i) {
        std::size_t j0 = s1 == s2 ? i : 0;
        for (std::size_t j = j0; j < by[s2].size(); ++j) {
          const TermPtr& a = by[s1][i];
          const TermPtr& b = by[s2][j];
          if (!a->has_var() && !b->has_var()) continue;
          literal_pool.push_back({false, a, b});
          if (cls != SchemeClass::IAtom) literal_pool.push_back({true, a, b});
        }
      }
    }
  }
  std::stable_sort(literal_pool.begin(), literal_pool.end(),
                   [](const Literal& a, const Literal& b) {
                     std::size_t sa = a.lhs->size() + a.rhs->size();
                     std::size_t sb = b.lhs->size() + b.rhs->size();
                     return sa < sb;
                   });
  for (auto& l : literal_pool) candidates.push_back(Formula::lit(l));
  if (cls == SchemeClass::IClause || cls == SchemeClass::IDClause || cls == SchemeClass::IOpen) {
    for (std::size_t i = 0; i < literal_pool.size(); ++i) {
      std::size_t si = literal_pool[i].lhs->size() + literal_pool[i].rhs->size();
      for (std::size_t j = 0; j <= i; ++j) {
        std::size_t sj = literal_pool[j].lhs->size() + literal_pool[j].rhs->size();
        if (si + sj > max_size) continue;
        std::vector<Literal> lits{literal_pool[j], literal_pool[i]};
        if (cls != SchemeClass::IDClause) candidates.push_back(Formula::clause(lits));
        if (cls == SchemeClass::IDClause || cls == SchemeClass::IOpen)
          candidates.push_back(Formula::dual_clause(lits));
      }
    }
  }

  for (auto& phi : candidates) {
    std::vector<std::string> names = phi->params();
    Env env;
    bool stop = false;
    Verdict found;
    for_each_env(names, pool, 0, env, [&](const Env& e) {
      InductionInstance inst{phi, e};
      Verdict v = check_instance(m, inst, opt);
      if (v.status == Status::Fails) {
        found = Verdict::fails(inst.to_string(m) + "; " + v.witness, v.method);
        found.note = v.note;
        return true;
      }
      return false;
    }, stop);
    if (stop) return found;
  }
  return Verdict::holds_bounded("no failing instance with terms up to size " +
                                std::to_string(max_size));
}

// ---------------------------------------------------------------------------
// Scheme verdicts and semantic entailment

std::string Hypothesis::to_string() const {
  return is_scheme ? scheme_name(scheme) : axiom.to_string();
}

Verdict scheme_verdict(const Structure& m, SchemeClass cls, const CheckOptions& opt) {
  if (auto* f = dynamic_cast<const FiniteStructure*>(&m)) return decide_scheme(*f, cls);
  return witness_search(m, cls, opt.max_term_size, m.signature(), opt);
}

namespace {

bool signature_admits(const Signature& model, const Signature& want) {
  return (!want.has_p || model.has_p) && (!want.has_plus || model.has_plus) &&
         (!want.has_times || model.has_times);
}

}  // namespace

EntailmentReport semantic_entailment(const std::vector<StructurePtr>& models,
                                     const std::vector<Hypothesis>& hypotheses,
                                     const std::vector<AxiomId>& conclusions,
                                     const CheckOptions& opt) {
  EntailmentReport report;
  for (auto& m : models) {
    std::string skip_note;
    for (auto& h : hypotheses) {
      Verdict v;
      if (h.is_scheme) {
        v = scheme_verdict(*m, h.scheme, opt);
      } else if (!signature_admits(m->signature(), axiom_signature(h.axiom))) {
        skip_note = "hypothesis " + h.to_string() + " not expressible";
        break;
      } else {
        v = eval_sentence(*m, gen(h.axiom), opt);
      }
      if (v.status != Status::Holds || v.bounded) {
        skip_note = "hypothesis " + h.to_string() + ": " + v.to_string();
        break;
      }
    }
    for (auto& c : conclusions) {
      EntailmentRow row{m->name(), c.to_string(), EntailmentRow::Outcome::Skipped, ""};
      if (!skip_note.empty()) {
        row.note = skip_note;
      } else if (!signature_admits(m->signature(), axiom_signature(c))) {
        row.note = "conclusion not expressible";
      } else {
        Verdict v = eval_sentence(*m, gen(c), opt);
        if (v.status == Status::Holds) {
          row.outcome = EntailmentRow::Outcome::Pass;
          if (v.bounded) row.note = "bounded";
        } else if (v.status == Status::Fails) {
          row.outcome = EntailmentRow::Outcome::Violation;
          row.note = "witness: " + v.witness;
          report.ok = false;
        } else {
          row.note = "conclusion undecided: " + v.note;
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace oind
