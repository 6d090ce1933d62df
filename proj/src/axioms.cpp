#include "oind/axioms.hpp"

#include <sstream>

namespace oind {

std::string Sentence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i == 0 || prefix[i].q != prefix[i - 1].q) {
      if (i > 0) os << ' ';
      os << (prefix[i].q == Quantifier::ForAll ? "forall " : "exists ");
    } else {
      os << ',';
    }
    os << prefix[i].var;
  }
  if (!prefix.empty()) os << ": ";
  os << print_formula(matrix);
  return os.str();
}

std::string AxiomId::to_string() const {
  switch (family) {
    case AxiomFamily::A1: return "A1";
    case AxiomFamily::A2: return "A2";
    case AxiomFamily::A3: return "A3";
    case AxiomFamily::A3a: return "A3a";
    case AxiomFamily::A4: return "A4";
    case AxiomFamily::A5: return "A5";
    case AxiomFamily::A6: return "A6";
    case AxiomFamily::A7: return "A7";
    case AxiomFamily::SUR: return "SUR";
    case AxiomFamily::Bnm: return "B(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case AxiomFamily::BnmPrime: return "B'(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case AxiomFamily::Bn: return "Bn(" + std::to_string(n) + ")";
    case AxiomFamily::B1: return "B1";
    case AxiomFamily::B2: return "B2";
    case AxiomFamily::B3: return "B3";
    case AxiomFamily::B4: return "B4";
    case AxiomFamily::B5: return "B5";
    case AxiomFamily::B6: return "B6";
    case AxiomFamily::B7: return "B7";
    case AxiomFamily::Cd: return "C(" + std::to_string(n) + ")";
  }
  return "?";
}

namespace {

void check_params(const AxiomId& id) {
  switch (id.family) {
    case AxiomFamily::Bnm:
      if (id.m < 1) throw AxiomParameterError("B(n,m) requires m >= 1");
      break;
    case AxiomFamily::BnmPrime:
      if (id.n > id.m) throw AxiomParameterError("B'(n,m) requires n <= m");
      break;
    case AxiomFamily::Bn:
      if (id.n < 1) throw AxiomParameterError("Bn(n) requires n >= 1");
      break;
    case AxiomFamily::Cd:
      if (id.n < 2) throw AxiomParameterError("C(d) requires d >= 2");
      break;
    default: break;
  }
}

std::pair<unsigned, unsigned> parse_args(const std::string& text, std::size_t open, bool two) {
  if (text.back() != ')') throw AxiomParameterError("malformed axiom id: " + text);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::istringstream is(inner);
  unsigned a = 0, b = 0;
  char comma = 0;
  if (two) {
    if (!(is >> a >> comma >> b) || comma != ',') throw AxiomParameterError("malformed axiom id: " + text);
  } else {
    if (!(is >> a)) throw AxiomParameterError("malformed axiom id: " + text);
  }
  std::string rest;
  if (is >> rest) throw AxiomParameterError("malformed axiom id: " + text);
  return {a, b};
}

}  // namespace

AxiomId AxiomId::parse(const std::string& text) {
  AxiomId id{};
  if (text == "A1") id.family = AxiomFamily::A1;
  else if (text == "A2") id.family = AxiomFamily::A2;
  else if (text == "A3") id.family = AxiomFamily::A3;
  else if (text == "A3a") id.family = AxiomFamily::A3a;
  else if (text == "A4") id.family = AxiomFamily::A4;
  else if (text == "A5") id.family = AxiomFamily::A5;
  else if (text == "A6") id.family = AxiomFamily::A6;
  else if (text == "A7") id.family = AxiomFamily::A7;
  else if (text == "SUR") id.family = AxiomFamily::SUR;
  else if (text == "B1") id.family = AxiomFamily::B1;
  else if (text == "B2") id.family = AxiomFamily::B2;
  else if (text == "B3") id.family = AxiomFamily::B3;
  else if (text == "B4") id.family = AxiomFamily::B4;
  else if (text == "B5") id.family = AxiomFamily::B5;
  else if (text == "B6") id.family = AxiomFamily::B6;
  else if (text == "B7") id.family = AxiomFamily::B7;
  else if (text.rfind("B'(", 0) == 0) {
    id.family = AxiomFamily::BnmPrime;
    std::tie(id.n, id.m) = parse_args(text, 2, true);
  } else if (text.rfind("B(", 0) == 0) {
    id.family = AxiomFamily::Bnm;
    std::tie(id.n, id.m) = parse_args(text, 1, true);
  } else if (text.rfind("Bn(", 0) == 0) {
    id.family = AxiomFamily::Bn;
    id.n = parse_args(text, 2, false).first;
  } else if (text.rfind("C(", 0) == 0) {
    id.family = AxiomFamily::Cd;
    id.n = parse_args(text, 1, false).first;
  } else {
    throw AxiomParameterError("unknown axiom id: " + text);
  }
  check_params(id);
  return id;
}

Signature axiom_signature(const AxiomId& id) {
  switch (id.family) {
    case AxiomFamily::A1:
    case AxiomFamily::A3a:
    case AxiomFamily::SUR:
    case AxiomFamily::Bnm:
    case AxiomFamily::BnmPrime:
    case AxiomFamily::Bn:
      return Signature::zero_s();
    case AxiomFamily::A2:
    case AxiomFamily::A3:
    case AxiomFamily::B1:
      return Signature{true, false, false};
    case AxiomFamily::A4:
    case AxiomFamily::A5:
    case AxiomFamily::B2:
    case AxiomFamily::B3:
    case AxiomFamily::B4:
      return Signature{false, true, false};
    case AxiomFamily::A6:
    case AxiomFamily::B5:
    case AxiomFamily::B6:
      return Signature{false, false, true};
    case AxiomFamily::A7:
    case AxiomFamily::B7:
    case AxiomFamily::Cd:
      return Signature{false, true, true};
  }
  return Signature::full();
}

namespace {

TermPtr X() { return Term::param("x"); }
TermPtr Y() { return Term::param("y"); }
TermPtr Z() { return Term::param("z"); }

Sentence forall1(FormulaPtr f) { return {{{Quantifier::ForAll, "x"}}, std::move(f)}; }
Sentence forall2(FormulaPtr f) {
  return {{{Quantifier::ForAll, "x"}, {Quantifier::ForAll, "y"}}, std::move(f)};
}
Sentence forall3(FormulaPtr f) {
  return {{{Quantifier::ForAll, "x"}, {Quantifier::ForAll, "y"}, {Quantifier::ForAll, "z"}},
          std::move(f)};
}

TermPtr nfold_sum(const TermPtr& t, unsigned d) {
  TermPtr acc = t;
  for (unsigned i = 1; i < d; ++i) acc = Term::plus(acc, t);
  return acc;
}

}  // namespace

Sentence gen(const AxiomId& id) {
  check_params(id);
  switch (id.family) {
    case AxiomFamily::A1:
      return forall1(Formula::neg_atom(Term::s(X()), Term::zero()));
    case AxiomFamily::A2:
      return {{}, Formula::atom(Term::p(Term::zero()), Term::zero())};
    case AxiomFamily::A3:
      return forall1(Formula::atom(Term::p(Term::s(X())), X()));
    case AxiomFamily::A3a:
      return forall2(Formula::clause({{true, Term::s(X()), Term::s(Y())}, {false, X(), Y()}}));
    case AxiomFamily::A4:
      return forall1(Formula::atom(Term::plus(X(), Term::zero()), X()));
    case AxiomFamily::A5:
      return forall2(Formula::atom(Term::plus(X(), Term::s(Y())), Term::s(Term::plus(X(), Y()))));
    case AxiomFamily::A6:
      return forall1(Formula::atom(Term::times(X(), Term::zero()), Term::zero()));
    case AxiomFamily::A7:
      return forall2(Formula::atom(Term::times(X(), Term::s(Y())),
                                   Term::plus(Term::times(X(), Y()), X())));
    case AxiomFamily::SUR:
      return {{{Quantifier::ForAll, "x"}, {Quantifier::Exists, "y"}},
              Formula::clause({{false, X(), Term::zero()}, {false, X(), Term::s(Y())}})};
    case AxiomFamily::Bnm: {
      std::vector<Literal> lits;
      lits.push_back({true, Term::numeral(id.n), Term::numeral(id.n + id.m)});
      for (unsigned k = 0; k < id.n + id.m; ++k) lits.push_back({false, X(), Term::numeral(k)});
      return forall1(Formula::clause(std::move(lits)));
    }
    case AxiomFamily::BnmPrime: {
      std::vector<Literal> lits;
      lits.push_back({true, Term::numeral(id.n), Term::numeral(id.m + 1)});
      for (unsigned k = 0; k <= id.m; ++k) lits.push_back({false, X(), Term::numeral(k)});
      return forall1(Formula::clause(std::move(lits)));
    }
    case AxiomFamily::Bn:
      return forall1(Formula::neg_atom(X(), Term::iter_s(id.n, X())));
    case AxiomFamily::B1:
      return forall1(Formula::clause({{false, X(), Term::zero()}, {false, X(), Term::s(Term::p(X()))}}));
    case AxiomFamily::B2:
      return forall2(Formula::atom(Term::plus(X(), Y()), Term::plus(Y(), X())));
    case AxiomFamily::B3:
      return forall3(Formula::atom(Term::plus(Term::plus(X(), Y()), Z()),
                                   Term::plus(X(), Term::plus(Y(), Z()))));
    case AxiomFamily::B4:
      return forall3(Formula::clause(
          {{true, Term::plus(X(), Y()), Term::plus(X(), Z())}, {false, Y(), Z()}}));
    case AxiomFamily::B5:
      return forall2(Formula::atom(Term::times(X(), Y()), Term::times(Y(), X())));
    case AxiomFamily::B6:
      return forall3(Formula::atom(Term::times(X(), Term::times(Y(), Z())),
                                   Term::times(Term::times(X(), Y()), Z())));
    case AxiomFamily::B7:
      return forall3(Formula::atom(Term::times(X(), Term::plus(Y(), Z())),
                                   Term::plus(Term::times(X(), Y()), Term::times(X(), Z()))));
    case AxiomFamily::Cd: {
      unsigned d = id.n;
      std::vector<Literal> lits;
      lits.push_back({true, nfold_sum(Y(), d), nfold_sum(Z(), d)});
      for (unsigned i = 0; i < d; ++i) {
        TermPtr xi = i == 0 ? X() : Term::plus(X(), Term::numeral(i));
        lits.push_back({false, Term::times(xi, Y()), Term::times(xi, Z())});
      }
      return forall3(Formula::clause(std::move(lits)));
    }
  }
  throw AxiomParameterError("bad axiom id");
}

TheoryName theory_from_name(const std::string& name) {
  if (name == "T0") return TheoryName::T0;
  if (name == "T1") return TheoryName::T1;
  if (name == "T2") return TheoryName::T2;
  if (name == "T3") return TheoryName::T3;
  if (name == "T4") return TheoryName::T4;
  if (name == "T5") return TheoryName::T5;
  throw AxiomParameterError("unknown theory: " + name);
}

const char* theory_name(TheoryName t) {
  switch (t) {
    case TheoryName::T0: return "T0";
    case TheoryName::T1: return "T1";
    case TheoryName::T2: return "T2";
    case TheoryName::T3: return "T3";
    case TheoryName::T4: return "T4";
    case TheoryName::T5: return "T5";
  }
  return "?";
}

Theory theory(TheoryName name) {
  using F = AxiomFamily;
  auto ax = [](F f) { return AxiomId{f, 0, 0}; };
  switch (name) {
    case TheoryName::T0: return {Signature::zero_s(), {}};
    case TheoryName::T1: return {Signature::zero_s(), {ax(F::A1)}};
    case TheoryName::T2: return {Signature::zero_s(), {ax(F::A1), ax(F::A3a)}};
    case TheoryName::T3: return {Signature{true, false, false}, {ax(F::A1), ax(F::A2), ax(F::A3)}};
    case TheoryName::T4:
      return {Signature{true, true, false},
              {ax(F::A1), ax(F::A2), ax(F::A3), ax(F::A4), ax(F::A5)}};
    case TheoryName::T5:
      return {Signature::full(),
              {ax(F::A1), ax(F::A2), ax(F::A3), ax(F::A4), ax(F::A5), ax(F::A6), ax(F::A7)}};
  }
  throw AxiomParameterError("bad theory");
}

Sentence parse_sentence(const std::string& text, const Signature& sig) {
  std::size_t colon = std::string::npos;
  std::size_t head = text.find_first_not_of(" \t");
  bool quantified = head != std::string::npos && (text.compare(head, 7, "forall ") == 0 ||
                                                  text.compare(head, 7, "exists ") == 0);
  if (quantified) colon = text.find(':');
  Sentence s;
  if (colon != std::string::npos) {
    std::istringstream is(text.substr(0, colon));
    std::string tok;
    Quantifier q = Quantifier::ForAll;
    bool have_q = false;
    while (is >> tok) {
      if (tok == "forall" || tok == "exists") {
        q = tok == "forall" ? Quantifier::ForAll : Quantifier::Exists;
        have_q = true;
        continue;
      }
      if (!have_q) throw SyntaxError("expected 'forall' or 'exists'", 0);
      std::istringstream vars(tok);
      std::string v;
      while (std::getline(vars, v, ',')) {
        if (v.empty()) throw SyntaxError("empty variable name in quantifier prefix", 0);
        s.prefix.push_back({q, v});
      }
    }
    s.matrix = parse_formula(text.substr(colon + 1), sig);
  } else {
    s.matrix = parse_formula(text, sig);
  }
  s.matrix = subst_var(s.matrix, Term::param("x"));
  return s;
}

AxiomId bnm_translate(const AxiomId& id) {
  check_params(id);
  if (id.family == AxiomFamily::Bnm) return {AxiomFamily::BnmPrime, id.n, id.n + id.m - 1};
  if (id.family == AxiomFamily::BnmPrime) return {AxiomFamily::Bnm, id.n, id.m - id.n + 1};
  throw AxiomParameterError("translation applies to B(n,m) and B'(n,m) only");
}

}  // namespace oind
