#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oind/checker.hpp"
#include "oracles.hpp"

using namespace oind;

namespace {

const Signature kFull = Signature::full();

Verdict check_axiom(const Structure& m, const std::string& id) {
  return eval_sentence(m, gen(AxiomId::parse(id)));
}

}  // namespace

TEST_CASE("verdict strings") {
  CHECK(Verdict::holds("decision").to_string() == "holds");
  CHECK(Verdict::holds_bounded().to_string() == "holds(bounded)");
  CHECK(Verdict::fails("x=0", "enumeration").to_string() == "fails");
  CHECK(Verdict::unknown("n").to_string() == "unknown");
}

TEST_CASE("the infinite-point model satisfies the base theory exactly") {
  NInfStructure ninf(kFull);
  for (const char* id : {"A1", "A2", "A3", "A3a", "A4", "A5", "A6", "A7", "SUR"}) {
    Verdict v = check_axiom(ninf, id);
    CHECK(v.status == Status::Holds);
    CHECK(!v.bounded);
    CHECK(v.method == "decision");
  }
  for (const char* id : {"B1", "B2", "B3", "B5", "B6", "B7"}) {
    CHECK(check_axiom(ninf, id).status == Status::Holds);
  }

  Verdict b4 = check_axiom(ninf, "B4");
  CHECK(b4.status == Status::Fails);
  CHECK(b4.witness == "x=inf, y=0, z=1");
}

TEST_CASE("the cycle axioms fail at the extra point of the s-reduct") {
  NInfStructure reduct(Signature::zero_s());
  for (unsigned n : {1u, 2u, 3u}) {
    Verdict v = eval_sentence(reduct, gen(AxiomId{AxiomFamily::Bn, n, 0}));
    CHECK(v.status == Status::Fails);
    CHECK(v.witness == "x=inf");
  }
}

TEST_CASE("induction for x!=z fails at the infinite point") {
  NInfStructure ninf(kFull);
  InductionInstance inst{parse_formula("x!=z", kFull), {{"z", Element::inf()}}};
  Verdict v = check_instance(ninf, inst);
  CHECK(v.status == Status::Fails);
  CHECK(v.witness == "x=inf");
  CHECK(v.method == "decision");
  CHECK(inst.to_string(ninf) == "I(x!=z) [z:=inf]");

  // the same instance with a standard parameter does not fail
  InductionInstance std_inst{parse_formula("x!=z", kFull), {{"z", Element::nat_of(2)}}};
  CHECK(check_instance(ninf, std_inst).status == Status::Holds);
}

TEST_CASE("universal decision agrees with a long prefix scan on random formulas") {
  NInfStructure ninf(kFull);
  std::mt19937 g(20250301);
  std::vector<Element> values{Element::nat_of(0), Element::nat_of(1), Element::nat_of(2),
                              Element::nat_of(3), Element::inf()};
  for (int i = 0; i < 300; ++i) {
    auto f = oracle::random_open_formula(g, kFull, 10, {"z", "w"});
    Env params;
    for (auto& p : f->params())
      params[p] = values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(g)];
    bool decided = decide_forall_ninf(ninf, f, params);
    bool scanned = oracle::prefix_forall(ninf, f, params);
    CHECK(decided == scanned);
  }
}

TEST_CASE("definable functions of the five-point lollipop") {
  auto l5 = make_lollipop5();
  DefinableFunctionFamily fam = definable_functions(*l5);
  CHECK(fam.functions.size() == 8);  // id, s, s^2 and the five constants

  const DefinableFunction* id = fam.find({0, 1, 2, 3, 4});
  REQUIRE(id);
  CHECK(print_term(id->witness) == "x");
  const DefinableFunction* s2 = fam.find({2, 1, 2, 3, 4});
  REQUIRE(s2);
  CHECK(print_term(s2->witness) == "s(s(x))");
  const DefinableFunction* c0 = fam.find({0, 0, 0, 0, 0});
  REQUIRE(c0);
  CHECK(print_term(c0->witness) == "0");
  CHECK(fam.find({4, 3, 4, 0, 1}) == nullptr);

  auto l6 = make_lollipop6();
  CHECK(definable_functions(*l6).functions.size() == 13);  // id, s..s^6, six constants
}

TEST_CASE("scheme decisions on the lollipop pair") {
  auto l5 = make_lollipop5();
  auto l6 = make_lollipop6();

  CHECK(decide_scheme(*l5, SchemeClass::IAtom).status == Status::Holds);
  CHECK(decide_scheme(*l5, SchemeClass::ILiteral).status == Status::Holds);
  Verdict v = decide_scheme(*l5, SchemeClass::IClause);
  CHECK(v.status == Status::Fails);
  CHECK(v.witness == "I(1=x | 1=s(x)) [1:=1]");
  CHECK(decide_scheme(*l5, SchemeClass::IDClause).status == Status::Fails);

  Verdict v6 = decide_scheme(*l6, SchemeClass::IAtom);
  CHECK(v6.status == Status::Fails);
  CHECK(v6.witness == "I(s(x)=s(s(s(x))))");
  for (auto cls : {SchemeClass::ILiteral, SchemeClass::IClause, SchemeClass::IDClause})
    CHECK(decide_scheme(*l6, cls).status == Status::Fails);

  // determinism
  CHECK(decide_scheme(*l5, SchemeClass::IClause).witness == v.witness);
  CHECK(decide_scheme(*l6, SchemeClass::IAtom).witness == v6.witness);
}

TEST_CASE("counterexamples from scheme decisions re-validate") {
  std::vector<std::shared_ptr<const FiniteStructure>> models{make_lollipop5(), make_lollipop6(),
                                                             make_cyclic(2), make_cyclic(6)};
  for (auto& m : models) {
    for (auto cls : {SchemeClass::IAtom, SchemeClass::ILiteral, SchemeClass::IClause,
                     SchemeClass::IDClause}) {
      Verdict v = decide_scheme(*m, cls);
      auto inst = scheme_counterexample(*m, cls);
      CHECK((v.status == Status::Fails) == inst.has_value());
      if (inst) {
        Verdict check = check_instance(*m, *inst);
        CHECK(check.status == Status::Fails);
        Classification c = classify(inst->formula);
        CHECK(c.in_class(cls));
      }
    }
  }
}

TEST_CASE("cyclic models satisfy every scheme") {
  for (int k : {1, 2, 3, 4, 6}) {
    auto z = make_cyclic(k);
    for (auto cls : {SchemeClass::IAtom, SchemeClass::ILiteral, SchemeClass::IClause,
                     SchemeClass::IDClause})
      CHECK(decide_scheme(*z, cls).status == Status::Holds);
  }
}

TEST_CASE("scheme decisions match brute-force enumeration on the finite zoo") {
  std::vector<std::shared_ptr<const FiniteStructure>> models{
      make_lollipop5(), make_lollipop6(), make_cyclic(2), make_cyclic(3), make_cyclic(4)};
  for (auto& m : models) {
    for (auto cls : {SchemeClass::IAtom, SchemeClass::ILiteral}) {
      bool expected = oracle::brute_scheme(*m, cls, 8);
      CHECK((decide_scheme(*m, cls).status == Status::Holds) == expected);
    }
  }
}

TEST_CASE("scheme decisions match brute-force enumeration on random structures") {
  std::mt19937 g(77001);
  for (int i = 0; i < 10; ++i) {
    int n = std::uniform_int_distribution<int>(3, 5)(g);
    bool with_p = i % 2 == 0;
    auto m = oracle::random_structure(g, n, with_p);
    // saturate the brute-force term enumeration (unary signature: once a level
    // adds nothing, the family is complete)
    unsigned size = 8;
    auto maps = oracle::term_maps(*m, size);
    while (size < 64) {
      auto next = oracle::term_maps(*m, size + 1);
      if (next.size() == maps.size()) break;
      maps = std::move(next);
      ++size;
    }
    for (auto cls : {SchemeClass::IAtom, SchemeClass::ILiteral}) {
      CHECK((decide_scheme(*m, cls).status == Status::Holds) == oracle::brute_scheme(*m, cls, size));
    }
    // monotonicity along the inclusion chain
    Verdict atom = decide_scheme(*m, SchemeClass::IAtom);
    Verdict lit = decide_scheme(*m, SchemeClass::ILiteral);
    Verdict cls = decide_scheme(*m, SchemeClass::IClause);
    Verdict dcls = decide_scheme(*m, SchemeClass::IDClause);
    if (atom.status == Status::Fails) CHECK(lit.status == Status::Fails);
    if (lit.status == Status::Fails) {
      CHECK(cls.status == Status::Fails);
      CHECK(dcls.status == Status::Fails);
    }
  }
}

TEST_CASE("witness search") {
  NInfStructure ninf(kFull);
  Verdict v = witness_search(ninf, SchemeClass::ILiteral, 3, ninf.signature());
  CHECK(v.status == Status::Fails);
  CHECK(v.witness == "I(x!=z) [z:=inf]; x=inf");

  Verdict atom = witness_search(ninf, SchemeClass::IAtom, 6, ninf.signature());
  CHECK(atom.status == Status::Holds);
  CHECK(atom.bounded);

  NabStructure nab(kFull);
  Verdict nab_atom = witness_search(nab, SchemeClass::IAtom, 5, Signature::zero_s());
  CHECK(nab_atom.status == Status::Holds);
  CHECK(nab_atom.bounded);

  auto l5 = make_lollipop5();
  Verdict l5cl = witness_search(*l5, SchemeClass::IClause, 6, l5->signature());
  CHECK(l5cl.status == Status::Fails);

  CHECK_THROWS_AS(witness_search(*l5, SchemeClass::IAtom, 4, kFull), SignatureError);
}

TEST_CASE("sentence evaluation on finite structures is exact") {
  auto l6 = make_lollipop6();
  Verdict v = check_axiom(*l6, "B(1,2)");
  CHECK(v.status == Status::Fails);
  CHECK(v.witness == "x=a");
  CHECK(v.method == "enumeration");
  CHECK(check_axiom(*l6, "A1").status == Status::Holds);
  CHECK(check_axiom(*l6, "SUR").status == Status::Holds);

  auto l5 = make_lollipop5();
  CHECK(check_axiom(*l5, "B(1,2)").status == Status::Fails);
  CHECK(check_axiom(*l5, "B'(1,2)").status == Status::Fails);
  CHECK(check_axiom(*l5, "SUR").status == Status::Holds);
}

TEST_CASE("sentence evaluation on the two-point extension is slice-bounded") {
  NabStructure nab(kFull);
  Verdict a1 = check_axiom(nab, "A1");
  CHECK(a1.status == Status::Holds);
  CHECK(a1.bounded);

  Sentence comm = parse_sentence("forall x,y: x+y=y+x", kFull);
  Verdict v = eval_sentence(nab, comm);
  CHECK(v.status == Status::Fails);
  CHECK(v.witness == "x=a, y=0");

  // a slice refutation with an existential in scope is not conclusive
  Sentence ex = parse_sentence("exists y: s(y)=0", kFull);
  Verdict u = eval_sentence(nab, ex);
  CHECK(u.status == Status::Unknown);
}

TEST_CASE("instance checking on finite structures") {
  auto l5 = make_lollipop5();
  // the hypothesis of induction fails: phi(0) holds but phi(s(0)) does not
  InductionInstance broken{parse_formula("x=0", Signature::zero_s()), {}};
  Verdict v = check_instance(*l5, broken);
  CHECK(v.status == Status::Holds);
  CHECK(v.note == "induction hypothesis fails");

  InductionInstance trivial{parse_formula("x=x", Signature::zero_s()), {}};
  CHECK(check_instance(*l5, trivial).status == Status::Holds);

  auto inst = scheme_counterexample(*l5, SchemeClass::IClause);
  REQUIRE(inst);
  Verdict f = check_instance(*l5, *inst);
  CHECK(f.status == Status::Fails);
  CHECK(f.witness == "x=a");
}

TEST_CASE("semantic entailment") {
  CheckOptions opt;
  opt.max_term_size = 4;

  SUBCASE("valid consequence") {
    std::vector<StructurePtr> models{make_lollipop5(), make_cyclic(2),
                                     std::make_shared<NInfStructure>(kFull)};
    EntailmentReport r = semantic_entailment(models, {Hypothesis::of(SchemeClass::ILiteral)},
                                             {AxiomId::parse("SUR")}, opt);
    CHECK(r.ok);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].outcome == EntailmentRow::Outcome::Pass);
    CHECK(r.rows[1].outcome == EntailmentRow::Outcome::Pass);
    // the infinite-point model refutes the literal scheme, so it is skipped
    CHECK(r.rows[2].outcome == EntailmentRow::Outcome::Skipped);
  }

  SUBCASE("violation is reported") {
    std::vector<StructurePtr> models{make_cyclic(2)};
    EntailmentReport r = semantic_entailment(models, {Hypothesis::of(SchemeClass::IAtom)},
                                             {AxiomId::parse("A1")}, opt);
    CHECK(!r.ok);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].outcome == EntailmentRow::Outcome::Violation);
    CHECK(r.rows[0].note.find("witness") != std::string::npos);
  }

  SUBCASE("inexpressible conclusions are skipped") {
    std::vector<StructurePtr> models{make_lollipop5()};
    EntailmentReport r = semantic_entailment(models, {Hypothesis::of(SchemeClass::IAtom)},
                                             {AxiomId::parse("B2")}, opt);
    CHECK(r.ok);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].outcome == EntailmentRow::Outcome::Skipped);
    CHECK(r.rows[0].note == "conclusion not expressible");
  }

  SUBCASE("axiom hypotheses") {
    std::vector<StructurePtr> models{make_cyclic(3)};
    Hypothesis h = Hypothesis::of(AxiomId::parse("A1"));
    CHECK(h.to_string() == "A1");
    // A1 fails in Z3, so the model is skipped
    EntailmentReport r = semantic_entailment(models, {h}, {AxiomId::parse("B2")}, opt);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].outcome == EntailmentRow::Outcome::Skipped);
  }
}

TEST_CASE("entailment suites over the whole zoo have no violations") {
  CheckOptions opt;
  opt.max_term_size = 4;
  std::vector<StructurePtr> models{make_lollipop5(),
                                   make_lollipop6(),
                                   make_cyclic(1),
                                   make_cyclic(2),
                                   make_cyclic(3),
                                   make_cyclic(6),
                                   std::make_shared<NInfStructure>(kFull),
                                   std::make_shared<NabStructure>(kFull),
                                   std::make_shared<StandardStructure>(kFull)};

  std::vector<AxiomId> ring;
  for (const char* id : {"B2", "B3", "B5", "B6", "B7"}) ring.push_back(AxiomId::parse(id));
  EntailmentReport r1 =
      semantic_entailment(models, {Hypothesis::of(SchemeClass::IAtom)}, ring, opt);
  CHECK(r1.ok);

  std::vector<AxiomId> bnm;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 3; ++m) bnm.push_back(AxiomId{AxiomFamily::Bnm, n, m});
  EntailmentReport r2 =
      semantic_entailment(models, {Hypothesis::of(SchemeClass::IClause)}, bnm, opt);
  CHECK(r2.ok);

  EntailmentReport r3 = semantic_entailment(
      models, {Hypothesis::of(SchemeClass::IClause)},
      {AxiomId{AxiomFamily::Cd, 2, 0}, AxiomId{AxiomFamily::Cd, 3, 0}}, opt);
  CHECK(r3.ok);

  EntailmentReport r4 = semantic_entailment(models, {Hypothesis::of(SchemeClass::ILiteral)},
                                            {AxiomId::parse("SUR")}, opt);
  CHECK(r4.ok);
  // the suite is not vacuous: some models do pass
  CHECK(std::any_of(r4.rows.begin(), r4.rows.end(), [](const EntailmentRow& r) {
    return r.outcome == EntailmentRow::Outcome::Pass;
  }));
}

TEST_CASE("scheme verdicts across model kinds") {
  CheckOptions opt;
  opt.max_term_size = 3;
  auto l5 = make_lollipop5();
  CHECK(scheme_verdict(*l5, SchemeClass::IClause, opt).status == Status::Fails);
  NInfStructure ninf(kFull);
  CHECK(scheme_verdict(ninf, SchemeClass::ILiteral, opt).status == Status::Fails);
  Verdict na = scheme_verdict(ninf, SchemeClass::IAtom, opt);
  CHECK(na.status == Status::Holds);
  CHECK(na.bounded);
  StandardStructure std_model(kFull);
  Verdict so = scheme_verdict(std_model, SchemeClass::IOpen, opt);
  CHECK(so.status == Status::Holds);
  CHECK(so.bounded);
}
