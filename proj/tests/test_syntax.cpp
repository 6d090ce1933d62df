#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oind/syntax.hpp"
#include "oracles.hpp"

using namespace oind;

TEST_CASE("signature parsing and printing") {
  CHECK(Signature::full().to_string() == "0sp+*");
  CHECK(Signature::zero_s().to_string() == "0s");
  CHECK(Signature::from_string("0sp") == Signature{true, false, false});
  CHECK(Signature::from_string("0s+*") == Signature{false, true, true});
  CHECK(Signature::from_string("0sp+*") == Signature::full());
  CHECK_THROWS_AS(Signature::from_string("0sq"), SignatureError);
}

TEST_CASE("term printing uses minimal parentheses") {
  auto x = Term::var();
  auto z = Term::param("z");
  CHECK(print_term(Term::plus(Term::times(x, z), z)) == "x*z+z");
  CHECK(print_term(Term::times(Term::plus(x, z), z)) == "(x+z)*z");
  CHECK(print_term(Term::plus(Term::plus(x, z), x)) == "x+z+x");
  CHECK(print_term(Term::plus(x, Term::plus(z, x))) == "x+(z+x)");
  CHECK(print_term(Term::times(x, Term::times(z, x))) == "x*(z*x)");
  CHECK(print_term(Term::s(Term::plus(x, z))) == "s(x+z)");
  CHECK(print_term(Term::p(Term::zero())) == "p(0)");
  CHECK(print_term(Term::numeral(3)) == "s(s(s(0)))");
}

TEST_CASE("term parsing") {
  Signature full = Signature::full();
  auto t = parse_term("s(x) + p(0)*z", full);
  CHECK(print_term(t) == "s(x)+p(0)*z");
  CHECK(t->size() == 7);
  CHECK(t->has_var());
  CHECK(t->params() == std::vector<std::string>{"z"});

  CHECK(term_equal(parse_term("2", full), Term::numeral(2)));
  CHECK(term_equal(parse_term("(x+z)*w", full),
                   Term::times(Term::plus(Term::var(), Term::param("z")), Term::param("w"))));
  CHECK(term_equal(parse_term("x+z+w", full),
                   Term::plus(Term::plus(Term::var(), Term::param("z")), Term::param("w"))));
}

TEST_CASE("syntax errors carry positions") {
  Signature full = Signature::full();
  CHECK_THROWS_AS(parse_term("s(x", full), SyntaxError);
  CHECK_THROWS_AS(parse_term("x+", full), SyntaxError);
  CHECK_THROWS_AS(parse_term("x)", full), SyntaxError);
  try {
    parse_term("s(x?y)", full);
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("parsing respects the signature") {
  Signature zs = Signature::zero_s();
  CHECK_THROWS_AS(parse_term("p(x)", zs), SyntaxError);
  CHECK_THROWS_AS(parse_term("x+0", zs), SyntaxError);
  CHECK_THROWS_AS(parse_term("x*x", Signature{true, true, false}), SyntaxError);
  CHECK_NOTHROW(parse_term("s(s(x))", zs));

  auto t = parse_term("p(x)+x", Signature::full());
  CHECK(t->uses_only(Signature::full()));
  CHECK(!t->uses_only(zs));
  CHECK_THROWS_AS(t->check_signature(zs), SignatureError);
}

TEST_CASE("term order is size then printed form") {
  Signature full = Signature::full();
  auto a = parse_term("x", full);
  auto b = parse_term("s(0)", full);
  auto c = parse_term("s(x)", full);
  auto d = parse_term("p(x)", full);
  CHECK(term_less(a, b));   // smaller size
  CHECK(term_less(d, c));   // same size, "p(x)" < "s(x)"
  CHECK(!term_less(c, c));
}

TEST_CASE("substitution") {
  Signature full = Signature::full();
  auto t = parse_term("s(x)+z", full);
  CHECK(print_term(subst_var(t, Term::numeral(1))) == "s(s(0))+z");
  CHECK(print_term(subst_param(t, "z", Term::var())) == "s(x)+x");
  CHECK(print_term(subst_param(t, "w", Term::zero())) == "s(x)+z");

  auto f = parse_formula("x=z | s(x)!=0", full);
  CHECK(print_formula(subst_var(f, Term::param("y"))) == "y=z | s(y)!=0");
  CHECK(print_formula(subst_param(f, "z", Term::numeral(0))) == "x=0 | s(x)!=0");
}

TEST_CASE("formula parsing, printing and negation") {
  Signature full = Signature::full();
  auto f = parse_formula("x=0 | x=s(y)", full);
  CHECK(print_formula(f) == "x=0 | x=s(y)");
  CHECK(f->kind() == FormulaKind::Or);
  CHECK(f->literals().size() == 2);
  CHECK(f->term_size() == 5);
  CHECK(f->params() == std::vector<std::string>{"y"});

  auto g = parse_formula("x!=z & x!=w", full);
  CHECK(print_formula(g) == "x!=z & x!=w");
  CHECK(print_formula(Formula::negate(parse_formula("x=0", full))) == "x!=0");
  CHECK(print_formula(Formula::negate(g)) == "!(x!=z & x!=w)");
  CHECK(print_formula(parse_formula("(x=0 & x=z) | x=w", full)) == "(x=0 & x=z) | x=w");

  CHECK_THROWS_AS(parse_formula("x=0 | x=z & x=w", full), SyntaxError);
  CHECK_THROWS_AS(parse_formula("x+0", full), SyntaxError);
}

TEST_CASE("classification and the class inclusion chain") {
  Signature full = Signature::full();
  auto atom = parse_formula("x=0", full);
  auto nlit = parse_formula("x!=0", full);
  auto cls = parse_formula("x=0 | x=z", full);
  auto dcls = parse_formula("x!=0 & x=z", full);
  auto open = parse_formula("(x=0 & x=z) | x=w", full);

  Classification ca = classify(atom);
  CHECK(ca.is_atom);
  CHECK(ca.is_literal);
  CHECK(ca.is_clause);
  CHECK(ca.is_dual_clause);
  CHECK(ca.is_open);

  Classification cn = classify(nlit);
  CHECK(!cn.is_atom);
  CHECK(cn.is_literal);
  CHECK(cn.is_clause);
  CHECK(cn.is_dual_clause);

  Classification cc = classify(cls);
  CHECK(!cc.is_literal);
  CHECK(cc.is_clause);
  CHECK(!cc.is_dual_clause);

  Classification cd = classify(dcls);
  CHECK(!cd.is_clause);
  CHECK(cd.is_dual_clause);

  Classification co = classify(open);
  CHECK(!co.is_clause);
  CHECK(!co.is_dual_clause);
  CHECK(co.is_open);

  // atom => literal => clause and dual clause => open
  for (auto* f : {&atom, &nlit, &cls, &dcls, &open}) {
    Classification c = classify(*f);
    if (c.is_atom) CHECK(c.is_literal);
    if (c.is_literal) {
      CHECK(c.is_clause);
      CHECK(c.is_dual_clause);
    }
    CHECK(c.is_open);
  }

  CHECK(scheme_from_name("iclause") == SchemeClass::IClause);
  CHECK(scheme_name(SchemeClass::IDClause) == std::string("idclause"));
  CHECK_THROWS(scheme_from_name("atoms"));
}

TEST_CASE("print/parse round trip on random terms and formulas") {
  std::mt19937 g(20240817);
  Signature full = Signature::full();
  std::vector<std::string> params{"z", "w"};
  for (int i = 0; i < 300; ++i) {
    unsigned size = std::uniform_int_distribution<unsigned>(1, 30)(g);
    auto t = oracle::random_term(g, full, size, params);
    auto back = parse_term(print_term(t), full);
    CHECK(term_equal(t, back));
    CHECK(print_term(back) == print_term(t));
  }
  for (int i = 0; i < 300; ++i) {
    auto f = oracle::random_open_formula(g, full, 12, params);
    auto back = parse_formula(print_formula(f), full);
    CHECK(formula_equal(f, back));
  }
}
