#pragma once

// Brute-force cross-checks for the test suites. Deliberately independent of
// the library's decision procedures: plain enumeration only.

#include <memory>
#include <random>
#include <set>
#include <vector>

#include "oind/checker.hpp"

namespace oracle {

using namespace oind;

// Tables of every unary map induced by a term of size <= max_size with
// parameters instantiated as domain elements.
inline std::vector<std::vector<int>> term_maps(const FiniteStructure& m, unsigned max_size) {
  const int n = m.domain_size();
  std::vector<std::set<std::vector<int>>> by(max_size + 1);
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  if (max_size >= 1) {
    by[1].insert(id);
    for (int c = 0; c < n; ++c)
      by[1].insert(std::vector<int>(static_cast<std::size_t>(n), c));
  }
  auto unary = [&](const std::vector<int>& t, bool pred) {
    std::vector<int> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      Element e = Element::fin_of(t[i]);
      out[i] = (pred ? m.pred(e) : m.succ(e)).fin;
    }
    return out;
  };
  auto binary = [&](const std::vector<int>& a, const std::vector<int>& b, bool times) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      Element l = Element::fin_of(a[i]), r = Element::fin_of(b[i]);
      out[i] = (times ? m.mul(l, r) : m.add(l, r)).fin;
    }
    return out;
  };
  for (unsigned k = 2; k <= max_size; ++k) {
    for (auto& t : by[k - 1]) {
      by[k].insert(unary(t, false));
      if (m.signature().has_p) by[k].insert(unary(t, true));
    }
    for (unsigned i = 1; i + 1 < k; ++i) {
      for (auto& l : by[i]) {
        for (auto& r : by[k - 1 - i]) {
          if (m.signature().has_plus) by[k].insert(binary(l, r, false));
          if (m.signature().has_times) by[k].insert(binary(l, r, true));
        }
      }
    }
  }
  std::set<std::vector<int>> all;
  for (auto& level : by) all.insert(level.begin(), level.end());
  return {all.begin(), all.end()};
}

// Does induction hold for the membership predicate S?
inline bool induction_holds_for(const FiniteStructure& m, const std::vector<bool>& S) {
  if (!S[static_cast<std::size_t>(m.zero().fin)]) return true;
  const int n = m.domain_size();
  for (int i = 0; i < n; ++i)
    if (S[static_cast<std::size_t>(i)] && !S[static_cast<std::size_t>(m.succ_index(i))])
      return true;  // step fails, vacuous
  for (int i = 0; i < n; ++i)
    if (!S[static_cast<std::size_t>(i)]) return false;
  return true;
}

// Scheme verdict by enumerating atom/literal instances up to a term-size cap.
inline bool brute_scheme(const FiniteStructure& m, SchemeClass cls, unsigned max_size) {
  auto maps = term_maps(m, max_size);
  const std::size_t n = static_cast<std::size_t>(m.domain_size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i; j < maps.size(); ++j) {
      std::vector<bool> eq(n), ne(n);
      for (std::size_t a = 0; a < n; ++a) {
        eq[a] = maps[i][a] == maps[j][a];
        ne[a] = !eq[a];
      }
      if (!induction_holds_for(m, eq)) return false;
      if (cls != SchemeClass::IAtom && !induction_holds_for(m, ne)) return false;
    }
  }
  return true;
}

// 200-point-plus-infinity scan of a universal statement over the
// infinite-point model. Necessary condition only.
inline bool prefix_forall(const NInfStructure& m, const FormulaPtr& f, const Env& params,
                          unsigned bound = 200) {
  for (unsigned i = 0; i <= bound; ++i)
    if (!eval_open(m, f, Element::nat_of(i), params)) return false;
  return eval_open(m, f, Element::inf(), params);
}

inline TermPtr random_term(std::mt19937& g, const Signature& sig, unsigned size,
                           const std::vector<std::string>& params) {
  if (size <= 1) {
    std::uniform_int_distribution<int> pick(0, 2 + static_cast<int>(params.size()) - 1);
    int c = pick(g);
    if (c == 0) return Term::zero();
    if (c == 1) return Term::var();
    return Term::param(params[static_cast<std::size_t>(c - 2)]);
  }
  std::vector<int> ops;  // 0 s, 1 p, 2 plus, 3 times
  ops.push_back(0);
  if (sig.has_p) ops.push_back(1);
  if (size >= 3) {
    if (sig.has_plus) ops.push_back(2);
    if (sig.has_times) ops.push_back(3);
  }
  int op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(g)];
  if (op == 0) return Term::s(random_term(g, sig, size - 1, params));
  if (op == 1) return Term::p(random_term(g, sig, size - 1, params));
  unsigned left = std::uniform_int_distribution<unsigned>(1, size - 2)(g);
  TermPtr l = random_term(g, sig, left, params);
  TermPtr r = random_term(g, sig, size - 1 - left, params);
  return op == 2 ? Term::plus(l, r) : Term::times(l, r);
}

inline FormulaPtr random_open_formula(std::mt19937& g, const Signature& sig, unsigned max_size,
                                      const std::vector<std::string>& params) {
  unsigned lits = std::uniform_int_distribution<unsigned>(1, 3)(g);
  unsigned budget = std::max(2u * lits, max_size);
  std::vector<Literal> pool;
  for (unsigned i = 0; i < lits; ++i) {
    unsigned sz = std::uniform_int_distribution<unsigned>(2, std::max(2u, budget / lits))(g);
    unsigned left = std::uniform_int_distribution<unsigned>(1, sz - 1)(g);
    Literal l;
    l.negated = std::bernoulli_distribution(0.5)(g);
    l.lhs = random_term(g, sig, left, params);
    l.rhs = random_term(g, sig, sz - left, params);
    pool.push_back(std::move(l));
  }
  if (pool.size() == 1) return Formula::lit(pool[0]);
  return std::bernoulli_distribution(0.5)(g) ? Formula::clause(pool) : Formula::dual_clause(pool);
}

inline std::shared_ptr<const FiniteStructure> random_structure(std::mt19937& g, int n,
                                                               bool with_p) {
  std::vector<std::string> dom;
  for (int i = 0; i < n; ++i) dom.push_back("e" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> s(static_cast<std::size_t>(n)), p;
  for (auto& v : s) v = pick(g);
  if (with_p) {
    p.resize(static_cast<std::size_t>(n));
    for (auto& v : p) v = pick(g);
  }
  Signature sig{with_p, false, false};
  return std::make_shared<FiniteStructure>("random", sig, dom, 0, s, p,
                                           std::vector<std::vector<int>>{},
                                           std::vector<std::vector<int>>{});
}

}  // namespace oracle
