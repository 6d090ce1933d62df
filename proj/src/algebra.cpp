#include "oind/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace oind {

Polynomial::Polynomial(Int c) {
  if (c != 0) coeffs_[Monomial{}] = std::move(c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.coeffs_[Monomial{{name, 1}}] = 1;
  return p;
}

void Polynomial::set(Monomial m, Int c) {
  if (c == 0)
    coeffs_.erase(m);
  else
    coeffs_[std::move(m)] = std::move(c);
}

bool Polynomial::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first.empty());
}

const Int& Polynomial::constant_value() const {
  static const Int zero = 0;
  if (coeffs_.empty()) return zero;
  return coeffs_.begin()->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [m, c] : o.coeffs_) {
    auto it = r.coeffs_.find(m);
    if (it == r.coeffs_.end()) {
      r.coeffs_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (auto& [m1, c1] : coeffs_) {
    for (auto& [m2, c2] : o.coeffs_) {
      Monomial m = m1;
      for (auto& [v, e] : m2) m[v] += e;
      auto it = r.coeffs_.find(m);
      if (it == r.coeffs_.end()) {
        Int c = c1 * c2;
        if (c != 0) r.coeffs_[std::move(m)] = std::move(c);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (auto& [m, c] : coeffs_) {
    unsigned t = 0;
    for (auto& [v, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::vector<std::string> Polynomial::variables() const {
  std::vector<std::string> vars;
  for (auto& [m, c] : coeffs_)
    for (auto& [v, e] : m)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

Int Polynomial::evaluate(const std::map<std::string, Int>& vals) const {
  Int total = 0;
  for (auto& [m, c] : coeffs_) {
    Int term = c;
    for (auto& [v, e] : m) {
      auto it = vals.find(v);
      if (it == vals.end()) throw UnassignedParameter("no value for variable " + v);
      for (unsigned i = 0; i < e; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

Int Polynomial::evaluate_univariate(const Int& v) const {
  auto vars = variables();
  if (vars.size() > 1) throw std::invalid_argument("polynomial is not univariate");
  std::map<std::string, Int> vals;
  if (!vars.empty()) vals[vars[0]] = v;
  return evaluate(vals);
}

Polynomial Polynomial::substitute(const std::string& var, const Int& value) const {
  Polynomial r;
  for (auto& [m, c] : coeffs_) {
    Monomial rest = m;
    Int coeff = c;
    auto it = rest.find(var);
    if (it != rest.end()) {
      for (unsigned i = 0; i < it->second; ++i) coeff *= value;
      rest.erase(it);
    }
    if (coeff == 0) continue;
    auto rit = r.coeffs_.find(rest);
    if (rit == r.coeffs_.end()) {
      r.coeffs_[std::move(rest)] = std::move(coeff);
    } else {
      rit->second += coeff;
      if (rit->second == 0) r.coeffs_.erase(rit);
    }
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  // sort monomials by total degree descending, then lexicographic
  std::vector<const std::pair<const Monomial, Int>*> items;
  for (auto& kv : coeffs_) items.push_back(&kv);
  auto deg = [](const Monomial& m) {
    unsigned d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
  };
  std::sort(items.begin(), items.end(), [&](auto* a, auto* b) {
    unsigned da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* kv : items) {
    const auto& [m, c] = *kv;
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool coeff_shown = false;
    if (abs != 1 || m.empty()) {
      os << abs;
      coeff_shown = true;
    }
    bool any_var = false;
    for (auto& [v, e] : m) {
      if (coeff_shown || any_var) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      any_var = true;
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return {};
}

EventualForm eventual_form(const TermPtr& t, const std::map<std::string, Int>& params) {
  EventualForm r;
  switch (t->kind()) {
    case TermKind::Zero:
      r.poly = Polynomial::constant(0);
      break;
    case TermKind::Var:
      r.poly = Polynomial::variable("x");
      break;
    case TermKind::Param: {
      auto it = params.find(t->name());
      if (it == params.end()) throw UnassignedParameter("unassigned parameter " + t->name());
      r.poly = Polynomial::constant(it->second);
      break;
    }
    case TermKind::S: {
      EventualForm c = eventual_form(t->child(), params);
      r.poly = c.poly + Polynomial::constant(1);
      r.threshold = c.threshold;
      break;
    }
    case TermKind::P: {
      EventualForm c = eventual_form(t->child(), params);
      if (c.poly.is_zero())
        r.poly = Polynomial();  // p(0) = 0
      else
        r.poly = c.poly - Polynomial::constant(1);
      r.threshold = c.threshold + 1;
      break;
    }
    case TermKind::Plus: {
      EventualForm l = eventual_form(t->left(), params);
      EventualForm rr = eventual_form(t->right(), params);
      r.poly = l.poly + rr.poly;
      r.threshold = std::max(l.threshold, rr.threshold);
      break;
    }
    case TermKind::Times: {
      EventualForm l = eventual_form(t->left(), params);
      EventualForm rr = eventual_form(t->right(), params);
      r.poly = l.poly * rr.poly;
      r.threshold = std::max(l.threshold, rr.threshold);
      break;
    }
  }
  r.depends_on_x = !r.poly.is_constant();
  return r;
}

RingForm ring_normalize(const TermPtr& t) {
  RingForm r;
  switch (t->kind()) {
    case TermKind::Zero:
      r.poly = Polynomial();
      break;
    case TermKind::Var:
      r.poly = Polynomial::variable("x");
      break;
    case TermKind::Param:
      r.poly = Polynomial::variable(t->name());
      break;
    case TermKind::S: {
      RingForm c = ring_normalize(t->child());
      r.poly = c.poly + Polynomial::constant(1);
      r.p_depth = c.p_depth;
      break;
    }
    case TermKind::P: {
      RingForm c = ring_normalize(t->child());
      if (c.poly.is_zero())
        r.poly = Polynomial();
      else
        r.poly = c.poly - Polynomial::constant(1);
      r.p_depth = c.p_depth + 1;
      break;
    }
    case TermKind::Plus: {
      RingForm l = ring_normalize(t->left());
      RingForm rr = ring_normalize(t->right());
      r.poly = l.poly + rr.poly;
      r.p_depth = std::max(l.p_depth, rr.p_depth);
      break;
    }
    case TermKind::Times: {
      RingForm l = ring_normalize(t->left());
      RingForm rr = ring_normalize(t->right());
      r.poly = l.poly * rr.poly;
      r.p_depth = std::max(l.p_depth, rr.p_depth);
      break;
    }
  }
  return r;
}

unsigned positive_root_bound(const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("zero polynomial has no root bound");
  if (q.is_constant()) return 1;
  auto vars = q.variables();
  if (vars.size() != 1) throw std::invalid_argument("root bound requires a univariate polynomial");
  const std::string& v = vars[0];
  unsigned deg = q.total_degree();
  Int lead = 0, maxabs = 0;
  for (auto& [m, c] : q.coefficients()) {
    unsigned e = m.empty() ? 0 : m.begin()->second;
    Int abs = c < 0 ? Int(-c) : c;
    if (e == deg)
      lead = abs;
    else
      maxabs = std::max(maxabs, abs);
  }
  Int bound = 1 + (maxabs + lead - 1) / lead;  // ceil division
  if (bound > 1000000) throw std::overflow_error("root bound too large");
  return static_cast<unsigned>(bound);
}

std::vector<Int> natural_roots(const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<Int> roots;
  if (q.is_constant()) return roots;
  unsigned b = positive_root_bound(q);
  for (unsigned n = 0; n < b; ++n)
    if (q.evaluate_univariate(n) == 0) roots.push_back(n);
  return roots;
}

}  // namespace oind
