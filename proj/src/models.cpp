#include "oind/models.hpp"

#include <json.hpp>

#include <algorithm>

namespace oind {

using nlohmann::json;

std::string Structure::element_name(const Element& e) const { return element_to_string(*this, e); }

Element eval_term(const Structure& m, const TermPtr& t, const Element& x_val, const Env& params) {
  switch (t->kind()) {
    case TermKind::Zero: return m.zero();
    case TermKind::Var: return x_val;
    case TermKind::Param: {
      auto it = params.find(t->name());
      if (it == params.end()) throw EvalError("unassigned parameter " + t->name());
      return it->second;
    }
    case TermKind::S: return m.succ(eval_term(m, t->child(), x_val, params));
    case TermKind::P: return m.pred(eval_term(m, t->child(), x_val, params));
    case TermKind::Plus:
      return m.add(eval_term(m, t->left(), x_val, params), eval_term(m, t->right(), x_val, params));
    case TermKind::Times:
      return m.mul(eval_term(m, t->left(), x_val, params), eval_term(m, t->right(), x_val, params));
  }
  throw EvalError("bad term");
}

bool eval_literal(const Structure& m, const Literal& l, const Element& x_val, const Env& params) {
  bool eq = eval_term(m, l.lhs, x_val, params) == eval_term(m, l.rhs, x_val, params);
  return l.negated ? !eq : eq;
}

bool eval_open(const Structure& m, const FormulaPtr& f, const Element& x_val, const Env& params) {
  switch (f->kind()) {
    case FormulaKind::Lit: return eval_literal(m, f->literal(), x_val, params);
    case FormulaKind::And:
      for (auto& c : f->children())
        if (!eval_open(m, c, x_val, params)) return false;
      return true;
    case FormulaKind::Or:
      for (auto& c : f->children())
        if (eval_open(m, c, x_val, params)) return true;
      return false;
    case FormulaKind::Not: return !eval_open(m, f->children()[0], x_val, params);
  }
  throw EvalError("bad formula");
}

std::string element_to_string(const Structure& m, const Element& e) {
  switch (e.kind) {
    case Element::Kind::Nat: return e.nat.str();
    case Element::Kind::Inf: return "inf";
    case Element::Kind::A: return "a";
    case Element::Kind::B: return "b";
    case Element::Kind::Fin: {
      auto* f = dynamic_cast<const FiniteStructure*>(&m);
      if (!f) return "#" + std::to_string(e.fin);
      return f->element_name(e);
    }
  }
  return "?";
}

Element element_from_string(const Structure& m, const std::string& s) {
  if (auto* f = dynamic_cast<const FiniteStructure*>(&m)) {
    auto& dom = f->domain();
    auto it = std::find(dom.begin(), dom.end(), s);
    if (it == dom.end()) throw EvalError("no element named '" + s + "' in " + m.name());
    return Element::fin_of(static_cast<int>(it - dom.begin()));
  }
  if (s == "inf" || s == "oo") return Element::inf();
  if (s == "a") return Element::a();
  if (s == "b") return Element::b();
  try {
    return Element::nat_of(Int(s));
  } catch (const std::exception&) {
    throw EvalError("cannot read element '" + s + "' for " + m.name());
  }
}

// ---------------------------------------------------------------------------
// FiniteStructure

FiniteStructure::FiniteStructure(std::string name, Signature sig, std::vector<std::string> domain,
                                 int zero_index, std::vector<int> s_table, std::vector<int> p_table,
                                 std::vector<std::vector<int>> plus_table,
                                 std::vector<std::vector<int>> times_table)
    : name_(std::move(name)),
      sig_(sig),
      domain_(std::move(domain)),
      zero_index_(zero_index),
      s_table_(std::move(s_table)),
      p_table_(std::move(p_table)),
      plus_table_(std::move(plus_table)),
      times_table_(std::move(times_table)) {
  std::size_t n = domain_.size();
  auto check_unary = [&](const std::vector<int>& t, const char* sym) {
    if (t.size() != n) throw ModelFormatError(std::string(sym) + " table is not total");
    for (int v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ModelFormatError(std::string(sym) + " table leaves the domain");
  };
  auto check_binary = [&](const std::vector<std::vector<int>>& t, const char* sym) {
    if (t.size() != n) throw ModelFormatError(std::string(sym) + " table is not total");
    for (auto& row : t) check_unary(row, sym);
  };
  if (n == 0) throw ModelFormatError("empty domain");
  if (zero_index_ < 0 || static_cast<std::size_t>(zero_index_) >= n)
    throw ModelFormatError("zero element not in domain");
  check_unary(s_table_, "s");
  if (sig_.has_p) check_unary(p_table_, "p");
  if (sig_.has_plus) check_binary(plus_table_, "plus");
  if (sig_.has_times) check_binary(times_table_, "times");
}

int FiniteStructure::check(const Element& e) const {
  if (e.kind != Element::Kind::Fin || e.fin < 0 ||
      static_cast<std::size_t>(e.fin) >= domain_.size())
    throw EvalError("element does not belong to " + name_);
  return e.fin;
}

Element FiniteStructure::succ(const Element& e) const {
  return Element::fin_of(s_table_[static_cast<std::size_t>(check(e))]);
}

Element FiniteStructure::pred(const Element& e) const {
  if (!sig_.has_p) throw EvalError("symbol p not in signature of " + name_);
  return Element::fin_of(p_table_[static_cast<std::size_t>(check(e))]);
}

Element FiniteStructure::add(const Element& l, const Element& r) const {
  if (!sig_.has_plus) throw EvalError("symbol + not in signature of " + name_);
  return Element::fin_of(plus_table_[static_cast<std::size_t>(check(l))][static_cast<std::size_t>(check(r))]);
}

Element FiniteStructure::mul(const Element& l, const Element& r) const {
  if (!sig_.has_times) throw EvalError("symbol * not in signature of " + name_);
  return Element::fin_of(times_table_[static_cast<std::size_t>(check(l))][static_cast<std::size_t>(check(r))]);
}

std::string FiniteStructure::element_name(const Element& e) const {
  return domain_[static_cast<std::size_t>(check(e))];
}

std::vector<Element> FiniteStructure::probe_elements(unsigned) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) out.push_back(Element::fin_of(static_cast<int>(i)));
  return out;
}

std::shared_ptr<const FiniteStructure> FiniteStructure::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::string name = j.at("name").get<std::string>();
    Signature sig;
    bool saw_zero = false, saw_s = false;
    for (auto& s : j.at("signature")) {
      std::string sym = s.get<std::string>();
      if (sym == "zero") saw_zero = true;
      else if (sym == "s") saw_s = true;
      else if (sym == "p") sig.has_p = true;
      else if (sym == "plus") sig.has_plus = true;
      else if (sym == "times") sig.has_times = true;
      else throw ModelFormatError("unknown symbol in signature: " + sym);
    }
    if (!saw_zero || !saw_s) throw ModelFormatError("signature must contain zero and s");

    std::vector<std::string> domain = j.at("domain").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& e) {
      auto it = std::find(domain.begin(), domain.end(), e);
      if (it == domain.end()) throw ModelFormatError("element '" + e + "' not in domain");
      return static_cast<int>(it - domain.begin());
    };
    int zero_index = index_of(j.at("zero").get<std::string>());

    auto unary = [&](const char* key) {
      std::vector<int> t;
      auto& tab = j.at(key);
      for (auto& e : domain) {
        if (!tab.contains(e)) throw ModelFormatError(std::string(key) + " table missing row for '" + e + "'");
        t.push_back(index_of(tab.at(e).get<std::string>()));
      }
      return t;
    };
    auto binary = [&](const char* key) {
      std::vector<std::vector<int>> t;
      auto& tab = j.at(key);
      for (auto& l : domain) {
        if (!tab.contains(l)) throw ModelFormatError(std::string(key) + " table missing row for '" + l + "'");
        std::vector<int> row;
        for (auto& r : domain) {
          if (!tab.at(l).contains(r))
            throw ModelFormatError(std::string(key) + " table missing cell (" + l + "," + r + ")");
          row.push_back(index_of(tab.at(l).at(r).get<std::string>()));
        }
        t.push_back(std::move(row));
      }
      return t;
    };

    std::vector<int> s_table = unary("s");
    std::vector<int> p_table = sig.has_p ? unary("p") : std::vector<int>{};
    auto plus_table = sig.has_plus ? binary("plus") : std::vector<std::vector<int>>{};
    auto times_table = sig.has_times ? binary("times") : std::vector<std::vector<int>>{};
    return std::make_shared<FiniteStructure>(std::move(name), sig, std::move(domain), zero_index,
                                             std::move(s_table), std::move(p_table),
                                             std::move(plus_table), std::move(times_table));
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("schema violation: ") + e.what());
  }
}

std::string FiniteStructure::to_json() const {
  json j;
  j["name"] = name_;
  std::vector<std::string> sig{"zero", "s"};
  if (sig_.has_p) sig.push_back("p");
  if (sig_.has_plus) sig.push_back("plus");
  if (sig_.has_times) sig.push_back("times");
  j["signature"] = sig;
  j["domain"] = domain_;
  j["zero"] = domain_[static_cast<std::size_t>(zero_index_)];
  json s = json::object();
  for (std::size_t i = 0; i < domain_.size(); ++i) s[domain_[i]] = domain_[static_cast<std::size_t>(s_table_[i])];
  j["s"] = s;
  if (sig_.has_p) {
    json p = json::object();
    for (std::size_t i = 0; i < domain_.size(); ++i) p[domain_[i]] = domain_[static_cast<std::size_t>(p_table_[i])];
    j["p"] = p;
  }
  auto binary = [&](const std::vector<std::vector<int>>& t) {
    json b = json::object();
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      json row = json::object();
      for (std::size_t k = 0; k < domain_.size(); ++k) row[domain_[k]] = domain_[static_cast<std::size_t>(t[i][k])];
      b[domain_[i]] = row;
    }
    return b;
  };
  if (sig_.has_plus) j["plus"] = binary(plus_table_);
  if (sig_.has_times) j["times"] = binary(times_table_);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// NInfStructure

NInfStructure::NInfStructure(Signature sig) : sig_(sig) {
  name_ = sig == Signature::full() ? "ninf" : "ninf@" + sig.to_string();
}

static void require_standard_kind(const Element& e, const char* model) {
  if (e.kind == Element::Kind::A || e.kind == Element::Kind::B || e.kind == Element::Kind::Fin)
    throw EvalError(std::string("element does not belong to ") + model);
}

Element NInfStructure::succ(const Element& e) const {
  require_standard_kind(e, "ninf");
  if (e.kind == Element::Kind::Inf) return e;
  return Element::nat_of(e.nat + 1);
}

Element NInfStructure::pred(const Element& e) const {
  if (!sig_.has_p) throw EvalError("symbol p not in signature of " + name_);
  require_standard_kind(e, "ninf");
  if (e.kind == Element::Kind::Inf) return e;
  return Element::nat_of(e.nat == 0 ? Int(0) : Int(e.nat - 1));
}

Element NInfStructure::add(const Element& l, const Element& r) const {
  if (!sig_.has_plus) throw EvalError("symbol + not in signature of " + name_);
  require_standard_kind(l, "ninf");
  require_standard_kind(r, "ninf");
  if (l.kind == Element::Kind::Inf || r.kind == Element::Kind::Inf) return Element::inf();
  return Element::nat_of(l.nat + r.nat);
}

Element NInfStructure::mul(const Element& l, const Element& r) const {
  if (!sig_.has_times) throw EvalError("symbol * not in signature of " + name_);
  require_standard_kind(l, "ninf");
  require_standard_kind(r, "ninf");
  if (l.kind == Element::Kind::Inf || r.kind == Element::Kind::Inf) {
    const Element& other = l.kind == Element::Kind::Inf ? r : l;
    if (other.kind == Element::Kind::Nat && other.nat == 0) return Element::nat_of(0);
    return Element::inf();
  }
  return Element::nat_of(l.nat * r.nat);
}

std::vector<Element> NInfStructure::probe_elements(unsigned slice) const {
  std::vector<Element> out;
  for (unsigned n = 0; n <= slice; ++n) out.push_back(Element::nat_of(n));
  out.push_back(Element::inf());
  return out;
}

// ---------------------------------------------------------------------------
// NabStructure

NabStructure::NabStructure(Signature sig) : sig_(sig) {
  name_ = sig == Signature::full() ? "nab" : "nab@" + sig.to_string();
}

static bool is_ab(const Element& e) {
  return e.kind == Element::Kind::A || e.kind == Element::Kind::B;
}

static Element ab_swap(const Element& e) {
  return e.kind == Element::Kind::A ? Element::b() : Element::a();
}

static void require_nab_kind(const Element& e) {
  if (e.kind == Element::Kind::Inf || e.kind == Element::Kind::Fin)
    throw EvalError("element does not belong to nab");
}

Element NabStructure::succ(const Element& e) const {
  require_nab_kind(e);
  if (is_ab(e)) return e;
  return Element::nat_of(e.nat + 1);
}

Element NabStructure::pred(const Element& e) const {
  if (!sig_.has_p) throw EvalError("symbol p not in signature of " + name_);
  require_nab_kind(e);
  if (is_ab(e)) return e;
  return Element::nat_of(e.nat == 0 ? Int(0) : Int(e.nat - 1));
}

Element NabStructure::add(const Element& l, const Element& r) const {
  if (!sig_.has_plus) throw EvalError("symbol + not in signature of " + name_);
  require_nab_kind(l);
  require_nab_kind(r);
  if (is_ab(l)) return l;               // rows a and b absorb
  if (is_ab(r)) return ab_swap(r);      // standard row, column a gives b and vice versa
  return Element::nat_of(l.nat + r.nat);
}

Element NabStructure::mul(const Element& l, const Element& r) const {
  if (!sig_.has_times) throw EvalError("symbol * not in signature of " + name_);
  require_nab_kind(l);
  require_nab_kind(r);
  if (is_ab(l) && is_ab(r)) {
    // a*a = a, a*b = a, b*a = b, b*b = b
    return l;
  }
  if (is_ab(l)) {
    if (r.nat == 0) return Element::nat_of(0);  // a*0 = b*0 = 0
    return ab_swap(l);                          // a*n = b, b*n = a for standard n >= 1
  }
  if (is_ab(r)) {
    if (l.nat == 0) return ab_swap(r);  // 0*a = b, 0*b = a, per the 0 row
    return ab_swap(r);                  // n*a = b, n*b = a for standard n >= 1
  }
  return Element::nat_of(l.nat * r.nat);
}

std::vector<Element> NabStructure::probe_elements(unsigned slice) const {
  std::vector<Element> out;
  out.push_back(Element::a());
  for (unsigned n = 0; n <= slice; ++n) out.push_back(Element::nat_of(n));
  out.push_back(Element::b());
  return out;
}

// ---------------------------------------------------------------------------
// StandardStructure

StandardStructure::StandardStructure(Signature sig) : sig_(sig) {
  name_ = sig == Signature::full() ? "standard" : "standard@" + sig.to_string();
}

static void require_nat(const Element& e) {
  if (e.kind != Element::Kind::Nat) throw EvalError("element does not belong to the standard model");
}

Element StandardStructure::succ(const Element& e) const {
  require_nat(e);
  return Element::nat_of(e.nat + 1);
}

Element StandardStructure::pred(const Element& e) const {
  if (!sig_.has_p) throw EvalError("symbol p not in signature of " + name_);
  require_nat(e);
  return Element::nat_of(e.nat == 0 ? Int(0) : Int(e.nat - 1));
}

Element StandardStructure::add(const Element& l, const Element& r) const {
  if (!sig_.has_plus) throw EvalError("symbol + not in signature of " + name_);
  require_nat(l);
  require_nat(r);
  return Element::nat_of(l.nat + r.nat);
}

Element StandardStructure::mul(const Element& l, const Element& r) const {
  if (!sig_.has_times) throw EvalError("symbol * not in signature of " + name_);
  require_nat(l);
  require_nat(r);
  return Element::nat_of(l.nat * r.nat);
}

std::vector<Element> StandardStructure::probe_elements(unsigned slice) const {
  std::vector<Element> out;
  for (unsigned n = 0; n <= slice; ++n) out.push_back(Element::nat_of(n));
  return out;
}

// ---------------------------------------------------------------------------
// Zoo

std::shared_ptr<const FiniteStructure> make_lollipop6() {
  // domain {0,1,2,a,b,c}; s: 0->1, 1->2, 2->1, a->b, b->c, c->a
  return std::make_shared<FiniteStructure>(
      "lollipop6", Signature::zero_s(), std::vector<std::string>{"0", "1", "2", "a", "b", "c"}, 0,
      std::vector<int>{1, 2, 1, 4, 5, 3}, std::vector<int>{}, std::vector<std::vector<int>>{},
      std::vector<std::vector<int>>{});
}

std::shared_ptr<const FiniteStructure> make_lollipop5() {
  // domain {0,1,2,a,b}; s: 0->1, 1->2, 2->1, a->b, b->a
  return std::make_shared<FiniteStructure>(
      "lollipop5", Signature::zero_s(), std::vector<std::string>{"0", "1", "2", "a", "b"}, 0,
      std::vector<int>{1, 2, 1, 4, 3}, std::vector<int>{}, std::vector<std::vector<int>>{},
      std::vector<std::vector<int>>{});
}

std::shared_ptr<const FiniteStructure> make_cyclic(int k) {
  if (k < 1) throw ModelFormatError("cyclic model needs k >= 1");
  std::vector<std::string> dom;
  std::vector<int> s(k), p(k);
  std::vector<std::vector<int>> plus(k, std::vector<int>(k)), times(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    dom.push_back(std::to_string(i));
    s[static_cast<std::size_t>(i)] = (i + 1) % k;
    p[static_cast<std::size_t>(i)] = (i + k - 1) % k;
    for (int j = 0; j < k; ++j) {
      plus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % k;
      times[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i * j) % k;
    }
  }
  return std::make_shared<FiniteStructure>("z" + std::to_string(k), Signature::full(),
                                           std::move(dom), 0, std::move(s), std::move(p),
                                           std::move(plus), std::move(times));
}

std::vector<StructurePtr> zoo() {
  std::vector<StructurePtr> out;
  out.push_back(std::make_shared<StandardStructure>(Signature::full()));
  out.push_back(std::make_shared<NInfStructure>(Signature::full()));
  out.push_back(std::make_shared<NInfStructure>(Signature::zero_s()));
  out.push_back(std::make_shared<NInfStructure>(Signature{true, false, false}));
  out.push_back(std::make_shared<NInfStructure>(Signature{true, true, false}));
  out.push_back(std::make_shared<NabStructure>(Signature::full()));
  out.push_back(make_lollipop5());
  out.push_back(make_lollipop6());
  return out;
}

StructurePtr zoo_lookup(const std::string& name) {
  std::string base = name;
  Signature sig = Signature::full();
  auto at = name.find('@');
  if (at != std::string::npos) {
    base = name.substr(0, at);
    sig = Signature::from_string(name.substr(at + 1));
  }
  if (base == "standard") return std::make_shared<StandardStructure>(sig);
  if (base == "ninf") return std::make_shared<NInfStructure>(sig);
  if (base == "nab") return std::make_shared<NabStructure>(sig);
  if (at == std::string::npos) {
    if (name == "lollipop5") return make_lollipop5();
    if (name == "lollipop6") return make_lollipop6();
    if (name.size() > 1 && name[0] == 'z' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos)
      return make_cyclic(std::stoi(name.substr(1)));
  }
  throw EvalError("unknown zoo model: " + name);
}

}  // namespace oind
