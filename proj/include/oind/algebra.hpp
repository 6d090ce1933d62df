#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oind/syntax.hpp"

namespace oind {

using Int = boost::multiprecision::cpp_int;

// Exponent map, variable name -> exponent > 0. Empty map is the constant
// monomial.
using Monomial = std::map<std::string, unsigned>;

// Sparse integer polynomial in named variables. No zero coefficients are
// stored; equality is map equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Int c);
  static Polynomial constant(Int c) { return Polynomial(std::move(c)); }
  static Polynomial variable(const std::string& name);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  const Int& constant_value() const;  // requires is_constant()

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  unsigned total_degree() const;
  std::vector<std::string> variables() const;

  Int evaluate(const std::map<std::string, Int>& vals) const;
  // Evaluate a univariate polynomial (at most one variable).
  Int evaluate_univariate(const Int& v) const;

  Polynomial substitute(const std::string& var, const Int& value) const;

  const std::map<Monomial, Int>& coefficients() const { return coeffs_; }

  // Total-degree, then lexicographic monomial order; deterministic.
  std::string to_string() const;

 private:
  std::map<Monomial, Int> coeffs_;

  void set(Monomial m, Int c);
};

enum class PolyOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// Univariate polynomial in x with a threshold N: for every n >= N the
// standard-part evaluation of the originating term at n equals poly(n).
struct EventualForm {
  Polynomial poly;  // univariate in "x"
  unsigned threshold = 0;
  bool depends_on_x = false;  // equivalent to poly being non-constant
};

struct UnassignedParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inductive construction of the eventually-agreeing polynomial of a term in
// the standard part: x/param/0 are immediate, s adds one, p subtracts one and
// bumps the threshold, + and * combine with the max threshold. p of an
// identically-zero value stays zero.
EventualForm eventual_form(const TermPtr& t, const std::map<std::string, Int>& params);

struct RingForm {
  Polynomial poly;  // over "x" and the parameter names
  unsigned p_depth = 0;
};

// Rewrite p(t) ~> t-1 (p of an identically-zero polynomial stays zero) and
// expand to a polynomial; evaluations agree with the standard model whenever
// every argument exceeds p_depth.
RingForm ring_normalize(const TermPtr& t);

// A bound B with every natural root of q strictly below B
// (1 + max|c_i| / |c_lead|, rounded up). q must be nonzero.
unsigned positive_root_bound(const Polynomial& q);

// All natural roots of a nonzero univariate polynomial.
std::vector<Int> natural_roots(const Polynomial& q);

}  // namespace oind
