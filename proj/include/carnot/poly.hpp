#pragma once

#include "carnot/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carnot {

// Ordered list of variable names. All polynomials over the same mathematical
// space share one VarSet; mixed-varset arithmetic is a contract violation.
// Standard sets are built in the fixed global order x1..x8 < psi1..psi8 < t/y
// parameters so that canonical forms are reproducible.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);
// prefix1..prefixN, e.g. prefixed_vars("x", 8) -> x1..x8.
VarSetPtr prefixed_vars(const std::string& prefix, int count);
VarSetPtr concat_varsets(const VarSet& a, const VarSet& b);

// Exponent vector, parallel to the varset.
using Monomial = std::vector<std::uint32_t>;

// Exact multivariate polynomial with rational coefficients in canonical form:
// the term map never holds a zero coefficient, so equality is map equality.
class Poly {
 public:
  Poly() = default;  // unusable placeholder (no varset); assign before use

  static Poly zero(VarSetPtr vs);
  static Poly constant(VarSetPtr vs, Rational c);
  static Poly variable(VarSetPtr vs, std::string_view name);

  const VarSetPtr& varset() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(std::size_t var_index) const;
  Poly derivative(std::string_view var) const;

  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  // Substitute images[i] for variable i; images must all share one varset.
  Poly substitute(const std::vector<Poly>& images) const;
  // Re-express over a superset varset (every current name must exist there).
  Poly extend(const VarSetPtr& bigger) const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var_index) const;
  Rational coefficient(const Monomial& m) const;

  // Canonical text form, e.g. "1/2 * x1^2 * x2 - 1 * x3". Terms are ordered
  // by total degree (descending), then by exponent vector.
  std::string str() const;

  // Builder used by internal routines; normalizes (drops zero coefficients).
  static Poly from_terms(VarSetPtr vs, std::map<Monomial, Rational> terms);

 private:
  VarSetPtr vars_;
  std::map<Monomial, Rational> terms_;

  void add_term(const Monomial& m, const Rational& c);
  void require_same_varset(const Poly& o) const;
};

}  // namespace carnot
