#pragma once

#include "carnot/poly.hpp"

#include <vector>

namespace carnot {

// Polynomial vector field on R^dim. The first `dim` variables of the varset
// are the coordinates; any further variables act as parameters.
class VecField {
 public:
  VecField() = default;
  VecField(std::vector<Poly> components, std::size_t dim);

  const VarSetPtr& varset() const { return vars_; }
  std::size_t dim() const { return dim_; }
  const Poly& component(std::size_t i) const { return comp_[i]; }
  const std::vector<Poly>& components() const { return comp_; }
  bool is_zero() const;

  // Directional derivative V(f) = sum_j V_j df/dx_j.
  Poly apply(const Poly& f) const;

  VecField operator-() const;
  VecField& operator+=(const VecField& o);
  VecField& operator-=(const VecField& o);
  friend VecField operator+(VecField a, const VecField& b) { return a += b; }
  friend VecField operator-(VecField a, const VecField& b) { return a -= b; }
  friend VecField operator*(const Rational& c, const VecField& v);
  bool operator==(const VecField& o) const { return dim_ == o.dim_ && comp_ == o.comp_; }

  VecField extend(const VarSetPtr& bigger) const;

 private:
  VarSetPtr vars_;
  std::size_t dim_ = 0;
  std::vector<Poly> comp_;
};

// Lie bracket [V, W] = V∘W − W∘V acting as derivations.
VecField lie_bracket(const VecField& v, const VecField& w);

// Polynomial self-map of R^dim; like VecField, trailing varset entries are
// parameters that pass through composition untouched.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::vector<Poly> components, std::size_t dim);

  static PolyMap identity(VarSetPtr vs, std::size_t dim);

  const VarSetPtr& varset() const { return vars_; }
  std::size_t dim() const { return dim_; }
  const Poly& component(std::size_t i) const { return comp_[i]; }
  const std::vector<Poly>& components() const { return comp_; }

  // this ∘ inner (apply inner first).
  PolyMap after(const PolyMap& inner) const;
  // Compose a scalar polynomial with this map.
  Poly pullback(const Poly& f) const;

  std::vector<Rational> eval(std::span<const Rational> point) const;
  std::vector<double> eval(std::span<const double> point) const;

  bool operator==(const PolyMap& o) const { return dim_ == o.dim_ && comp_ == o.comp_; }

 private:
  VarSetPtr vars_;
  std::size_t dim_ = 0;
  std::vector<Poly> comp_;

  std::vector<Poly> images_with_parameters(const PolyMap& inner) const;
};

// Exact time-t flow e^{tV} of a nilpotent field: each coordinate maps to its
// terminating Lie series. `time` is a polynomial (a parameter variable or a
// constant) whose varset must contain V's varset as a prefix. Throws
// std::domain_error("non-nilpotent field") if a series survives past
// `series_cap` applications of V.
PolyMap flow(const VecField& v, const Poly& time, int series_cap = 5);
PolyMap flow(const VecField& v, const Rational& t, int series_cap = 5);

// Pushforward F_* V for a polynomial diffeomorphism F with polynomial inverse:
// (F_* V)(y) = J_F(F^{-1}(y)) · V(F^{-1}(y)).
VecField pushforward(const VecField& v, const PolyMap& fwd, const PolyMap& inv);

}  // namespace carnot
