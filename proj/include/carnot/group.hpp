#pragma once

#include "carnot/models.hpp"

#include <array>

namespace carnot {

// Group-level data derived once from the symmetric frame: the product map
// z(x, y) from composing coordinate flows, the inversion map, the
// right-invariant frame, and the fiber-linear Hamiltonians on T*G.
struct GroupOps {
  LieAlgebraModel model;        // symmetric frame, basis X1..X8
  VarSetPtr x_vars;             // x1..x8
  VarSetPtr xy_vars;            // x1..x8, y1..y8
  VarSetPtr phase_vars;         // x1..x8, psi1..psi8
  std::vector<Poly> product;    // z_k over xy_vars
  PolyMap inverse;              // over x_vars
  std::vector<VecField> right;  // Y1..Y8 = i_* X_i
  std::vector<Poly> h;          // h_i = <psi, X_i>, over phase_vars
  std::vector<Poly> g;          // g_i = <psi, Y_i>
  Poly h0;                      // <psi, X0>
  Poly H;                       // (h1^2 + h2^2)/2
};

// Derived lazily once; immutable afterwards.
const GroupOps& group_ops();

std::vector<Rational> group_product(std::span<const Rational> a, std::span<const Rational> b);
std::vector<Rational> group_inverse(std::span<const Rational> a);
std::array<double, 8> group_product(const std::array<double, 8>& a, const std::array<double, 8>& b);
std::array<double, 8> group_inverse(const std::array<double, 8>& a);

// Pointwise product through the chain of coordinate flows (solve the flow
// times for b, then push a through them). Independent of the symbolic
// substitution path that produced `product`.
std::vector<Rational> flow_composition_product(std::span<const Rational> a,
                                               std::span<const Rational> b);

// Canonical Poisson bracket on T*G in (x, psi) coordinates, with the sign
// fixed by {h_V, h_W} = h_[V,W] for fiber-linear Hamiltonians.
Poly canonical_poisson(const Poly& f, const Poly& g);

// Left translation L_a as a polynomial map over (x1..x8, a1..a8), together
// with its inverse; used for the left-invariance check.
PolyMap left_translation();
PolyMap left_translation_inverse();

}  // namespace carnot
