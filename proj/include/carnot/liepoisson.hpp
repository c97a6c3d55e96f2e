#pragma once

#include "carnot/linalg.hpp"
#include "carnot/models.hpp"

#include <array>

namespace carnot {

// Coordinates h1..h8 on the dual of the Lie algebra.
const VarSetPtr& h_vars();

// Lie-Poisson bracket {f, g} = sum c^k_{ij} h_k df/dh_i dg/dh_j for the
// (2,3,5,8) structure constants.
Poly lp_bracket(const Poly& f, const Poly& g);

Poly casimir_C();
Poly vertical_H();  // (h1^2 + h2^2)/2 over h-variables
std::vector<Poly> casimirs();  // h6, h7, h8, C

// Coadjoint generator fields V1..V5 on the dual space.
std::vector<VecField> coadjoint_fields();

// The 5x5 momentum matrix J(h) whose rank is the orbit dimension.
RatMatrix momentum_matrix(std::span<const Rational> h);

struct OrbitInfo {
  double delta = 0;   // h6 h8 - h7^2
  double delta1 = 0;  // h5 h7 - h4 h8
  double delta2 = 0;  // h5 h6 - h4 h7
  int dim = 0;        // rank of J(h), computed exactly
};

OrbitInfo orbit_info(const std::array<double, 8>& h);
int orbit_rank_exact(std::span<const Rational> h);

// Graph chart of the 4-dimensional orbit through h (requires delta != 0):
// h3 as a function of (h4, h5) = (a, b); elliptic paraboloid for delta > 0,
// hyperbolic for delta < 0.
struct OrbitChart {
  double h6 = 0, h7 = 0, h8 = 0;
  double C = 0;
  double delta = 0;
  bool elliptic = false;
  double h3(double a, double b) const {
    return (h6 * b * b - 2 * h7 * a * b + h8 * a * a - C) / (2 * delta);
  }
};

OrbitChart orbit_chart(const std::array<double, 8>& h);

struct AlgebraCheck {
  std::string bracket;
  std::string expected;
  std::string residual;
  bool pass = false;
};

// {c, h_j} = 0 for every Casimir and every coordinate, via the Lie-Poisson
// bracket; exact.
std::vector<AlgebraCheck> verify_casimirs();

// Integral algebra on T*G via the canonical bracket: H commutes with every
// g_i and with h0; the h0-g table closes; span(H, g3..g8) is Abelian.
std::vector<AlgebraCheck> verify_integral_algebra();

// Compatibility of the two brackets: {h_i, h_j}_canonical equals the
// structure-constant combination of the h's, pair by pair.
std::vector<AlgebraCheck> verify_bracket_compatibility();

// Homogeneous degree-k polynomial integrals of the vertical flow: exact
// nullspace of P -> {H, P} on the degree-k coefficient space.
struct HomogeneousIntegrals {
  int degree = 0;
  std::vector<Monomial> monomials;                // degree-k exponent vectors
  std::vector<std::vector<Rational>> basis;       // nullspace vectors
  Poly to_poly(const std::vector<Rational>& coeffs) const;
};

HomogeneousIntegrals homogeneous_integral_space(int k);

std::vector<Monomial> monomials_of_degree(int k, std::size_t nvars);

// Rank of the Jacobian of fs at a rational point (exact).
int jacobian_rank_at(const std::vector<Poly>& fs, std::span<const Rational> pt);

}  // namespace carnot
