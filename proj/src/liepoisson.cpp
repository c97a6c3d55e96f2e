#include "carnot/liepoisson.hpp"

#include "carnot/group.hpp"
#include "carnot/linalg.hpp"

#include <stdexcept>

namespace carnot {

const VarSetPtr& h_vars() {
  static const VarSetPtr vs = prefixed_vars("h", 8);
  return vs;
}

namespace {

Poly hv(int i) { return Poly::variable(h_vars(), "h" + std::to_string(i)); }

const StructureTable& table() {
  static const StructureTable t = carnot_2358_table();
  return t;
}

}  // namespace

Poly lp_bracket(const Poly& f, const Poly& g) {
  Poly acc = Poly::zero(h_vars());
  for (const auto& [pair, combo] : table().entries()) {
    const auto [i, j] = pair;
    Poly fi = f.derivative(static_cast<std::size_t>(i) - 1);
    Poly fj = f.derivative(static_cast<std::size_t>(j) - 1);
    Poly gi = g.derivative(static_cast<std::size_t>(i) - 1);
    Poly gj = g.derivative(static_cast<std::size_t>(j) - 1);
    Poly antisym = fi * gj - fj * gi;
    if (antisym.is_zero()) continue;
    Poly hk = Poly::zero(h_vars());
    for (const auto& [k, c] : combo) hk += c * hv(k);
    acc += hk * antisym;
  }
  return acc;
}

Poly casimir_C() {
  return hv(5) * hv(5) * hv(6) - Rational(2) * hv(4) * hv(5) * hv(7) + hv(4) * hv(4) * hv(8) -
         Rational(2) * hv(3) * (hv(6) * hv(8) - hv(7) * hv(7));
}

Poly vertical_H() { return Rational(1, 2) * (hv(1) * hv(1) + hv(2) * hv(2)); }

std::vector<Poly> casimirs() { return {hv(6), hv(7), hv(8), casimir_C()}; }

std::vector<VecField> coadjoint_fields() {
  const VarSetPtr& vs = h_vars();
  auto field = [&](std::initializer_list<std::pair<int, Poly>> comps) {
    std::vector<Poly> c(8, Poly::zero(vs));
    for (const auto& [i, p] : comps) c[static_cast<std::size_t>(i) - 1] = p;
    return VecField(std::move(c), 8);
  };
  return {
      field({{2, -hv(3)}, {3, -hv(4)}, {4, -hv(6)}, {5, -hv(7)}}),
      field({{1, hv(3)}, {3, -hv(5)}, {4, -hv(7)}, {5, -hv(8)}}),
      field({{1, hv(4)}, {2, hv(5)}}),
      field({{1, hv(6)}, {2, hv(7)}}),
      field({{1, hv(7)}, {2, hv(8)}}),
  };
}

RatMatrix momentum_matrix(std::span<const Rational> h) {
  const Rational &h3 = h[2], &h4 = h[3], &h5 = h[4], &h6 = h[5], &h7 = h[6], &h8 = h[7];
  return {
      {Rational(0), h3, h4, h6, h7},
      {-h3, Rational(0), h5, h7, h8},
      {-h4, -h5, Rational(0), Rational(0), Rational(0)},
      {-h6, -h7, Rational(0), Rational(0), Rational(0)},
      {-h7, -h8, Rational(0), Rational(0), Rational(0)},
  };
}

int orbit_rank_exact(std::span<const Rational> h) { return exact_rank(momentum_matrix(h)); }

OrbitInfo orbit_info(const std::array<double, 8>& h) {
  OrbitInfo info;
  info.delta = h[5] * h[7] - h[6] * h[6];
  info.delta1 = h[4] * h[6] - h[3] * h[7];
  info.delta2 = h[4] * h[5] - h[3] * h[6];
  std::vector<Rational> hr;
  hr.reserve(8);
  for (double v : h) hr.push_back(rational_from_double(v));
  info.dim = orbit_rank_exact(hr);
  return info;
}

OrbitChart orbit_chart(const std::array<double, 8>& h) {
  OrbitChart chart;
  chart.h6 = h[5];
  chart.h7 = h[6];
  chart.h8 = h[7];
  chart.delta = h[5] * h[7] - h[6] * h[6];
  if (chart.delta == 0) throw std::domain_error("orbit not 4-dimensional in this chart");
  std::vector<double> pt(h.begin(), h.end());
  chart.C = casimir_C().eval(std::span<const double>(pt));
  chart.elliptic = chart.delta > 0;
  return chart;
}

namespace {

AlgebraCheck check_poly(std::string bracket, std::string expected, const Poly& residual) {
  AlgebraCheck c;
  c.bracket = std::move(bracket);
  c.expected = std::move(expected);
  c.pass = residual.is_zero();
  c.residual = c.pass ? "0" : residual.str();
  return c;
}

}  // namespace

std::vector<AlgebraCheck> verify_casimirs() {
  std::vector<AlgebraCheck> out;
  const char* names[] = {"h6", "h7", "h8", "C"};
  auto cs = casimirs();
  for (std::size_t ci = 0; ci < cs.size(); ++ci)
    for (int j = 1; j <= 8; ++j)
      out.push_back(check_poly("{" + std::string(names[ci]) + ",h" + std::to_string(j) + "}", "0",
                               lp_bracket(cs[ci], hv(j))));
  return out;
}

std::vector<AlgebraCheck> verify_integral_algebra() {
  const GroupOps& ops = group_ops();
  std::vector<AlgebraCheck> out;
  for (int i = 1; i <= 8; ++i)
    out.push_back(check_poly("{H,g" + std::to_string(i) + "}", "0",
                             canonical_poisson(ops.H, ops.g[static_cast<std::size_t>(i) - 1])));
  out.push_back(check_poly("{H,h0}", "0", canonical_poisson(ops.H, ops.h0)));
  out.push_back(check_poly("{H,H}", "0", canonical_poisson(ops.H, ops.H)));

  const Poly& g4 = ops.g[3];
  const Poly& g5 = ops.g[4];
  const Poly& g6 = ops.g[5];
  const Poly& g7 = ops.g[6];
  const Poly& g8 = ops.g[7];
  out.push_back(check_poly("{h0,g4}", "g5", canonical_poisson(ops.h0, g4) - g5));
  out.push_back(check_poly("{h0,g5}", "-g4", canonical_poisson(ops.h0, g5) + g4));
  out.push_back(check_poly("{h0,g6}", "2 g7", canonical_poisson(ops.h0, g6) - Rational(2) * g7));
  out.push_back(check_poly("{h0,g7}", "g8 - g6", canonical_poisson(ops.h0, g7) - (g8 - g6)));
  out.push_back(check_poly("{h0,g8}", "-2 g7", canonical_poisson(ops.h0, g8) + Rational(2) * g7));
  out.push_back(check_poly("{h0,g3}", "0", canonical_poisson(ops.h0, ops.g[2])));

  // Abelian algebra spanned by H, g3..g8
  std::vector<std::pair<std::string, const Poly*>> a = {
      {"H", &ops.H},   {"g3", &ops.g[2]}, {"g4", &ops.g[3]}, {"g5", &ops.g[4]},
      {"g6", &ops.g[5]}, {"g7", &ops.g[6]}, {"g8", &ops.g[7]}};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      out.push_back(check_poly("{" + a[i].first + "," + a[j].first + "}", "0",
                               canonical_poisson(*a[i].second, *a[j].second)));
  return out;
}

std::vector<AlgebraCheck> verify_bracket_compatibility() {
  const GroupOps& ops = group_ops();
  std::vector<AlgebraCheck> out;
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      Poly residual = canonical_poisson(ops.h[static_cast<std::size_t>(i) - 1],
                                        ops.h[static_cast<std::size_t>(j) - 1]);
      for (const auto& [k, c] : ops.model.table.get(i, j))
        residual -= c * ops.h[static_cast<std::size_t>(k) - 1];
      out.push_back(check_poly("{h" + std::to_string(i) + ",h" + std::to_string(j) + "}",
                               "structure combination", residual));
    }
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int k, std::size_t nvars) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == nvars) {
      cur[var] = static_cast<std::uint32_t>(remaining);
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

Poly HomogeneousIntegrals::to_poly(const std::vector<Rational>& coeffs) const {
  std::map<Monomial, Rational> terms;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (coeffs[i] != 0) terms[monomials[i]] = coeffs[i];
  return Poly::from_terms(h_vars(), std::move(terms));
}

HomogeneousIntegrals homogeneous_integral_space(int k) {
  if (k < 1) throw std::invalid_argument("homogeneous_integral_space: k >= 1");
  HomogeneousIntegrals result;
  result.degree = k;
  result.monomials = monomials_of_degree(k, 8);
  const Poly H = vertical_H();

  // rows: monomials of degree k+1 in the bracket residuals
  std::map<Monomial, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> cols;
  for (const Monomial& m : result.monomials) {
    Poly pm = Poly::from_terms(h_vars(), {{m, Rational(1)}});
    Poly res = lp_bracket(H, pm);
    std::map<std::size_t, Rational> col;
    for (const auto& [mono, c] : res.terms()) {
      auto [it, inserted] = row_of.emplace(mono, row_of.size());
      col[it->second] = c;
    }
    cols.push_back(std::move(col));
  }
  RatMatrix a(row_of.size(), std::vector<Rational>(result.monomials.size(), Rational(0)));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) a[r][c] = v;
  result.basis = exact_nullspace(a);
  return result;
}

int jacobian_rank_at(const std::vector<Poly>& fs, std::span<const Rational> pt) {
  RatMatrix m;
  for (const Poly& f : fs) {
    std::vector<Rational> row;
    row.reserve(pt.size());
    for (std::size_t j = 0; j < pt.size(); ++j) row.push_back(f.derivative(j).eval(pt));
    m.push_back(std::move(row));
  }
  return exact_rank(m);
}

}  // namespace carnot
