#include "carnot/group.hpp"

#include <stdexcept>

namespace carnot {

namespace {

// Indices of a variable block within a varset.
std::size_t var_index(const VarSetPtr& vs, const std::string& name) {
  auto idx = vs->index(name);
  if (!idx) throw std::logic_error("group derivation: missing variable " + name);
  return *idx;
}

// Solve a graded-triangular system eq_k(u_1..u_k) = rhs_k for u over the rhs
// variables: eq_k must be u_k plus terms in u_1..u_{k-1} only.
std::vector<Poly> solve_triangular(const std::vector<Poly>& eqs, const VarSetPtr& eq_vars,
                                   const std::string& unknown_prefix, const VarSetPtr& rhs_vars,
                                   const std::string& rhs_prefix,
                                   const std::vector<Poly>& fixed_images) {
  const int n = static_cast<int>(eqs.size());
  std::vector<Poly> solved;
  solved.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const Poly& eq = eqs[static_cast<std::size_t>(k) - 1];
    const std::size_t uk = var_index(eq_vars, unknown_prefix + std::to_string(k));
    for (int j = k; j <= n; ++j) {
      const std::size_t uj = var_index(eq_vars, unknown_prefix + std::to_string(j));
      const int expected = (j == k) ? 1 : 0;
      if (eq.degree_in(uj) != expected)
        throw std::logic_error("group derivation: system is not graded-triangular");
    }
    Monomial unit(eq_vars->size(), 0);
    unit[uk] = 1;
    if (eq.coefficient(unit) != 1)
      throw std::logic_error("group derivation: unknown does not enter with unit coefficient");

    // images: fixed block as given, solved unknowns substituted
    std::vector<Poly> images = fixed_images;
    for (int j = 1; j < k; ++j)
      images[var_index(eq_vars, unknown_prefix + std::to_string(j))] =
          solved[static_cast<std::size_t>(j) - 1];
    Poly rest = eq;
    rest -= Poly::variable(eq_vars, unknown_prefix + std::to_string(k));
    if (rest.degree_in(uk) != 0)
      throw std::logic_error("group derivation: unknown enters nonlinearly");
    solved.push_back(Poly::variable(rhs_vars, rhs_prefix + std::to_string(k)) -
                     rest.substitute(images));
  }
  return solved;
}

GroupOps derive() {
  GroupOps ops;
  ops.model = symmetric_model();
  ops.x_vars = ops.model.basis[0].varset();
  const VarSetPtr t_vars = prefixed_vars("t", 8);
  const VarSetPtr y_vars = prefixed_vars("y", 8);
  const VarSetPtr xt = concat_varsets(*ops.x_vars, *t_vars);
  ops.xy_vars = concat_varsets(*ops.x_vars, *y_vars);

  // composed flow map: apply e^{t1 X1} first, e^{t8 X8} last
  PolyMap M = flow(ops.model.basis[0], Poly::variable(xt, "t1"));
  for (int i = 2; i <= 8; ++i)
    M = flow(ops.model.basis[static_cast<std::size_t>(i) - 1],
             Poly::variable(xt, "t" + std::to_string(i)))
            .after(M);

  // flow times of y: solve M(0; t) = y, triangular by the grading
  std::vector<Poly> at_origin;
  {
    std::vector<Poly> images(xt->size(), Poly::zero(xt));
    for (std::size_t i = 0; i < 16; ++i)
      images[i] = (i < 8) ? Poly::zero(xt) : Poly::variable(xt, xt->name(i));
    for (int k = 0; k < 8; ++k) at_origin.push_back(M.component(k).substitute(images));
  }
  std::vector<Poly> tau;
  {
    std::vector<Poly> fixed(xt->size(), Poly::zero(y_vars));
    tau = solve_triangular(at_origin, xt, "t", y_vars, "y", fixed);
  }

  // product: substitute t -> tau(y) into M, keeping x symbolic
  {
    std::vector<Poly> images(xt->size(), Poly::zero(ops.xy_vars));
    for (std::size_t i = 0; i < 8; ++i)
      images[i] = Poly::variable(ops.xy_vars, ops.x_vars->name(i));
    for (std::size_t i = 0; i < 8; ++i) images[8 + i] = tau[i].extend(ops.xy_vars);
    for (int k = 0; k < 8; ++k) ops.product.push_back(M.component(k).substitute(images));
  }

  // inversion: solve z(x, w) = 0 for w, again triangular in the y-block
  {
    std::vector<Poly> fixed(ops.xy_vars->size(), Poly::zero(ops.x_vars));
    for (std::size_t i = 0; i < 8; ++i)
      fixed[i] = Poly::variable(ops.x_vars, ops.x_vars->name(i));
    std::vector<Poly> w;
    for (int k = 1; k <= 8; ++k) {
      const Poly& eq = ops.product[static_cast<std::size_t>(k) - 1];
      const std::size_t yk = var_index(ops.xy_vars, "y" + std::to_string(k));
      for (int j = k + 1; j <= 8; ++j) {
        const std::size_t yj = var_index(ops.xy_vars, "y" + std::to_string(j));
        if (eq.degree_in(yj) != 0)
          throw std::logic_error("group derivation: inversion system not triangular");
      }
      Monomial unit(ops.xy_vars->size(), 0);
      unit[yk] = 1;
      if (eq.coefficient(unit) != 1)
        throw std::logic_error("group derivation: inversion unknown not unit");
      std::vector<Poly> images = fixed;
      for (int j = 1; j < k; ++j)
        images[var_index(ops.xy_vars, "y" + std::to_string(j))] = w[static_cast<std::size_t>(j) - 1];
      Poly rest = eq;
      rest -= Poly::variable(ops.xy_vars, "y" + std::to_string(k));
      if (rest.degree_in(yk) != 0)
        throw std::logic_error("group derivation: inversion unknown enters nonlinearly");
      w.push_back(-rest.substitute(images));
    }
    ops.inverse = PolyMap(std::move(w), 8);
  }

  // right-invariant frame: pushforward of X_i under the inversion involution
  for (int i = 0; i < 8; ++i)
    ops.right.push_back(pushforward(ops.model.basis[static_cast<std::size_t>(i)], ops.inverse,
                                    ops.inverse));

  // fiber-linear Hamiltonians on T*G
  ops.phase_vars = concat_varsets(*ops.x_vars, *prefixed_vars("psi", 8));
  auto pairing = [&](const VecField& v) {
    Poly acc = Poly::zero(ops.phase_vars);
    for (std::size_t j = 0; j < 8; ++j) {
      if (v.component(j).is_zero()) continue;
      acc += v.component(j).extend(ops.phase_vars) *
             Poly::variable(ops.phase_vars, "psi" + std::to_string(j + 1));
    }
    return acc;
  };
  for (const auto& f : ops.model.basis) ops.h.push_back(pairing(f));
  for (const auto& f : ops.right) ops.g.push_back(pairing(f));
  ops.h0 = pairing(symmetry_field());
  ops.H = Rational(1, 2) * (ops.h[0] * ops.h[0] + ops.h[1] * ops.h[1]);
  return ops;
}

}  // namespace

const GroupOps& group_ops() {
  static const GroupOps ops = derive();
  return ops;
}

std::vector<Rational> group_product(std::span<const Rational> a, std::span<const Rational> b) {
  const GroupOps& ops = group_ops();
  std::vector<Rational> pt(a.begin(), a.end());
  pt.insert(pt.end(), b.begin(), b.end());
  std::vector<Rational> out;
  out.reserve(8);
  for (const Poly& z : ops.product) out.push_back(z.eval(pt));
  return out;
}

std::vector<Rational> group_inverse(std::span<const Rational> a) {
  return group_ops().inverse.eval(a);
}

std::array<double, 8> group_product(const std::array<double, 8>& a, const std::array<double, 8>& b) {
  const GroupOps& ops = group_ops();
  std::vector<double> pt(a.begin(), a.end());
  pt.insert(pt.end(), b.begin(), b.end());
  std::array<double, 8> out{};
  for (int k = 0; k < 8; ++k) out[static_cast<std::size_t>(k)] = ops.product[static_cast<std::size_t>(k)].eval(std::span<const double>(pt));
  return out;
}

std::array<double, 8> group_inverse(const std::array<double, 8>& a) {
  const GroupOps& ops = group_ops();
  std::array<double, 8> out{};
  std::span<const double> pt(a);
  for (int k = 0; k < 8; ++k) out[static_cast<std::size_t>(k)] = ops.inverse.component(k).eval(pt);
  return out;
}

std::vector<Rational> flow_composition_product(std::span<const Rational> a,
                                               std::span<const Rational> b) {
  const GroupOps& ops = group_ops();
  const VarSetPtr& vs = ops.x_vars;

  // flow for time "s" of each frame field, evaluated pointwise
  static const std::vector<PolyMap> flows = [&] {
    const VarSetPtr xs = concat_varsets(*vs, *make_varset({"s"}));
    std::vector<PolyMap> f;
    for (const auto& field : group_ops().model.basis)
      f.push_back(flow(field, Poly::variable(xs, "s")));
    return f;
  }();

  auto apply_flow = [&](int i, const Rational& s, std::vector<Rational> p) {
    p.push_back(s);
    return flows[static_cast<std::size_t>(i)].eval(p);
  };

  // solve e^{t8 X8} ... e^{t1 X1}(0) = b one coordinate at a time: after
  // applying the first k flows, coordinate k is final and equals b_k + linear
  // shift in t_k
  std::vector<Rational> tau(8);
  for (int k = 0; k < 8; ++k) {
    std::vector<Rational> p(8, Rational(0));
    for (int i = 0; i < k; ++i) p = apply_flow(i, tau[static_cast<std::size_t>(i)], p);
    // coordinate k after flow k with time t: p_k + t (unit coefficient)
    tau[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] - p[static_cast<std::size_t>(k)];
  }
  std::vector<Rational> out(a.begin(), a.end());
  for (int i = 0; i < 8; ++i) out = apply_flow(i, tau[static_cast<std::size_t>(i)], out);
  return out;
}

Poly canonical_poisson(const Poly& f, const Poly& g) {
  const VarSetPtr& vs = f.varset();
  if (vs->size() != 16)
    throw std::invalid_argument("canonical_poisson: expected (x, psi) phase variables");
  Poly acc = Poly::zero(vs);
  for (std::size_t i = 0; i < 8; ++i) {
    Poly fp = f.derivative(8 + i);
    Poly gx = g.derivative(i);
    if (!fp.is_zero() && !gx.is_zero()) acc += fp * gx;
    Poly fx = f.derivative(i);
    Poly gp = g.derivative(8 + i);
    if (!fx.is_zero() && !gp.is_zero()) acc -= fx * gp;
  }
  return acc;
}

PolyMap left_translation() {
  const GroupOps& ops = group_ops();
  static const PolyMap map = [&] {
    const VarSetPtr xa = concat_varsets(*ops.x_vars, *prefixed_vars("a", 8));
    // z(a, x): left factor a symbolic parameters, right factor the coordinates
    std::vector<Poly> images(ops.xy_vars->size(), Poly::zero(xa));
    for (std::size_t i = 0; i < 8; ++i) {
      images[i] = Poly::variable(xa, "a" + std::to_string(i + 1));      // x-slot <- a
      images[8 + i] = Poly::variable(xa, "x" + std::to_string(i + 1));  // y-slot <- x
    }
    std::vector<Poly> comps;
    for (const Poly& z : ops.product) comps.push_back(z.substitute(images));
    return PolyMap(std::move(comps), 8);
  }();
  return map;
}

PolyMap left_translation_inverse() {
  const GroupOps& ops = group_ops();
  static const PolyMap map = [&] {
    const VarSetPtr xa = concat_varsets(*ops.x_vars, *prefixed_vars("a", 8));
    // z(a^{-1}, x)
    std::vector<Poly> ainv;
    {
      std::vector<Poly> images(8, Poly::zero(xa));
      for (std::size_t i = 0; i < 8; ++i)
        images[i] = Poly::variable(xa, "a" + std::to_string(i + 1));
      for (int k = 0; k < 8; ++k) ainv.push_back(ops.inverse.component(k).substitute(images));
    }
    std::vector<Poly> images(ops.xy_vars->size(), Poly::zero(xa));
    for (std::size_t i = 0; i < 8; ++i) {
      images[i] = ainv[i];
      images[8 + i] = Poly::variable(xa, "x" + std::to_string(i + 1));
    }
    std::vector<Poly> comps;
    for (const Poly& z : ops.product) comps.push_back(z.substitute(images));
    return PolyMap(std::move(comps), 8);
  }();
  return map;
}

}  // namespace carnot
