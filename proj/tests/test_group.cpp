#include "carnot/group.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace carnot;

namespace {

std::vector<Rational> zeros(std::size_t n) { return std::vector<Rational>(n, Rational(0)); }

}  // namespace

TEST_CASE("third product coordinate carries the area term") {
  const GroupOps& ops = group_ops();
  const VarSetPtr& xy = ops.xy_vars;
  Poly x1 = Poly::variable(xy, "x1"), x2 = Poly::variable(xy, "x2");
  Poly x3 = Poly::variable(xy, "x3");
  Poly y1 = Poly::variable(xy, "y1"), y2 = Poly::variable(xy, "y2");
  Poly y3 = Poly::variable(xy, "y3");
  CHECK(ops.product[2] == x3 + y3 + Rational(1, 2) * (x1 * y2 - x2 * y1));
}

TEST_CASE("identity element") {
  const GroupOps& ops = group_ops();
  // z(x, 0) = x and z(0, y) = y, symbolically
  std::vector<Poly> x_images, y_images;
  for (std::size_t i = 0; i < 16; ++i) {
    Poly var = Poly::variable(ops.xy_vars, ops.xy_vars->name(i));
    x_images.push_back(i < 8 ? var : Poly::zero(ops.xy_vars));
    y_images.push_back(i < 8 ? Poly::zero(ops.xy_vars) : var);
  }
  for (int k = 0; k < 8; ++k) {
    Poly xk = Poly::variable(ops.xy_vars, "x" + std::to_string(k + 1));
    Poly yk = Poly::variable(ops.xy_vars, "y" + std::to_string(k + 1));
    CHECK(ops.product[static_cast<std::size_t>(k)].substitute(x_images) == xk);
    CHECK(ops.product[static_cast<std::size_t>(k)].substitute(y_images) == yk);
  }
}

TEST_CASE("product of the generators' unit translates") {
  auto e1 = zeros(8), e2 = zeros(8);
  e1[0] = 1;
  e2[1] = 1;
  auto z = group_product(e1, e2);
  CHECK(z[0] == 1);
  CHECK(z[1] == 1);
  CHECK(z[2] == Rational(1, 2));
}

TEST_CASE("associativity at random rational triples") {
  test::RationalSource src(12345);
  for (int rep = 0; rep < 100; ++rep) {
    auto a = src.point(8), b = src.point(8), c = src.point(8);
    auto ab_c = group_product(group_product(a, b), c);
    auto a_bc = group_product(a, group_product(b, c));
    CHECK(ab_c == a_bc);
  }
}

TEST_CASE("inversion") {
  const GroupOps& ops = group_ops();
  // product(x, inverse(x)) = 0 symbolically
  std::vector<Poly> images;
  for (std::size_t i = 0; i < 16; ++i) {
    if (i < 8)
      images.push_back(Poly::variable(ops.x_vars, ops.x_vars->name(i)));
    else
      images.push_back(ops.inverse.component(i - 8));
  }
  for (int k = 0; k < 8; ++k)
    CHECK(ops.product[static_cast<std::size_t>(k)].substitute(images).is_zero());

  // involution: inverse(inverse(x)) = x
  CHECK(ops.inverse.after(ops.inverse) == PolyMap::identity(ops.x_vars, 8));

  auto zero = zeros(8);
  CHECK(group_inverse(zero) == zero);

  // on the one-parameter subgroup through the first generator the inverse is
  // the time reversal, which here is plain negation: the subgroup point at
  // time 1 is (1, 0, 0, 0, -1/6, 0, 0, 0)
  auto gamma1 = zeros(8);
  gamma1[0] = 1;
  gamma1[4] = Rational(-1, 6);
  std::vector<Rational> neg;
  for (const auto& v : gamma1) neg.push_back(-v);
  CHECK(group_inverse(gamma1) == neg);

  test::RationalSource src(5150);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = src.point(8);
    CHECK(group_product(x, group_inverse(x)) == zero);
    CHECK(group_inverse(group_inverse(x)) == x);
  }
}

TEST_CASE("derived product equals pointwise flow composition") {
  test::RationalSource src(777);
  for (int rep = 0; rep < 100; ++rep) {
    auto a = src.point(8), b = src.point(8);
    CHECK(group_product(a, b) == flow_composition_product(a, b));
  }
}

TEST_CASE("right-invariant frame") {
  const GroupOps& ops = group_ops();
  const VarSetPtr& vs = ops.x_vars;

  // Y_i = -d/dx_i for i = 3..8
  for (int i = 3; i <= 8; ++i) {
    const VecField& y = ops.right[static_cast<std::size_t>(i) - 1];
    for (int k = 0; k < 8; ++k) {
      Poly expect = (k == i - 1) ? Poly::constant(vs, Rational(-1)) : Poly::zero(vs);
      CHECK(y.component(static_cast<std::size_t>(k)) == expect);
    }
  }

  // Y_j(0) = -X_j(0)
  auto origin = zeros(8);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      CHECK(ops.right[static_cast<std::size_t>(j)].component(static_cast<std::size_t>(k)).eval(origin) ==
            -ops.model.basis[static_cast<std::size_t>(j)].component(static_cast<std::size_t>(k)).eval(origin));

  // same multiplication table: [Y_i, Y_j] = sum c^k_{ij} Y_k
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      VecField residual = lie_bracket(ops.right[static_cast<std::size_t>(i) - 1],
                                      ops.right[static_cast<std::size_t>(j) - 1]);
      for (const auto& [k, c] : ops.model.table.get(i, j))
        residual -= c * ops.right[static_cast<std::size_t>(k) - 1];
      CHECK(residual.is_zero());
    }

  // left- and right-invariant fields commute: [X_i, Y_j] = 0
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(lie_bracket(ops.model.basis[static_cast<std::size_t>(i)],
                        ops.right[static_cast<std::size_t>(j)])
                .is_zero());
}

TEST_CASE("left translations preserve the frame") {
  const GroupOps& ops = group_ops();
  PolyMap L = left_translation();
  PolyMap Linv = left_translation_inverse();
  CHECK(L.after(Linv) == PolyMap::identity(L.varset(), 8));
  for (int i = 0; i < 8; ++i) {
    VecField xi = ops.model.basis[static_cast<std::size_t>(i)].extend(L.varset());
    CHECK(pushforward(xi, L, Linv) == xi);
  }
}

TEST_CASE("fiber-linear Hamiltonians") {
  const GroupOps& ops = group_ops();
  const VarSetPtr& ph = ops.phase_vars;
  auto x = [&](int i) { return Poly::variable(ph, "x" + std::to_string(i)); };
  auto psi = [&](int i) { return Poly::variable(ph, "psi" + std::to_string(i)); };
  auto c = [&](long long n, long long d = 1) { return Poly::constant(ph, Rational(n, d)); };

  CHECK(ops.h[3] == psi(4) + x(1) * psi(6) + x(2) * psi(7));
  for (int i = 6; i <= 8; ++i) CHECK(ops.h[static_cast<std::size_t>(i) - 1] == psi(i));
  CHECK(ops.h[0] == psi(1) - c(1, 2) * x(2) * psi(3) -
                        c(1, 2) * (x(1) * x(1) + x(2) * x(2)) * psi(5) -
                        c(1, 4) * x(1) * x(2) * x(2) * psi(7) - c(1, 6) * x(2).pow(3) * psi(8));
  for (int i = 3; i <= 8; ++i) CHECK(ops.g[static_cast<std::size_t>(i) - 1] == -psi(i));

  // fiber-degree invariants: linear in psi
  for (const Poly& f : ops.h) {
    for (const auto& [m, coef] : f.terms()) {
      int psi_deg = 0;
      for (std::size_t v = 8; v < 16; ++v) psi_deg += static_cast<int>(m[v]);
      CHECK(psi_deg == 1);
    }
  }
}

TEST_CASE("canonical bracket reproduces the structure constants") {
  const GroupOps& ops = group_ops();
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      Poly expect = Poly::zero(ops.phase_vars);
      for (const auto& [k, c] : ops.model.table.get(i, j))
        expect += c * ops.h[static_cast<std::size_t>(k) - 1];
      CHECK(canonical_poisson(ops.h[static_cast<std::size_t>(i) - 1],
                              ops.h[static_cast<std::size_t>(j) - 1]) == expect);
    }
}
