#include "carnot/models.hpp"
#include "carnot/vecfield.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

#include "test_util.hpp"

using namespace carnot;

namespace {

Poly xv(const VarSetPtr& vs, int i) { return Poly::variable(vs, "x" + std::to_string(i)); }

// Plain RK4 at fixed step: the independent oracle for exact flows.
template <typename Rhs>
std::array<double, 8> rk4(Rhs rhs, std::array<double, 8> y, double T, int steps) {
  const double h = T / steps;
  for (int s = 0; s < steps; ++s) {
    auto k1 = rhs(y);
    std::array<double, 8> y2;
    for (int i = 0; i < 8; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
    auto k2 = rhs(y2);
    for (int i = 0; i < 8; ++i) y2[i] = y[i] + 0.5 * h * k2[i];
    auto k3 = rhs(y2);
    for (int i = 0; i < 8; ++i) y2[i] = y[i] + h * k3[i];
    auto k4 = rhs(y2);
    for (int i = 0; i < 8; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return y;
}

}  // namespace

TEST_CASE("bracket on simple planar fields") {
  auto vs = prefixed_vars("x", 2);
  VecField v({Poly::constant(vs, Rational(1)), Poly::zero(vs)}, 2);           // d/dx1
  VecField w({Poly::zero(vs), xv(vs, 1)}, 2);                                 // x1 d/dx2
  VecField b = lie_bracket(v, w);
  CHECK(b.component(0).is_zero());
  CHECK(b.component(1) == Poly::constant(vs, Rational(1)));
  CHECK((lie_bracket(w, v) + b).is_zero());  // antisymmetry
}

TEST_CASE("bracket dimension mismatch is rejected") {
  auto vs2 = prefixed_vars("x", 2);
  auto vs3 = prefixed_vars("x", 3);
  VecField v({Poly::constant(vs2, Rational(1)), Poly::zero(vs2)}, 2);
  VecField w({Poly::zero(vs3), Poly::zero(vs3), xv(vs3, 1)}, 3);
  CHECK_THROWS_AS(lie_bracket(v, w), std::invalid_argument);
}

TEST_CASE("flow of a constant field is a translation") {
  auto model = symmetric_model();
  auto vs = model.basis[0].varset();
  auto big = concat_varsets(*vs, *make_varset({"t"}));
  Poly t = Poly::variable(big, "t");
  PolyMap f = flow(model.basis[5], t);  // X6 = d/dx6
  for (int i = 0; i < 8; ++i) {
    Poly expect = Poly::variable(big, "x" + std::to_string(i + 1));
    if (i == 5) expect += t;
    CHECK(f.component(i) == expect);
  }
}

TEST_CASE("flow of the first generator through the origin") {
  auto model = symmetric_model();
  auto vs = model.basis[0].varset();
  auto big = concat_varsets(*vs, *make_varset({"t"}));
  PolyMap f = flow(model.basis[0], Poly::variable(big, "t"));

  std::vector<Rational> pt(9, Rational(0));
  pt[8] = Rational(1);  // t = 1
  auto img = f.eval(std::span<const Rational>(pt));
  CHECK(img[0] == 1);
  CHECK(img[1] == 0);
  CHECK(img[2] == 0);
  CHECK(img[3] == 0);
  CHECK(img[4] == Rational(-1, 6));
  CHECK(img[5] == 0);
  CHECK(img[6] == 0);
  CHECK(img[7] == 0);

  // independent oracle: high-order numeric solve of qdot = X1(q) to t = 1
  auto rhs = [&](const std::array<double, 8>& q) {
    std::array<double, 8> d{};
    std::vector<double> p(q.begin(), q.end());
    for (int i = 0; i < 8; ++i) d[i] = model.basis[0].component(i).eval(std::span<const double>(p));
    return d;
  };
  auto num = rk4(rhs, std::array<double, 8>{}, 1.0, 4000);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(num[i] - to_double(img[i])) < 1e-12);
}

TEST_CASE("one-parameter group law of flows") {
  auto model = symmetric_model();
  auto vs = model.basis[0].varset();
  auto big = concat_varsets(*vs, *make_varset({"s", "t"}));
  Poly s = Poly::variable(big, "s"), t = Poly::variable(big, "t");
  PolyMap fs = flow(model.basis[1], s);
  PolyMap ft = flow(model.basis[1], t);
  PolyMap fst = flow(model.basis[1], s + t);
  CHECK(fs.after(ft) == fst);

  test::RationalSource src(7);
  Rational rs = src.next(), rt = src.next();
  PolyMap g = flow(model.basis[1], Poly::constant(vs, rs) + Poly::constant(vs, Rational(0)));
  CHECK(g.dim() == 8);
  PolyMap a = flow(model.basis[1], rs);
  PolyMap b = flow(model.basis[1], rt);
  PolyMap ab = flow(model.basis[1], rs + rt);
  CHECK(a.after(b) == ab);
}

TEST_CASE("flow degree in t stays within the step bound") {
  auto model = symmetric_model();
  auto vs = model.basis[0].varset();
  auto big = concat_varsets(*vs, *make_varset({"t"}));
  Poly t = Poly::variable(big, "t");
  std::size_t t_index = 8;
  for (const auto& field : model.basis) {
    PolyMap f = flow(field, t);
    for (int i = 0; i < 8; ++i) CHECK(f.component(i).degree_in(t_index) <= 4);
  }
}

TEST_CASE("non-nilpotent field is detected") {
  auto vs = prefixed_vars("x", 1);
  VecField v({xv(vs, 1)}, 1);  // x1 d/dx1: Lie series never terminates
  auto big = concat_varsets(*vs, *make_varset({"t"}));
  CHECK_THROWS_AS(flow(v, Poly::variable(big, "t")), std::domain_error);
}

TEST_CASE("pushforward under a polynomial involution") {
  // F(x1, x2) = (-x1, -x2 + x1^2) is an involution; conjugating the flow of
  // d/dx1 by hand gives t -> (x1 - t, x2 - 2 t x1 + t^2).
  auto vs = prefixed_vars("x", 2);
  Poly x1 = xv(vs, 1), x2 = xv(vs, 2);
  PolyMap F({-x1, -x2 + x1 * x1}, 2);
  CHECK(F.after(F) == PolyMap::identity(vs, 2));
  VecField v({Poly::constant(vs, Rational(1)), Poly::zero(vs)}, 2);
  VecField pushed = pushforward(v, F, F);
  CHECK(pushed.component(0) == Poly::constant(vs, Rational(-1)));
  CHECK(pushed.component(1) == Rational(-2) * x1);
}
