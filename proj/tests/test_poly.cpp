#include "carnot/linalg.hpp"
#include "carnot/poly.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace carnot;

namespace {

Poly v(const VarSetPtr& vs, const char* name) { return Poly::variable(vs, name); }

}  // namespace

TEST_CASE("difference of squares") {
  auto vs = prefixed_vars("x", 2);
  Poly x1 = v(vs, "x1"), x2 = v(vs, "x2");
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
}

TEST_CASE("additive inverse gives the empty term map") {
  auto vs = prefixed_vars("x", 3);
  Poly p = v(vs, "x1") * v(vs, "x2") + Poly::constant(vs, Rational(7, 3)) * v(vs, "x3").pow(2);
  Poly z = p - p;
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(z == Poly::zero(vs));
}

TEST_CASE("fractional coefficient product, cross-checked by evaluation") {
  auto vs = prefixed_vars("x", 2);
  Poly p = Poly::constant(vs, Rational(1, 2)) * v(vs, "x1").pow(2);
  Poly q = v(vs, "x2");
  Poly pq = p * q;
  REQUIRE(pq.terms().size() == 1);
  CHECK(pq.coefficient({2, 1}) == Rational(1, 2));

  test::RationalSource src(20240501);
  for (int i = 0; i < 20; ++i) {
    auto pt = src.point(2);
    CHECK(pq.eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("varset mismatch is rejected") {
  auto a = prefixed_vars("x", 2);
  auto b = prefixed_vars("y", 2);
  Poly pa = v(a, "x1");
  Poly pb = v(b, "y1");
  CHECK_THROWS_AS(pa + pb, std::invalid_argument);
  CHECK_THROWS_AS(pa * pb, std::invalid_argument);
}

TEST_CASE("canonical form drops cancelled terms") {
  auto vs = prefixed_vars("x", 2);
  Poly x1 = v(vs, "x1"), x2 = v(vs, "x2");
  Poly p = x1 * x2 + x2 * x2;
  Poly q = -(x1 * x2) + x2;
  Poly s = p + q;
  for (const auto& [m, c] : s.terms()) CHECK(c != 0);
  CHECK(s == x2 * x2 + x2);
}

TEST_CASE("evaluation is a ring homomorphism at random rational points") {
  auto vs = prefixed_vars("x", 3);
  test::RationalSource src(42);
  auto random_poly = [&](int terms) {
    Poly p = Poly::zero(vs);
    for (int t = 0; t < terms; ++t) {
      Poly term = Poly::constant(vs, src.next());
      for (int var = 1; var <= 3; ++var) {
        int e = static_cast<int>(to_double(src.next()));
        for (int k = 0; k < std::abs(e) % 3; ++k)
          term = term * v(vs, ("x" + std::to_string(var)).c_str());
      }
      p += term;
    }
    return p;
  };
  for (int rep = 0; rep < 10; ++rep) {
    Poly p = random_poly(4), q = random_poly(3);
    auto pt = src.point(3);
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
  }
}

TEST_CASE("derivative and substitution") {
  auto vs = prefixed_vars("x", 2);
  Poly x1 = v(vs, "x1"), x2 = v(vs, "x2");
  Poly p = Poly::constant(vs, Rational(1, 2)) * x1.pow(2) * x2;
  CHECK(p.derivative("x1") == x1 * x2);
  CHECK(p.derivative("x2") == Poly::constant(vs, Rational(1, 2)) * x1.pow(2));

  // substitute x1 -> y1 + y2, x2 -> y1 over a fresh varset
  auto ys = prefixed_vars("y", 2);
  Poly y1 = v(ys, "y1"), y2 = v(ys, "y2");
  Poly img = p.substitute({y1 + y2, y1});
  Poly expect = Poly::constant(ys, Rational(1, 2)) * (y1 + y2).pow(2) * y1;
  CHECK(img == expect);
}

TEST_CASE("extend re-indexes onto a superset varset") {
  auto vs = prefixed_vars("x", 2);
  auto big = make_varset({"x1", "x2", "t1"});
  Poly p = v(vs, "x1") * v(vs, "x2");
  Poly q = p.extend(big);
  CHECK(q.coefficient({1, 1, 0}) == 1);
  CHECK(q.total_degree() == 2);
}

TEST_CASE("canonical text form") {
  auto vs = prefixed_vars("x", 2);
  Poly x1 = v(vs, "x1"), x2 = v(vs, "x2");
  Poly p = Poly::constant(vs, Rational(-1, 2)) * x1.pow(2) + x2;
  CHECK(p.str() == "-1/2 * x1^2 + 1 * x2");
  CHECK(Poly::zero(vs).str() == "0");
}

TEST_CASE("exact rank and nullspace") {
  RatMatrix a = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(exact_rank(a) == 1);
  auto ns = exact_nullspace(a);
  REQUIRE(ns.size() == 1);
  // null vector proportional to (-2, 1)
  CHECK(ns[0][0] * Rational(1) == -Rational(2) * ns[0][1]);

  RatMatrix b = {{Rational(1, 2), Rational(0), Rational(1)},
                 {Rational(0), Rational(3), Rational(0)},
                 {Rational(1), Rational(1), Rational(1)}};
  CHECK(exact_rank(b) == 3);
  CHECK(exact_nullspace(b).empty());

  // 2x4, rank 2, nullity 2; check A x = 0 exactly for every basis vector
  RatMatrix c = {{Rational(1), Rational(1), Rational(1), Rational(1)},
                 {Rational(1), Rational(-1), Rational(2), Rational(1, 3)}};
  auto ns2 = exact_nullspace(c);
  REQUIRE(ns2.size() == 2);
  for (const auto& x : ns2) {
    for (const auto& row : c) {
      Rational s(0);
      for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
      CHECK(s == 0);
    }
  }
}
