#include "carnot/hall.hpp"

#include <stdexcept>

namespace carnot {

long long dim_component(int d, int i) {
  if (d < 1 || i < 1) throw std::invalid_argument("dim_component: d >= 1, i >= 1 required");
  long long pw = 1;
  for (int k = 0; k < i; ++k) pw *= d;
  long long s = 0;
  for (int j = 1; j < i; ++j)
    if (i % j == 0) s += static_cast<long long>(j) * dim_component(d, j);
  return (pw - s) / i;
}

long long dim_cumulative(int d, int r) {
  long long s = 0;
  for (int i = 1; i <= r; ++i) s += dim_component(d, i);
  return s;
}

std::vector<HallElement> hall_basis(int step) {
  if (step < 1) throw std::invalid_argument("hall_basis: step >= 1 required");
  std::vector<HallElement> basis;
  basis.push_back({1, 1, 0, 1});
  basis.push_back({2, 1, 0, 2});
  for (int p = 2; p <= step; ++p) {
    const std::size_t existing = basis.size();
    for (std::size_t i = 0; i < existing; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const HallElement& e = basis[i];
        const HallElement& f = basis[j];
        if (e.degree + f.degree != p) continue;
        // Hall admissibility: E > F, and for E = [G,K] also K <= F in the
        // total element order (degree first, then creation index).
        if (!e.is_generator() && e.right > f.index) continue;
        basis.push_back({static_cast<int>(basis.size()) + 1, p, e.index, f.index});
      }
    }
  }
  return basis;
}

std::string hall_bracket_string(const std::vector<HallElement>& basis, int index) {
  const HallElement& e = basis[static_cast<std::size_t>(index) - 1];
  if (e.is_generator()) return "H" + std::to_string(e.right);
  return "[" + hall_bracket_string(basis, e.left) + "," + hall_bracket_string(basis, e.right) + "]";
}

namespace {

// Highest power of variable `j` dividing p (0 for the zero polynomial).
int dividing_degree(const Poly& p, std::size_t j) {
  if (p.is_zero()) return 0;
  int d = -1;
  for (const auto& [m, c] : p.terms()) {
    int e = static_cast<int>(m[j]);
    d = (d < 0) ? e : std::min(d, e);
  }
  return d;
}

}  // namespace

GGFrame gg_frame(int step) {
  GGFrame frame;
  frame.step = step;
  frame.basis = hall_basis(step);
  frame.dim = static_cast<int>(frame.basis.size());
  const VarSetPtr vs = prefixed_vars("x", frame.dim);

  // Correction monomials of the second generator field, one per bracket
  // element. The recursion steps from the left parent: for H_k = [H_i, H_j],
  //   P_k = sign(deg H_i) * x_j * P_i / (dividing_degree_j(P_i) + 1),
  // seeded with P_2 = 1, sign(D) = (-1)^D. This reproduces the step-4 frame
  // exactly; the bracket-table test is the authority on the convention.
  std::vector<Poly> P(static_cast<std::size_t>(frame.dim) + 1, Poly::zero(vs));
  P[2] = Poly::constant(vs, Rational(1));
  frame.descent_monomials.assign(static_cast<std::size_t>(frame.dim) + 1, Poly::zero(vs));
  for (const HallElement& e : frame.basis) {
    if (e.is_generator()) continue;
    const Poly& pi = P[static_cast<std::size_t>(e.left)];
    const std::size_t j = static_cast<std::size_t>(e.right) - 1;
    const int left_degree = frame.basis[static_cast<std::size_t>(e.left) - 1].degree;
    Rational sign = (left_degree % 2 == 0) ? Rational(1) : Rational(-1);
    Rational scale = sign / Rational(dividing_degree(pi, j) + 1);
    P[static_cast<std::size_t>(e.index)] = scale * (Poly::variable(vs, vs->name(j)) * pi);
    frame.descent_monomials[static_cast<std::size_t>(e.index)] =
        P[static_cast<std::size_t>(e.index)];
  }

  auto basis_field = [&](int generator) {
    std::vector<Poly> comps(static_cast<std::size_t>(frame.dim), Poly::zero(vs));
    comps[static_cast<std::size_t>(generator) - 1] = Poly::constant(vs, Rational(1));
    return comps;
  };

  std::vector<Poly> h2 = basis_field(2);
  for (const HallElement& e : frame.basis)
    if (!e.is_generator()) h2[static_cast<std::size_t>(e.index) - 1] = P[static_cast<std::size_t>(e.index)];

  frame.fields.reserve(static_cast<std::size_t>(frame.dim));
  frame.fields.emplace_back(basis_field(1), static_cast<std::size_t>(frame.dim));
  frame.fields.emplace_back(std::move(h2), static_cast<std::size_t>(frame.dim));
  for (const HallElement& e : frame.basis) {
    if (e.is_generator()) continue;
    frame.fields.push_back(lie_bracket(frame.fields[static_cast<std::size_t>(e.left) - 1],
                                       frame.fields[static_cast<std::size_t>(e.right) - 1]));
  }
  return frame;
}

int weighted_degree(const Poly& p, const std::vector<int>& weights) {
  if (p.is_zero()) return -1;
  int deg = -1;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * weights[i];
    deg = std::max(deg, d);
  }
  return deg;
}

bool is_weight_homogeneous(const Poly& p, const std::vector<int>& weights, int degree) {
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * weights[i];
    if (d != degree) return false;
  }
  return true;
}

}  // namespace carnot
