#include "carnot/models.hpp"

#include "carnot/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace carnot {

void StructureTable::set(int i, int j, std::vector<std::pair<int, Rational>> combo) {
  if (i >= j) throw std::invalid_argument("StructureTable::set: require i < j");
  entries_[{i, j}] = std::move(combo);
}

std::vector<std::pair<int, Rational>> StructureTable::get(int i, int j) const {
  const bool flip = i > j;
  auto it = entries_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == entries_.end()) return {};
  auto combo = it->second;
  if (flip)
    for (auto& [k, c] : combo) c = -c;
  return combo;
}

StructureTable carnot_2358_table() {
  StructureTable t;
  t.set(1, 2, {{3, Rational(1)}});
  t.set(1, 3, {{4, Rational(1)}});
  t.set(2, 3, {{5, Rational(1)}});
  t.set(1, 4, {{6, Rational(1)}});
  t.set(1, 5, {{7, Rational(1)}});
  t.set(2, 4, {{7, Rational(1)}});
  t.set(2, 5, {{8, Rational(1)}});
  return t;
}

namespace {

const VarSetPtr& x8_vars() {
  static const VarSetPtr vs = prefixed_vars("x", 8);
  return vs;
}

Poly xv(int i) { return Poly::variable(x8_vars(), "x" + std::to_string(i)); }
Poly xc(long long num, long long den = 1) {
  return Poly::constant(x8_vars(), Rational(num, den));
}

VecField field_from(const std::map<int, Poly>& comps) {
  std::vector<Poly> c(8, Poly::zero(x8_vars()));
  for (const auto& [i, p] : comps) c[static_cast<std::size_t>(i) - 1] = p;
  return VecField(std::move(c), 8);
}

std::string combo_string(const std::vector<std::pair<int, Rational>>& combo,
                         const std::string& symbol) {
  if (combo.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : combo) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << to_string(a) << " ";
    os << symbol << k;
    first = false;
  }
  return os.str();
}

std::string model_symbol(const LieAlgebraModel& model) {
  return model.name == "asymmetric" ? "H" : "X";
}

// Abstract bracket in coordinates over the model basis.
std::vector<Rational> abstract_bracket(const StructureTable& t, const std::vector<Rational>& u,
                                       const std::vector<Rational>& v) {
  std::vector<Rational> w(u.size(), Rational(0));
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b] == 0 || a == b) continue;
      for (const auto& [k, c] : t.get(static_cast<int>(a) + 1, static_cast<int>(b) + 1))
        w[static_cast<std::size_t>(k) - 1] += u[a] * v[b] * c;
    }
  }
  return w;
}

}  // namespace

LieAlgebraModel symmetric_model() {
  LieAlgebraModel m;
  m.name = "symmetric";
  m.table = carnot_2358_table();
  Poly half_r2 = xc(1, 2) * (xv(1) * xv(1) + xv(2) * xv(2));
  m.basis.push_back(field_from({{1, xc(1)},
                                {3, xc(-1, 2) * xv(2)},
                                {5, -half_r2},
                                {7, xc(-1, 4) * xv(1) * xv(2) * xv(2)},
                                {8, xc(-1, 6) * xv(2).pow(3)}}));
  m.basis.push_back(field_from({{2, xc(1)},
                                {3, xc(1, 2) * xv(1)},
                                {4, half_r2},
                                {6, xc(1, 6) * xv(1).pow(3)},
                                {7, xc(1, 4) * xv(1) * xv(1) * xv(2)}}));
  m.basis.push_back(field_from({{3, xc(1)},
                                {4, xv(1)},
                                {5, xv(2)},
                                {6, xc(1, 2) * xv(1) * xv(1)},
                                {7, xv(1) * xv(2)},
                                {8, xc(1, 2) * xv(2) * xv(2)}}));
  m.basis.push_back(field_from({{4, xc(1)}, {6, xv(1)}, {7, xv(2)}}));
  m.basis.push_back(field_from({{5, xc(1)}, {7, xv(1)}, {8, xv(2)}}));
  m.basis.push_back(field_from({{6, xc(1)}}));
  m.basis.push_back(field_from({{7, xc(1)}}));
  m.basis.push_back(field_from({{8, xc(1)}}));
  return m;
}

VecField symmetry_field() {
  Poly P = xc(-1, 24) * xv(1).pow(4) + xc(1, 8) * xv(1).pow(2) * xv(2).pow(2) + xv(7);
  Poly Q = xc(1, 12) * xv(1) * xv(2).pow(3) + xc(1, 12) * xv(1).pow(3) * xv(2) -
           xc(2) * xv(6) + xc(2) * xv(8);
  Poly R = xc(1, 8) * xv(1).pow(2) * xv(2).pow(2) - xc(1, 24) * xv(2).pow(4) - xv(7);
  return field_from(
      {{1, xv(2)}, {2, -xv(1)}, {4, xv(5)}, {5, -xv(4)}, {6, P}, {7, Q}, {8, R}});
}

LieAlgebraModel asymmetric_model() {
  GGFrame frame = gg_frame(4);
  LieAlgebraModel m;
  m.name = "asymmetric";
  m.basis = frame.fields;

  // Full table in the Hall basis, induced from the (2,3,5,8) table: evaluate
  // each Hall tree abstractly; for step 4 every tree lands on a signed basis
  // element, so the change of basis is a diagonal sign.
  const StructureTable xt = carnot_2358_table();
  std::vector<std::vector<Rational>> abstract(8);
  std::vector<Rational> sign(8, Rational(0));
  for (const HallElement& e : frame.basis) {
    std::vector<Rational> v(8, Rational(0));
    if (e.is_generator()) {
      v[static_cast<std::size_t>(e.right) - 1] = 1;
    } else {
      v = abstract_bracket(xt, abstract[static_cast<std::size_t>(e.left) - 1],
                           abstract[static_cast<std::size_t>(e.right) - 1]);
    }
    abstract[static_cast<std::size_t>(e.index) - 1] = v;
    int nonzero = -1;
    for (int k = 0; k < 8; ++k)
      if (v[static_cast<std::size_t>(k)] != 0) {
        if (nonzero >= 0) throw std::logic_error("asymmetric_model: Hall tree not diagonal");
        nonzero = k;
      }
    if (nonzero != e.index - 1 || abs(numerator(v[static_cast<std::size_t>(nonzero)])) != 1)
      throw std::logic_error("asymmetric_model: unexpected Hall tree value");
    sign[static_cast<std::size_t>(e.index) - 1] = v[static_cast<std::size_t>(nonzero)];
  }
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      auto w = abstract_bracket(xt, abstract[static_cast<std::size_t>(i) - 1],
                                abstract[static_cast<std::size_t>(j) - 1]);
      std::vector<std::pair<int, Rational>> combo;
      for (int k = 0; k < 8; ++k)
        if (w[static_cast<std::size_t>(k)] != 0)
          combo.emplace_back(k + 1, w[static_cast<std::size_t>(k)] * sign[static_cast<std::size_t>(k)]);
      if (!combo.empty()) m.table.set(i, j, std::move(combo));
    }
  }
  return m;
}

std::vector<BracketCheck> verify_table(const LieAlgebraModel& model) {
  const std::string sym = model_symbol(model);
  std::vector<BracketCheck> checks;
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      auto combo = model.table.get(i, j);
      VecField residual = lie_bracket(model.basis[static_cast<std::size_t>(i) - 1],
                                      model.basis[static_cast<std::size_t>(j) - 1]);
      for (const auto& [k, c] : combo)
        residual -= c * model.basis[static_cast<std::size_t>(k) - 1];
      BracketCheck chk;
      chk.i = i;
      chk.j = j;
      chk.bracket = "[" + sym + std::to_string(i) + "," + sym + std::to_string(j) + "]";
      chk.expected = combo_string(combo, sym);
      chk.pass = residual.is_zero();
      if (chk.pass) {
        chk.residual = "0";
      } else {
        std::ostringstream os;
        for (std::size_t k = 0; k < 8; ++k)
          if (!residual.component(k).is_zero())
            os << "d/dx" << k + 1 << ": " << residual.component(k).str() << "; ";
        chk.residual = os.str();
      }
      checks.push_back(std::move(chk));
    }
  }
  return checks;
}

std::vector<BracketCheck> verify_symmetry(const VecField& x0, const LieAlgebraModel& model) {
  static const std::vector<std::vector<std::pair<int, Rational>>> relations = {
      {{2, Rational(1)}},                    // [X0, X1] = X2
      {{1, Rational(-1)}},                   // [X0, X2] = -X1
      {},                                    // [X0, X3] = 0
      {{5, Rational(1)}},                    // [X0, X4] = X5
      {{4, Rational(-1)}},                   // [X0, X5] = -X4
      {{7, Rational(2)}},                    // [X0, X6] = 2 X7
      {{8, Rational(1)}, {6, Rational(-1)}}, // [X0, X7] = X8 - X6
      {{7, Rational(-2)}},                   // [X0, X8] = -2 X7
  };
  std::vector<BracketCheck> checks;
  for (int i = 1; i <= 8; ++i) {
    const auto& combo = relations[static_cast<std::size_t>(i) - 1];
    VecField residual = lie_bracket(x0, model.basis[static_cast<std::size_t>(i) - 1]);
    for (const auto& [k, c] : combo) residual -= c * model.basis[static_cast<std::size_t>(k) - 1];
    BracketCheck chk;
    chk.i = 0;
    chk.j = i;
    chk.bracket = "[X0,X" + std::to_string(i) + "]";
    chk.expected = combo_string(combo, "X");
    chk.pass = residual.is_zero();
    chk.residual = chk.pass ? "0" : "nonzero";
    checks.push_back(std::move(chk));
  }
  BracketCheck self;
  self.i = 0;
  self.j = 0;
  self.bracket = "[X0,X0]";
  self.expected = "0";
  self.pass = lie_bracket(x0, x0).is_zero();
  self.residual = self.pass ? "0" : "nonzero";
  checks.push_back(std::move(self));
  return checks;
}

std::vector<int> growth_vector(const LieAlgebraModel& model, std::span<const Rational> point) {
  std::vector<int> ranks;
  RatMatrix rows;
  for (std::size_t m = 0; m < 8; ++m) {
    std::vector<Rational> row;
    row.reserve(8);
    for (std::size_t k = 0; k < 8; ++k)
      row.push_back(model.basis[m].component(k).eval(point));
    rows.push_back(std::move(row));
    if (m == 1 || m == 2 || m == 4 || m == 7) ranks.push_back(exact_rank(rows));
  }
  return ranks;
}

}  // namespace carnot
