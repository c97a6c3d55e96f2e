#include "carnot/linalg.hpp"

#include <stdexcept>

namespace carnot {

namespace {

struct Echelon {
  std::vector<std::vector<Int>> rows;   // echelon form, integer entries
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
  std::size_t ncols = 0;
};

// Clear denominators row-wise, then run Bareiss fraction-free elimination;
// every division below is exact.
Echelon echelon_form(const RatMatrix& a) {
  Echelon e;
  if (a.empty()) return e;
  e.ncols = a[0].size();

  for (const auto& row : a) {
    if (row.size() != e.ncols) throw std::invalid_argument("matrix rows of unequal length");
    Int l(1);
    for (const auto& q : row) l = boost::multiprecision::lcm(l, Int(denominator(q)));
    std::vector<Int> r(e.ncols);
    for (std::size_t j = 0; j < e.ncols; ++j)
      r[j] = Int(numerator(row[j] * Rational(l)));
    e.rows.push_back(std::move(r));
  }

  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.ncols && r < e.rows.size(); ++c) {
    std::size_t p = r;
    while (p < e.rows.size() && e.rows[p][c] == 0) ++p;
    if (p == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[p]);
    for (std::size_t i = r + 1; i < e.rows.size(); ++i) {
      for (std::size_t j = c + 1; j < e.ncols; ++j)
        e.rows[i][j] = (e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j]) / prev;
      e.rows[i][c] = 0;
    }
    prev = e.rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows.resize(e.pivot_cols.size());
  return e;
}

}  // namespace

int exact_rank(RatMatrix a) {
  return static_cast<int>(echelon_form(a).pivot_cols.size());
}

std::vector<std::vector<Rational>> exact_nullspace(const RatMatrix& a) {
  Echelon e = echelon_form(a);
  const std::size_t n = e.ncols;
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];
      Rational s(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (e.rows[ri][j] != 0 && x[j] != 0) s += Rational(e.rows[ri][j]) * x[j];
      x[pc] = -s / Rational(e.rows[ri][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace carnot
