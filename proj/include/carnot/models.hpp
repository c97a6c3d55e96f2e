#pragma once

#include "carnot/hall.hpp"
#include "carnot/vecfield.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace carnot {

// Sparse structure constants c^k_{ij} for i < j (1-based); [b_i, b_j] =
// sum_k c^k_{ij} b_k. Zero entries are asserted by verification, not skipped.
class StructureTable {
 public:
  void set(int i, int j, std::vector<std::pair<int, Rational>> combo);
  // Signed lookup valid for any i != j.
  std::vector<std::pair<int, Rational>> get(int i, int j) const;
  const std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> entries_;
};

struct LieAlgebraModel {
  std::string name;
  std::vector<VecField> basis;
  StructureTable table;
};

struct BracketCheck {
  int i = 0;
  int j = 0;                // 0 when the left slot is the symmetry field
  std::string bracket;      // e.g. "[X1,X2]"
  std::string expected;     // e.g. "X3", "0", "X8 - X6"
  std::string residual;     // canonical text of the residual field, "0" on pass
  bool pass = false;
};

// The (2,3,5,8) structure table on basis X1..X8.
StructureTable carnot_2358_table();

// Frame of Theorem-style symmetric fields on R^8 realizing the (2,3,5,8)
// table, invariant under the rotational symmetry below.
LieAlgebraModel symmetric_model();

// Grayson–Grossman step-4 frame H1..H8 with its induced full table.
LieAlgebraModel asymmetric_model();

// Rotational infinitesimal symmetry X0 of the symmetric frame.
VecField symmetry_field();

// Check every unordered basis pair against the model's table (exact).
std::vector<BracketCheck> verify_table(const LieAlgebraModel& model);

// Check the eight [X0, X_i] relations (and [X0, X0] = 0) exactly.
std::vector<BracketCheck> verify_symmetry(const VecField& x0, const LieAlgebraModel& model);

// Ranks of the filtration span{X_1..X_m} at a point, m in {2,3,5,8}.
std::vector<int> growth_vector(const LieAlgebraModel& model, std::span<const Rational> point);

}  // namespace carnot
