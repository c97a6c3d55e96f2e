#pragma once

#include "carnot/vecfield.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace carnot {

// Node of a Hall-basis bracket tree. Generators are leaves (left == 0),
// any other element is [element(left), element(right)] with 1-based indices
// into the basis list.
struct HallElement {
  int index = 0;      // 1-based position in the basis
  int degree = 0;     // bracket length
  int left = 0;       // 0 for a generator
  int right = 0;      // generator number (1|2) for leaves, element index otherwise
  bool is_generator() const { return left == 0; }
};

// l_d(i): dimension of the degree-i component of the free Lie algebra on d
// generators, via i*l_d(i) = d^i - sum_{j|i, j<i} j*l_d(j).
long long dim_component(int d, int i);
// l_d^{(r)} = sum_{i<=r} l_d(i).
long long dim_cumulative(int d, int r);

// Hall basis of the free Lie algebra on two generators, truncated at bracket
// length `step`. Ordered by degree; within a degree, brackets are created in
// lexicographic (left index, right index) order, which reproduces the
// conventional listing for step <= 4.
std::vector<HallElement> hall_basis(int step);

// "[[H2,H1],H1]"-style rendering of element `index`.
std::string hall_bracket_string(const std::vector<HallElement>& basis, int index);

// Polynomial vector-field realization of the step-r truncation on R^N,
// N = l_2^{(r)}: two generator fields whose iterated brackets along the Hall
// trees fill out the basis.
struct GGFrame {
  int step = 0;
  int dim = 0;
  std::vector<HallElement> basis;
  std::vector<VecField> fields;          // H_1..H_N
  std::vector<Poly> descent_monomials;   // correction monomial of H_2 per element (index >= 3)
};

GGFrame gg_frame(int step);

// Weighted degree of a monomial/polynomial where variable i carries the
// degree of Hall element i+1; -1 for zero. Weight-one homogeneity of a frame
// field H_k means every component j is homogeneous of weighted degree
// weight(x_j) - 1.
int weighted_degree(const Poly& p, const std::vector<int>& weights);
bool is_weight_homogeneous(const Poly& p, const std::vector<int>& weights, int degree);

}  // namespace carnot
