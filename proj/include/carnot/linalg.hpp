#pragma once

#include "carnot/rational.hpp"

#include <cstddef>
#include <vector>

namespace carnot {

using RatMatrix = std::vector<std::vector<Rational>>;

// Rank over Q via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int exact_rank(RatMatrix a);

// Basis of {x : a x = 0}, columns indexed like a's columns. Fraction-free
// forward elimination, exact rational back substitution.
std::vector<std::vector<Rational>> exact_nullspace(const RatMatrix& a);

}  // namespace carnot
