#pragma once

#include <vector>

#include "lorenz/laurent.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

// The Lorenz permutation braid: a + b strands, one positive crossing per
// inverted pair of the first-return permutation, always a left-origin strand
// passing in front of a right-origin one. Serves as the independent oracle
// for the unknotting number via the positive-braid genus.
struct BraidData {
  int strands = 0;
  std::vector<int> pi;            // first-return permutation, 0-based positions
  std::vector<bool> left_origin;  // per starting position
  std::vector<int> word;          // Artin generator indices, 1-based

  int k() const noexcept { return static_cast<int>(word.size()); }
};

// Realizes pi with a deterministic sweep (leftmost applicable transposition
// first), producing exactly inversion-many crossings.
BraidData lorenz_braid(const OrbitCombinatorics& oc);

// Pairs i < j with pi(i) > pi(j). Equals the grid crossing total; pairs with
// the same origin never invert.
int inversion_count(const BraidData& braid);

// Alexander polynomial of the braid closure through the reduced Burau
// representation, with exact Laurent arithmetic:
//   det(Burau(word) - I) * (s - 1) / (s^strands - 1),
// normalized to a symmetric exponent window with value +1 at s = 1. The
// exponent spread is twice the positive-braid genus. Throws InexactDivision
// on a failed exact division and MultiComponent when the closure is a link.
LaurentPoly alexander_polynomial(const BraidData& braid);

}  // namespace lorenz
