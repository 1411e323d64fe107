#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

// A Lorenz word: a primitive (aperiodic) cyclic word over {x, y} containing
// both letters, stored as its lexicographically least rotation with x < y.
// The canonical form therefore always starts with x and ends with y.
class LorenzWord {
 public:
  LorenzWord() = default;  // empty placeholder; parse() makes real words

  // Parses and canonicalizes. Input is case-insensitive ASCII over {x, y}.
  // Throws Error with EmptyWord, InvalidLetter, SingleLetterWord or
  // PeriodicWord. Idempotent on canonical input.
  static LorenzWord parse(std::string_view text);

  const std::string& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  char letter(int pos) const { return letters_[static_cast<size_t>(pos)]; }
  int count_x() const noexcept;
  int count_y() const noexcept;

  // Swaps x and y and re-canonicalizes (exchanges the two template ears).
  LorenzWord swapped_xy() const;

  bool operator==(const LorenzWord&) const = default;
  auto operator<=>(const LorenzWord&) const = default;

 private:
  explicit LorenzWord(std::string canonical) : letters_(std::move(canonical)) {}
  std::string letters_;
};

struct Syllable {
  int alpha = 0;  // x-run length
  int beta = 0;   // y-run length
  bool operator==(const Syllable&) const = default;
};

// Decomposes the canonical word as x^a1 y^b1 ... x^at y^bt. Length == t.
std::vector<Syllable> syllables(const LorenzWord& w);

// Branch-line combinatorics of a periodic orbit. Points of the orbit on the
// branch interval are the rotations of the word; rotations starting with x
// are ordered ascending into ranks p_1 < ... < p_a, and rotations starting
// with y are ordered *descending* into ranks q_1 > ... > q_b (q_1 is the
// rightmost point of the branch line). The first-return map is the one-letter
// shift; mu/nu record the ranks at which strands cross between the two halves.
struct OrbitCombinatorics {
  LorenzWord word;
  int a = 0;  // number of x letters
  int b = 0;  // number of y letters
  int t = 0;  // trip number = syllable count = cyclic y->x adjacencies

  std::vector<int> alpha;  // syllable x-exponents, length t
  std::vector<int> beta;   // syllable y-exponents, length t

  // By word position (0-based). p_rank[i] in 1..a for x positions, else 0;
  // q_rank[i] in 1..b for y positions (1 = rightmost), else 0.
  std::vector<int> p_rank;
  std::vector<int> q_rank;

  // First-return permutation on branch positions 0..a+b-1, left to right:
  // positions 0..a-1 hold p_1..p_a, positions a..a+b-1 hold q_b..q_1.
  std::vector<int> pi;

  // Strictly increasing, length t, mu[0] == nu[0] == 1.
  std::vector<int> mu;
  std::vector<int> nu;

  // Word position carrying a given rank (inverse of p_rank/q_rank).
  int position_of_p(int rank) const { return pos_of_p_[static_cast<size_t>(rank - 1)]; }
  int position_of_q(int rank) const { return pos_of_q_[static_cast<size_t>(rank - 1)]; }

  // Branch position (0-based, left to right) of a ranked point.
  int branch_of_p(int rank) const { return rank - 1; }
  int branch_of_q(int rank) const { return a + b - rank; }

  std::vector<int> pos_of_p_;
  std::vector<int> pos_of_q_;
};

// Computes all branch-line combinatorics. Rotations are compared over a
// window of one period taken from the doubled word; a tie would contradict
// primitivity and raises InternalError. All struct invariants are checked.
OrbitCombinatorics orbit_combinatorics(const LorenzWord& w);

}  // namespace lorenz
