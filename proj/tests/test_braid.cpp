#include <numeric>
#include <vector>

#include <doctest.h>

#include "lorenz/braid.hpp"
#include "lorenz/enumerate.hpp"
#include "lorenz/error.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/laurent.hpp"
#include "lorenz/word.hpp"

using namespace lorenz;

namespace {

BraidData braid_of(const char* word) {
  return lorenz_braid(orbit_combinatorics(LorenzWord::parse(word)));
}

// applies the braid word to the identity arrangement and returns the end
// position of each strand
std::vector<int> apply_word(const BraidData& b) {
  std::vector<int> at(static_cast<size_t>(b.strands));
  std::iota(at.begin(), at.end(), 0);
  for (int gen : b.word) std::swap(at[static_cast<size_t>(gen - 1)], at[static_cast<size_t>(gen)]);
  std::vector<int> end(static_cast<size_t>(b.strands));
  for (int pos = 0; pos < b.strands; ++pos) end[static_cast<size_t>(at[static_cast<size_t>(pos)])] = pos;
  return end;
}

}  // namespace

TEST_CASE("lorenz braid of the trefoil word") {
  const BraidData b = braid_of("xyxyy");
  CHECK(b.strands == 5);
  CHECK(b.k() == 6);
  // hand-run of the leftmost-first sweep on pi = (3 4 0 1 2)
  CHECK(b.word == std::vector<int>{2, 1, 3, 2, 4, 3});
  CHECK(apply_word(b) == b.pi);
}

TEST_CASE("lorenz braid sizes on the running examples") {
  const BraidData b9 = braid_of("xxxyyyxyy");
  CHECK(b9.strands == 9);
  CHECK(b9.k() == 12);
  const BraidData b2 = braid_of("xy");
  CHECK(b2.strands == 2);
  CHECK(b2.k() == 1);
  CHECK(b2.word == std::vector<int>{1});
}

TEST_CASE("every crossing joins a left and a right strand") {
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const BraidData b = lorenz_braid(orbit_combinatorics(w));
    CHECK(apply_word(b) == b.pi);
    std::vector<int> at(static_cast<size_t>(b.strands));
    std::iota(at.begin(), at.end(), 0);
    for (int gen : b.word) {
      const int s1 = at[static_cast<size_t>(gen - 1)], s2 = at[static_cast<size_t>(gen)];
      REQUIRE(b.left_origin[static_cast<size_t>(s1)] != b.left_origin[static_cast<size_t>(s2)]);
      std::swap(at[static_cast<size_t>(gen - 1)], at[static_cast<size_t>(gen)]);
    }
  }
}

TEST_CASE("inversion count equals the grid crossing number") {
  CHECK(inversion_count(braid_of("xyxyy")) == 6);
  CHECK(inversion_count(braid_of("xy")) == 1);
  for (const LorenzWord& w : enumerate_words(11, true)) {
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    const InvariantRecord inv = closed_form_invariants(oc);
    const BraidData b = lorenz_braid(oc);
    REQUIRE(inversion_count(b) == inv.crossings_total);
    REQUIRE(b.k() == inv.crossings_total);
    REQUIRE(positive_braid_unknotting(b.k(), b.strands) == inv.unknotting);
  }
}

TEST_CASE("t=1 words have a+b-1 inversions") {
  for (const char* word : {"xy", "xxy", "xyy", "xxxyy", "xxyyyy"}) {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse(word));
    CHECK(inversion_count(lorenz_braid(oc)) == oc.a + oc.b - 1);
  }
}

TEST_CASE("laurent arithmetic basics") {
  const LaurentPoly s = LaurentPoly::monomial(1, 1);
  const LaurentPoly p = s * s - s + LaurentPoly::constant(1);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(1) == -1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.at_one() == 1);
  CHECK(p.spread() == 2);
  LaurentPoly q;
  // (s^3 + 1) = (s + 1)(s^2 - s + 1)
  const LaurentPoly cube = s * s * s + LaurentPoly::constant(1);
  REQUIRE(cube.divide_exact(s + LaurentPoly::constant(1), q));
  CHECK(q == p);
  CHECK_FALSE(cube.divide_exact(s - LaurentPoly::constant(1), q));
  CHECK(p.shifted(-1).to_string() == "1·s^-1 -1·s^0 1·s^1");
}

TEST_CASE("reduced Burau satisfies the braid relations (via Alexander invariance)") {
  // sigma_1 sigma_2 sigma_1 sigma_2 and sigma_2 sigma_1 sigma_2 sigma_2 are
  // the same braid element; both close to the trefoil T(3,2)
  BraidData lhs, rhs;
  lhs.strands = rhs.strands = 3;
  lhs.pi = rhs.pi = {1, 2, 0};
  lhs.left_origin = rhs.left_origin = {true, false, false};
  lhs.word = {1, 2, 1, 2};
  rhs.word = {2, 1, 2, 2};
  const LaurentPoly l = alexander_polynomial(lhs);
  CHECK(l == alexander_polynomial(rhs));
  CHECK(l.coeff(1) == 1);
  CHECK(l.coeff(0) == -1);
  CHECK(l.coeff(-1) == 1);
}

TEST_CASE("alexander polynomial of the trefoil and the unknot") {
  const LaurentPoly tre = alexander_polynomial(braid_of("xyxyy"));
  // s^2 - s + 1 normalized symmetrically: s - 1 + 1/s
  CHECK(tre.coeff(1) == 1);
  CHECK(tre.coeff(0) == -1);
  CHECK(tre.coeff(-1) == 1);
  CHECK(tre.spread() == 2);
  CHECK(tre.at_one() == 1);

  const LaurentPoly one = alexander_polynomial(braid_of("xy"));
  CHECK(one == LaurentPoly::constant(1));
  CHECK(one.spread() == 0);

  CHECK(alexander_polynomial(braid_of("xxxyyyxyy")).spread() == 4);  // 2u
}

TEST_CASE("alexander polynomial invariants over the corpus") {
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    const LaurentPoly delta = alexander_polynomial(lorenz_braid(oc));
    const int u = closed_form_invariants(oc).unknotting;
    REQUIRE(delta.at_one() == 1);
    REQUIRE(delta.spread() == 2 * u);
    for (int e = 0; e <= delta.max_exp(); ++e) REQUIRE(delta.coeff(e) == delta.coeff(-e));
  }
}

TEST_CASE("coefficient overflow throws instead of wrapping") {
  const LaurentPoly huge = LaurentPoly::constant(1LL << 62);
  CHECK_THROWS_AS(huge * LaurentPoly::constant(4), Error);
  CHECK_THROWS_AS(huge + huge, Error);
}

TEST_CASE("a braid closing to a link is rejected") {
  BraidData split;
  split.strands = 2;
  split.pi = {0, 1};  // two components
  split.left_origin = {true, false};
  split.word = {};
  CHECK_THROWS_AS(alexander_polynomial(split), Error);
  try {
    alexander_polynomial(split);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MultiComponent);
  }
}
