#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "lorenz/enumerate.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/unknotting.hpp"
#include "lorenz/word.hpp"

using namespace lorenz;

namespace {

GridDiagram grid_of(const char* word) {
  return build_grid(orbit_combinatorics(LorenzWord::parse(word)));
}

// per-string stroke counts: string i must cover the x^alpha_i y^beta_i block
void check_syllable_cover(const GridDiagram& g, const OrbitCombinatorics& oc,
                          const StringLabeling& lab) {
  std::vector<int> xs(static_cast<size_t>(oc.t), 0), ys(static_cast<size_t>(oc.t), 0);
  for (int c = 0; c < g.n(); ++c) {
    const bool upward = g.o_row(c) < g.x_row(c);
    if (!upward) continue;
    const int s = lab.column_string[static_cast<size_t>(c)];
    if (g.column_role(c) == ColumnRole::AShort) ++xs[static_cast<size_t>(s - 1)];
    else if (g.column_role(c) == ColumnRole::BShort) ++ys[static_cast<size_t>(s - 1)];
  }
  CHECK(xs == oc.alpha);
  CHECK(ys == oc.beta);
}

}  // namespace

TEST_CASE("string labels cover the syllables") {
  {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse("xxxyyyxyy"));
    const GridDiagram g = build_grid(oc);
    const StringLabeling lab = string_labels(g, CutMode::AtXLeftEnds);
    check_syllable_cover(g, oc, lab);  // string 1 = x^3 y^3, string 2 = x y^2
  }
  {
    const GridDiagram g = grid_of("xy");
    const StringLabeling lab = string_labels(g, CutMode::AtXLeftEnds);
    for (int c = 0; c < g.n(); ++c) CHECK(lab.column_string[static_cast<size_t>(c)] == 1);
    for (int r = 0; r < g.n(); ++r) CHECK(lab.row_string[static_cast<size_t>(r)] == 1);
  }
}

TEST_CASE("the first long horizontal belongs to string t, and the recut shifts it") {
  for (const char* word : {"xyxyy", "xxxyyyxyy", "xxyxyxyy"}) {
    const GridDiagram g = grid_of(word);
    const int t = g.trip_number();
    const StringLabeling at_x = string_labels(g, CutMode::AtXLeftEnds);
    const StringLabeling at_o = string_labels(g, CutMode::AtORightEnds);
    CHECK(at_x.row_string[static_cast<size_t>(g.long_horizontal_row(1))] == t);
    for (int k = 1; k <= t; ++k) {
      const int row = g.long_horizontal_row(k);
      const int before = at_x.row_string[static_cast<size_t>(row)];
      const int after = at_o.row_string[static_cast<size_t>(row)];
      CHECK(after == before % t + 1);  // string i-1 hands the strand to string i
    }
    // columns keep their numeration under the recut
    CHECK(at_x.column_string == at_o.column_string);
  }
}

TEST_CASE("trace classification on the running examples") {
  CHECK(classify_by_trace(grid_of("xxxyyyxyy")).U == 2);
  CHECK(classify_by_trace(grid_of("xyxyy")).U == 1);
  CHECK(classify_by_trace(grid_of("xxy")).U == 0);
  CHECK(classify_by_trace(grid_of("xxxxyyy")).U == 0);
}

TEST_CASE("epsilon/delta bookkeeping on x^3 y^3 x y^2") {
  const GridDiagram g = grid_of("xxxyyyxyy");
  const WrongCrossingReport rep = unknotting_set(g);
  // c_BC = c_B + t^2 = 9, c_AC = c_A + t^2 = 7, a = 4, b = 5
  CHECK(rep.c_BC == 9);
  CHECK(rep.c_AC == 7);
  CHECK(rep.N_B - rep.N_A == -1);
  CHECK(2 * rep.u_BC == rep.c_BC - 5 + rep.N_B);
  CHECK(2 * rep.u_AC == rep.c_AC - 4 - rep.N_A);
  CHECK(rep.U == rep.u_AC + rep.u_BC - 1);
  CHECK(rep.U == 2);
  CHECK(rep.changes.size() == 2);
}

TEST_CASE("degenerate single-string case") {
  const GridDiagram g = grid_of("xxy");
  const EpsilonDelta ed = epsilon_delta(g);
  CHECK(ed.N_A == 0);
  CHECK(ed.N_B == 0);
  CHECK(ed.eps.size() == 1);
  const WrongCrossingReport rep = unknotting_set(g);
  CHECK(rep.U == 0);
  CHECK(rep.changes.empty());
}

TEST_CASE("procedure identities hold exhaustively up to length 10") {
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    const InvariantRecord inv = closed_form_invariants(oc);
    const GridDiagram g = build_grid(oc);
    const WrongCrossingReport rep = unknotting_set(g);  // throws on any mismatch
    REQUIRE(rep.U == inv.unknotting);
    REQUIRE(rep.N_B - rep.N_A == -(oc.t - 1));
    REQUIRE(rep.self_B == oc.b);
    REQUIRE(rep.self_A == oc.a);
    int wrong_c = 0;
    for (const LabeledCrossing& lc : rep.crossings) {
      if (lc.crossing.region == Region::A) continue;
      // self-crossings are right; cross-string crossings in B∪C are right
      // exactly when the vertical string index is the smaller one
      if (lc.string_vertical == lc.string_horizontal) REQUIRE(!lc.wrong);
      else REQUIRE(!lc.wrong == (lc.string_vertical < lc.string_horizontal));
      if (lc.crossing.region == Region::C && lc.wrong) ++wrong_c;
    }
    REQUIRE(wrong_c == oc.t * (oc.t - 1) / 2);
  }
}

TEST_CASE("interchanging vertical strands preserves N_B - N_A") {
  for (const LorenzWord& w : enumerate_words(9, true)) {
    const GridDiagram g = build_grid(orbit_combinatorics(w));
    const int t = g.trip_number();
    if (t < 2) continue;
    const StringLabeling lab = string_labels(g, CutMode::AtXLeftEnds);
    std::vector<int> vcol(static_cast<size_t>(t)), hrow(static_cast<size_t>(t));
    for (int k = 1; k <= t; ++k) {
      const int vc = g.long_vertical_column(k);
      const int hr = g.long_horizontal_row(k);
      vcol[static_cast<size_t>(lab.column_string[static_cast<size_t>(vc)] - 1)] = vc;
      hrow[static_cast<size_t>(lab.row_string[static_cast<size_t>(hr)] - 1)] = hr;
    }
    const EpsilonDelta base = epsilon_delta_config(vcol, hrow);
    CHECK(base.N_B - base.N_A == -(t - 1));
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) {
        std::vector<int> swapped = vcol;
        std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(j)]);
        const EpsilonDelta ed = epsilon_delta_config(swapped, hrow);
        CHECK(ed.N_B - ed.N_A == base.N_B - base.N_A);
      }
    }
  }
}

TEST_CASE("wrong-crossing totals from other trace starts (observation)") {
  // The theory pins the count only for the designated start; other starts
  // often give more. Recorded, not asserted.
  int dependent = 0, total = 0;
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const GridDiagram g = build_grid(orbit_combinatorics(w));
    std::set<int> totals;
    for (int k = 1; k <= g.trip_number(); ++k) totals.insert(wrong_count_from_start(g, k));
    const int u = closed_form_invariants(orbit_combinatorics(w)).unknotting;
    REQUIRE(*totals.begin() >= u);       // every start still unknots
    REQUIRE(wrong_count_from_start(g, 1) == u);  // the designated start is exact
    ++total;
    if (totals.size() > 1) ++dependent;
  }
  MESSAGE("trace count depends on the start for ", dependent, " of ", total, " words");
}
