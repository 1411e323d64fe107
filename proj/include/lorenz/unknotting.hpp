#pragma once

#include <vector>

#include "lorenz/grid.hpp"

namespace lorenz {

// Where the long horizontal strands are cut to split the knot into t strings.
// Cutting at the X left ends gives the numeration used in B (the first long
// horizontal belongs to string t); cutting at the O right ends shifts every
// long horizontal to the next string.
enum class CutMode { AtXLeftEnds, AtORightEnds };

struct StringLabeling {
  CutMode mode = CutMode::AtXLeftEnds;
  std::vector<int> column_string;  // string 1..t owning each column segment
  std::vector<int> row_string;     // string 1..t owning each row segment
};

// Labels every segment with its string, tracing from the X end of the first
// long horizontal. String i covers the x^alpha_i y^beta_i block of the word.
StringLabeling string_labels(const GridDiagram& g, CutMode mode);

struct LabeledCrossing {
  Crossing crossing;
  int string_vertical = 0;    // string of the over (vertical) segment
  int string_horizontal = 0;  // string of the under (horizontal) segment
  bool wrong = false;         // needs a crossing change
};

struct WrongCrossingReport {
  int N_A = 0, N_B = 0;        // signed corner sums from the delta/epsilon matrices
  int c_AC = 0, c_BC = 0;      // crossing counts in the two half-diagrams
  int self_A = 0, self_B = 0;  // same-string crossings there (A uses the recut labels)
  int u_AC = 0, u_BC = 0;      // wrong crossings there
  int U = 0;                   // total wrong crossings = |changes|
  std::vector<LabeledCrossing> crossings;  // all crossings, annotated
  std::vector<Crossing> changes;           // the crossings to flip
};

// Traces the diagram once from the X of the first long horizontal; a
// crossing is right when its vertical segment is reached before its
// horizontal one, wrong otherwise. Fills the counts that the trace alone
// determines (N_A and N_B stay zero).
WrongCrossingReport classify_by_trace(const GridDiagram& g);

// As classify_by_trace but starting at the X of long horizontal start_k.
// Only the wrong-crossing total is returned; used to probe how the count
// depends on the chosen start.
int wrong_count_from_start(const GridDiagram& g, int start_k);

struct EpsilonDelta {
  // t x t matrices over unordered pairs (diagonal zero). epsilon compares
  // the strings meeting at the upper-left corner of each pair's rectangle
  // (+1 when the vertical string exceeds the horizontal); delta compares at
  // the lower-right corner under the recut numeration (+1 when the
  // horizontal string exceeds the vertical).
  std::vector<std::vector<int>> eps;
  std::vector<std::vector<int>> delta;
  int N_A = 0;
  int N_B = 0;
};

EpsilonDelta epsilon_delta(const GridDiagram& g);

// Same computation on an abstract configuration: column position of each
// string's long vertical and row position of each string's long horizontal
// (cut-at-X numeration). Lets tests exchange vertical strands and recheck
// that N_B - N_A is unchanged.
EpsilonDelta epsilon_delta_config(const std::vector<int>& v_col_of_string,
                                  const std::vector<int>& h_row_of_string_b);

// Runs the trace classification and the epsilon/delta bookkeeping, checks
// that they agree (u_{BC} = (c_{BC} - b + N_B)/2, u_{AC} = (c_{AC} - a -
// N_A)/2, U = u_{AC} + u_{BC} - t(t-1)/2, N_B - N_A = -(t-1)) and that U
// equals the closed-form unknotting number. Disagreement throws
// ProcedureMismatch.
WrongCrossingReport unknotting_set(const GridDiagram& g);

}  // namespace lorenz
