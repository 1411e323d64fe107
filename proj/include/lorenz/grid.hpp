#pragma once

#include <span>
#include <string>
#include <vector>

#include "lorenz/invariants.hpp"
#include "lorenz/word.hpp"

namespace lorenz {

enum class ColumnRole { AShort, LongVertical, BShort };
enum class RowRole { AShort, LongHorizontal, BShort };
enum class Region { A, B, C };

const char* to_string(Region r) noexcept;

// A lattice corner of the grid. x runs right (0..n), y runs up (0..n);
// the cell in row r (counted from the top), column c (from the left, both
// 0-based) has south-west corner (c, n-r-1) and center (c+1/2, n-r-1/2).
struct GridPoint {
  int x = 0;
  int y = 0;
  bool operator==(const GridPoint&) const = default;
};

// A planar point for the J-pairing. Only the coordinate order matters, so
// marker centers are supplied in doubled coordinates to stay integral.
struct PlanePoint {
  long long x = 0;
  long long y = 0;
};

// An exact half-integer, stored as twice its value.
struct HalfInt {
  long long twice = 0;
  bool is_integer() const noexcept { return twice % 2 == 0; }
  bool operator==(const HalfInt&) const = default;
};

// A vertical-over-horizontal intersection. over() is the column whose
// segment passes in front, under() the row passing behind.
struct Crossing {
  int row = 0;  // 0-based
  int col = 0;
  Region region = Region::C;
  int over() const noexcept { return col; }
  int under() const noexcept { return row; }
  bool operator==(const Crossing&) const = default;
};

// An n x n grid diagram: one X and one O per row and per column, columns
// oriented X->O, rows O->X, vertical segments in front of horizontal ones.
//
// Diagrams built from a word realize the template picture:
//   rows, top to bottom:  the a left-arc top runs; the a arrival rows of
//     p_1..p_a, where the rows of p_{mu_k} are the long horizontals
//     (k = 1..t downwards); the right-arc connector rows; the arrival rows
//     of q_1..q_b.
//   columns, left to right:  the a left-arc first strokes (upward, one per
//     p_a..p_1); the left-arc second strokes (downward); the arrival columns
//     of q_b..q_1, where the columns of q_{nu_k} are the long verticals
//     (k = t..1 rightwards); the right-arc strokes (upward, q_1..q_b).
// All crossings land on long strands; region A crossings sit on long
// horizontals under short columns, region B on long verticals under short
// rows, and the t x t block of long-long crossings forms region C.
class GridDiagram {
 public:
  int n() const noexcept { return n_; }
  int trip_number() const noexcept { return static_cast<int>(long_v_cols_.size()); }

  int x_col(int row) const { return x_col_[static_cast<size_t>(row)]; }
  int o_col(int row) const { return o_col_[static_cast<size_t>(row)]; }
  int x_row(int col) const { return x_row_[static_cast<size_t>(col)]; }
  int o_row(int col) const { return o_row_[static_cast<size_t>(col)]; }

  ColumnRole column_role(int col) const { return col_roles_[static_cast<size_t>(col)]; }
  RowRole row_role(int row) const { return row_roles_[static_cast<size_t>(row)]; }

  // k = 1..t, as in the crossing formulas: long vertical k lands at q_{nu_k},
  // long horizontal k lands at p_{mu_k}.
  int long_vertical_column(int k) const { return long_v_cols_[static_cast<size_t>(k - 1)]; }
  int long_horizontal_row(int k) const { return long_h_rows_[static_cast<size_t>(k - 1)]; }

  // Assembles a diagram from raw placements (used by the JSON importer and
  // by tests). Validates grid-ness, not Lorenz structure.
  static GridDiagram from_parts(int n, std::vector<int> x_col, std::vector<int> o_col,
                                std::vector<ColumnRole> col_roles, std::vector<RowRole> row_roles,
                                std::vector<int> long_v_cols, std::vector<int> long_h_rows);

  bool operator==(const GridDiagram&) const = default;

 private:
  friend GridDiagram build_grid(const OrbitCombinatorics& oc);
  GridDiagram() = default;

  int n_ = 0;
  std::vector<int> x_col_, o_col_;  // per row
  std::vector<int> x_row_, o_row_;  // per column (derived)
  std::vector<ColumnRole> col_roles_;
  std::vector<RowRole> row_roles_;
  std::vector<int> long_v_cols_;  // by k-1
  std::vector<int> long_h_rows_;
};

// Builds the grid diagram of the orbit and verifies its postconditions:
//   P1  size n = 2a+2b-t, valid placements, marker counts per region;
//   P2  tracing gives a single component realizing the word;
//   P3  crossings only on long strands, regional and per-strand counts
//       equal to the closed forms;
//   P4  the direct Alexander grading equals the closed form;
//   P5  the crossing-change procedure yields U = u and N_B - N_A = -(t-1)
//       (checked by unknotting_set(), which that module owns);
//   P6  winding sums and the J(O,O) / J(X,X) pairings match their closed
//       forms.
// Violations throw ConstructionFailure naming the first failed
// postcondition.
GridDiagram build_grid(const OrbitCombinatorics& oc);

// Traversal of the whole knot starting at the X end of long horizontal
// start_k: column segments get even order indices, row segments odd ones.
// Throws MultipleComponents if the segments split into several cycles and
// NotLorenz if the diagram has no long strands.
struct TraceOrder {
  std::vector<int> col_order;  // per column, 0..2n-2 even
  std::vector<int> row_order;  // per row, 1..2n-1 odd
  std::vector<int> col_seq;    // columns in traversal order
};
TraceOrder trace_order(const GridDiagram& g, int start_k = 1);

// Follows X->O up columns and O->X along rows from the X end of the first
// long horizontal and reads the word back: an upward short stroke on the
// left side is an x, on the right side a y. Throws MultipleComponents if the
// segments split into several cycles and NotLorenz if the diagram lacks the
// long-strand structure.
LorenzWord trace_word(const GridDiagram& g);

// All vertical-over-horizontal intersections, sorted by (row, col). Throws
// ShortShortCrossing if two short segments intersect.
std::vector<Crossing> enumerate_crossings(const GridDiagram& g);

// Winding number of the knot around a lattice corner: the signed count of
// vertical segments strictly left of p covering its height, downward
// segments counted positively.
int winding_number(const GridDiagram& g, GridPoint p);

// The distinguished grid state: the south-west corner of every X cell.
std::vector<GridPoint> x_minus(const GridDiagram& g);

// Marker centers in doubled coordinates, indexed by row.
std::vector<PlanePoint> x_marker_points(const GridDiagram& g);
std::vector<PlanePoint> o_marker_points(const GridDiagram& g);

// J(P, Q) = (I(P,Q) + I(Q,P)) / 2 where I counts pairs of P x Q with the
// first point strictly south-west of the second. Symmetric and bilinear
// over disjoint unions.
HalfInt j_pairing(std::span<const PlanePoint> P, std::span<const PlanePoint> Q);

// Alexander grading of x^-:  -sum w(x) + (J(O,O) - J(X,X))/2 - (n-1)/2.
// Throws NonIntegerGrading if the result is not an integer.
int alexander_direct(const GridDiagram& g);

enum class GridFormat { Ascii, Svg, Json };
GridFormat grid_format_from_string(std::string_view name);

// Deterministic exports. Ascii: n lines of n glyphs from {X, O, U+00B7}.
// Json: the schema accepted by grid_from_json. Svg: self-contained picture
// with oriented segments and under-strand gaps at crossings.
std::string export_grid(const GridDiagram& g, GridFormat format);

GridDiagram grid_from_json(const std::string& text);

}  // namespace lorenz
