#include "lorenz/grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lorenz/error.hpp"

namespace lorenz {

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
  }
  return "?";
}

namespace {

struct Segment {
  int fixed = 0;  // column index for verticals, row index for horizontals
  int lo = 0;     // min row / min col
  int hi = 0;     // max row / max col
  bool forward = false;  // verticals: oriented downward; horizontals: rightward
};

std::vector<Segment> vertical_segments(const GridDiagram& g) {
  std::vector<Segment> out;
  out.reserve(static_cast<size_t>(g.n()));
  for (int c = 0; c < g.n(); ++c) {
    int rx = g.x_row(c), ro = g.o_row(c);
    out.push_back({c, std::min(rx, ro), std::max(rx, ro), ro > rx});
  }
  return out;
}

std::vector<Segment> horizontal_segments(const GridDiagram& g) {
  std::vector<Segment> out;
  out.reserve(static_cast<size_t>(g.n()));
  for (int r = 0; r < g.n(); ++r) {
    int co = g.o_col(r), cx = g.x_col(r);
    out.push_back({r, std::min(co, cx), std::max(co, cx), cx > co});
  }
  return out;
}

void derive_by_column(std::vector<int>& x_row, std::vector<int>& o_row,
                      const std::vector<int>& x_col, const std::vector<int>& o_col) {
  const size_t n = x_col.size();
  x_row.assign(n, -1);
  o_row.assign(n, -1);
  for (size_t r = 0; r < n; ++r) {
    x_row[static_cast<size_t>(x_col[r])] = static_cast<int>(r);
    o_row[static_cast<size_t>(o_col[r])] = static_cast<int>(r);
  }
}

void check_permutations(int n, const std::vector<int>& x_col, const std::vector<int>& o_col,
                        ErrorCode code) {
  auto is_perm = [n](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int c : v) {
      if (c < 0 || c >= n || seen[static_cast<size_t>(c)]) return false;
      seen[static_cast<size_t>(c)] = true;
    }
    return true;
  };
  if (!is_perm(x_col) || !is_perm(o_col))
    fail(code, "X and O placements must each use every column once");
  for (int r = 0; r < n; ++r)
    if (x_col[static_cast<size_t>(r)] == o_col[static_cast<size_t>(r)])
      fail(code, "X and O share a cell in row " + std::to_string(r));
}

}  // namespace

GridDiagram GridDiagram::from_parts(int n, std::vector<int> x_col, std::vector<int> o_col,
                                    std::vector<ColumnRole> col_roles,
                                    std::vector<RowRole> row_roles,
                                    std::vector<int> long_v_cols, std::vector<int> long_h_rows) {
  if (n <= 0) fail(ErrorCode::BadGridData, "grid size must be positive");
  check_permutations(n, x_col, o_col, ErrorCode::BadGridData);
  if (static_cast<int>(col_roles.size()) != n || static_cast<int>(row_roles.size()) != n)
    fail(ErrorCode::BadGridData, "role arrays must have length n");
  if (long_v_cols.size() != long_h_rows.size())
    fail(ErrorCode::BadGridData, "long vertical and horizontal counts differ");
  for (int c : long_v_cols)
    if (c < 0 || c >= n || col_roles[static_cast<size_t>(c)] != ColumnRole::LongVertical)
      fail(ErrorCode::BadGridData, "long_vertical_order inconsistent with column roles");
  for (int r : long_h_rows)
    if (r < 0 || r >= n || row_roles[static_cast<size_t>(r)] != RowRole::LongHorizontal)
      fail(ErrorCode::BadGridData, "long_horizontal_order inconsistent with row roles");
  const auto count_role_v =
      std::count(col_roles.begin(), col_roles.end(), ColumnRole::LongVertical);
  const auto count_role_h =
      std::count(row_roles.begin(), row_roles.end(), RowRole::LongHorizontal);
  if (count_role_v != static_cast<long>(long_v_cols.size()) ||
      count_role_h != static_cast<long>(long_h_rows.size()))
    fail(ErrorCode::BadGridData, "every long strand must appear in the order lists");

  GridDiagram g;
  g.n_ = n;
  g.x_col_ = std::move(x_col);
  g.o_col_ = std::move(o_col);
  g.col_roles_ = std::move(col_roles);
  g.row_roles_ = std::move(row_roles);
  g.long_v_cols_ = std::move(long_v_cols);
  g.long_h_rows_ = std::move(long_h_rows);
  derive_by_column(g.x_row_, g.o_row_, g.x_col_, g.o_col_);
  return g;
}

// ---------------------------------------------------------------------------
// construction

namespace {

struct Layout {
  // 0-based grid coordinates of the structural rows and columns
  std::vector<int> t_row, p_row;      // per p-rank 1..a (index rank-1)
  std::vector<int> conn_row, q_row;   // conn_row per y->y arc j (index j-1, j <= b-t)
  std::vector<int> f_col, d_col;      // f per p-rank; d per x->x arc (index i-1, i <= a-t)
  std::vector<int> q_col, u_col;      // per q-rank 1..b
};

Layout make_layout(const OrbitCombinatorics& oc) {
  const int a = oc.a, b = oc.b, t = oc.t;
  Layout ly;
  ly.t_row.resize(static_cast<size_t>(a));
  ly.p_row.resize(static_cast<size_t>(a));
  ly.f_col.resize(static_cast<size_t>(a));
  for (int i = 1; i <= a; ++i) {
    ly.t_row[static_cast<size_t>(i - 1)] = a - i;
    ly.p_row[static_cast<size_t>(i - 1)] = a + i - 1;
    ly.f_col[static_cast<size_t>(i - 1)] = a - i;
  }
  ly.conn_row.resize(static_cast<size_t>(b - t));
  ly.d_col.resize(static_cast<size_t>(a - t));
  for (int j = 1; j <= b - t; ++j) ly.conn_row[static_cast<size_t>(j - 1)] = 2 * a + (b - t - j);
  for (int i = 1; i <= a - t; ++i) ly.d_col[static_cast<size_t>(i - 1)] = a + i - 1;
  ly.q_row.resize(static_cast<size_t>(b));
  ly.q_col.resize(static_cast<size_t>(b));
  ly.u_col.resize(static_cast<size_t>(b));
  for (int j = 1; j <= b; ++j) {
    ly.q_row[static_cast<size_t>(j - 1)] = 2 * a + (b - t) + (j - 1);
    ly.q_col[static_cast<size_t>(j - 1)] = 2 * a - t + (b - j);
    ly.u_col[static_cast<size_t>(j - 1)] = 2 * a - t + b + (j - 1);
  }
  return ly;
}

[[noreturn]] void construction_failure(const OrbitCombinatorics& oc, const std::string& what) {
  fail(ErrorCode::ConstructionFailure, what + " for '" + oc.word.letters() + "'");
}

void validate_built_grid(const GridDiagram& g, const OrbitCombinatorics& oc);

}  // namespace

GridDiagram build_grid(const OrbitCombinatorics& oc) {
  const int a = oc.a, b = oc.b, t = oc.t;
  const int L = a + b;
  const int n = 2 * a + 2 * b - t;
  const Layout ly = make_layout(oc);
  const std::string& s = oc.word.letters();

  GridDiagram g;
  g.n_ = n;
  g.x_col_.assign(static_cast<size_t>(n), -1);
  g.o_col_.assign(static_cast<size_t>(n), -1);

  auto put_x = [&](int r, int c) {
    if (g.x_col_[static_cast<size_t>(r)] != -1) construction_failure(oc, "P1: two X in one row");
    g.x_col_[static_cast<size_t>(r)] = c;
  };
  auto put_o = [&](int r, int c) {
    if (g.o_col_[static_cast<size_t>(r)] != -1) construction_failure(oc, "P1: two O in one row");
    g.o_col_[static_cast<size_t>(r)] = c;
  };

  // left arc of p_i: incoming X, upward first stroke, top run; then either
  // the long vertical (x->y) or a downward second stroke plus connector row.
  int conn_count = 0;  // x->x arcs seen, for indexing second strokes
  for (int i = 1; i <= a; ++i) {
    const int pos = oc.position_of_p(i);
    const int next = (pos + 1) % L;
    put_x(ly.p_row[static_cast<size_t>(i - 1)], ly.f_col[static_cast<size_t>(i - 1)]);
    put_o(ly.t_row[static_cast<size_t>(i - 1)], ly.f_col[static_cast<size_t>(i - 1)]);
    if (s[static_cast<size_t>(next)] == 'y') {
      const int k = a + 1 - i;  // strand index; lands at q_{nu_k}
      const int jq = oc.q_rank[static_cast<size_t>(next)];
      if (i <= a - t || jq != oc.nu[static_cast<size_t>(k - 1)])
        construction_failure(oc, "P1: long vertical landing out of order");
      put_x(ly.t_row[static_cast<size_t>(i - 1)], ly.q_col[static_cast<size_t>(jq - 1)]);
    } else {
      ++conn_count;
      if (i != conn_count) construction_failure(oc, "P1: x->x arcs are not the lowest ranks");
      const int ip = oc.p_rank[static_cast<size_t>(next)];
      put_x(ly.t_row[static_cast<size_t>(i - 1)], ly.d_col[static_cast<size_t>(i - 1)]);
      put_o(ly.p_row[static_cast<size_t>(ip - 1)], ly.d_col[static_cast<size_t>(i - 1)]);
    }
  }

  // right arc of q_j: incoming O, arrival row, upward stroke; then either the
  // long horizontal (y->x) or a connector row and downward connector column.
  for (int j = 1; j <= b; ++j) {
    const int pos = oc.position_of_q(j);
    const int next = (pos + 1) % L;
    int exit_row;
    if (s[static_cast<size_t>(next)] == 'x') {
      const int k = b + 1 - j;  // long horizontal index; lands at p_{mu_k}
      const int ip = oc.p_rank[static_cast<size_t>(next)];
      if (j <= b - t || ip != oc.mu[static_cast<size_t>(k - 1)])
        construction_failure(oc, "P1: long horizontal landing out of order");
      exit_row = ly.p_row[static_cast<size_t>(ip - 1)];
    } else {
      exit_row = ly.conn_row[static_cast<size_t>(j - 1)];
      const int jq = oc.q_rank[static_cast<size_t>(next)];
      put_x(exit_row, ly.q_col[static_cast<size_t>(jq - 1)]);
    }
    put_o(ly.q_row[static_cast<size_t>(j - 1)], ly.q_col[static_cast<size_t>(j - 1)]);
    put_x(ly.q_row[static_cast<size_t>(j - 1)], ly.u_col[static_cast<size_t>(j - 1)]);
    put_o(exit_row, ly.u_col[static_cast<size_t>(j - 1)]);
  }

  check_permutations(n, g.x_col_, g.o_col_, ErrorCode::ConstructionFailure);
  derive_by_column(g.x_row_, g.o_row_, g.x_col_, g.o_col_);

  g.col_roles_.assign(static_cast<size_t>(n), ColumnRole::BShort);
  g.row_roles_.assign(static_cast<size_t>(n), RowRole::BShort);
  for (int c : ly.f_col) g.col_roles_[static_cast<size_t>(c)] = ColumnRole::AShort;
  for (int c : ly.d_col) g.col_roles_[static_cast<size_t>(c)] = ColumnRole::AShort;
  for (int r : ly.t_row) g.row_roles_[static_cast<size_t>(r)] = RowRole::AShort;
  for (int r : ly.p_row) g.row_roles_[static_cast<size_t>(r)] = RowRole::AShort;
  g.long_v_cols_.resize(static_cast<size_t>(t));
  g.long_h_rows_.resize(static_cast<size_t>(t));
  for (int k = 1; k <= t; ++k) {
    const int vc = ly.q_col[static_cast<size_t>(oc.nu[static_cast<size_t>(k - 1)] - 1)];
    const int hr = ly.p_row[static_cast<size_t>(oc.mu[static_cast<size_t>(k - 1)] - 1)];
    g.col_roles_[static_cast<size_t>(vc)] = ColumnRole::LongVertical;
    g.row_roles_[static_cast<size_t>(hr)] = RowRole::LongHorizontal;
    g.long_v_cols_[static_cast<size_t>(k - 1)] = vc;
    g.long_h_rows_[static_cast<size_t>(k - 1)] = hr;
  }

  validate_built_grid(g, oc);
  return g;
}

// ---------------------------------------------------------------------------
// queries

std::vector<Crossing> enumerate_crossings(const GridDiagram& g) {
  const auto cols = vertical_segments(g);
  const auto rows = horizontal_segments(g);
  std::vector<Crossing> out;
  for (const Segment& h : rows) {
    for (const Segment& v : cols) {
      if (h.lo < v.fixed && v.fixed < h.hi && v.lo < h.fixed && h.fixed < v.hi) {
        const bool vlong = g.column_role(v.fixed) == ColumnRole::LongVertical;
        const bool hlong = g.row_role(h.fixed) == RowRole::LongHorizontal;
        Region reg;
        if (vlong && hlong) reg = Region::C;
        else if (hlong) reg = Region::A;
        else if (vlong) reg = Region::B;
        else
          fail(ErrorCode::ShortShortCrossing,
               "short segments intersect at row " + std::to_string(h.fixed) + ", column " +
                   std::to_string(v.fixed));
        out.push_back({h.fixed, v.fixed, reg});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Crossing& l, const Crossing& r) {
              return l.row != r.row ? l.row < r.row : l.col < r.col;
            });
  return out;
}

int winding_number(const GridDiagram& g, GridPoint p) {
  // Segment in column c spans heights (n-hi-1/2, n-lo-1/2); it covers the
  // lattice height y iff lo <= n-y-1 and n-y <= hi, and lies strictly left
  // of x iff c < p.x (the segment sits at c + 1/2 > c).
  const int n = g.n();
  int w = 0;
  for (const Segment& v : vertical_segments(g)) {
    if (v.fixed >= p.x) continue;
    const int r_above = n - p.y - 1;  // row whose center is just above the height
    if (v.lo <= r_above && n - p.y <= v.hi) w += v.forward ? 1 : -1;
  }
  return w;
}

std::vector<GridPoint> x_minus(const GridDiagram& g) {
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<size_t>(g.n()));
  for (int r = 0; r < g.n(); ++r) pts.push_back({g.x_col(r), g.n() - r - 1});
  return pts;
}

std::vector<PlanePoint> x_marker_points(const GridDiagram& g) {
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<size_t>(g.n()));
  for (int r = 0; r < g.n(); ++r)
    pts.push_back({2LL * g.x_col(r) + 1, 2LL * (g.n() - r) - 1});
  return pts;
}

std::vector<PlanePoint> o_marker_points(const GridDiagram& g) {
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<size_t>(g.n()));
  for (int r = 0; r < g.n(); ++r)
    pts.push_back({2LL * g.o_col(r) + 1, 2LL * (g.n() - r) - 1});
  return pts;
}

HalfInt j_pairing(std::span<const PlanePoint> P, std::span<const PlanePoint> Q) {
  long long i_pq = 0, i_qp = 0;
  for (const PlanePoint& p : P)
    for (const PlanePoint& q : Q) {
      if (p.x < q.x && p.y < q.y) ++i_pq;
      if (q.x < p.x && q.y < p.y) ++i_qp;
    }
  return HalfInt{i_pq + i_qp};
}

int alexander_direct(const GridDiagram& g) {
  long long minus_w = 0;
  for (GridPoint p : x_minus(g)) minus_w -= winding_number(g, p);
  const auto xs = x_marker_points(g);
  const auto os = o_marker_points(g);
  const HalfInt joo = j_pairing(os, os);
  const HalfInt jxx = j_pairing(xs, xs);
  // A = -sum w + (J(O,O) - J(X,X))/2 - (n-1)/2, all over a common denominator 4
  const long long quad = 4 * minus_w + 2 * (joo.twice - jxx.twice) / 2 - 2 * (g.n() - 1);
  if (quad % 4 != 0)
    fail(ErrorCode::NonIntegerGrading, "grading is " + std::to_string(quad) + "/4");
  return static_cast<int>(quad / 4);
}

// ---------------------------------------------------------------------------
// tracing

TraceOrder trace_order(const GridDiagram& g, int start_k) {
  const int n = g.n();
  if (g.trip_number() < 1) fail(ErrorCode::NotLorenz, "diagram has no long strands");
  if (start_k < 1 || start_k > g.trip_number())
    fail(ErrorCode::InternalError, "trace start " + std::to_string(start_k) + " out of range");
  TraceOrder cyc;
  cyc.col_order.assign(static_cast<size_t>(n), -1);
  cyc.row_order.assign(static_cast<size_t>(n), -1);
  const int start_row = g.long_horizontal_row(start_k);
  int c = g.x_col(start_row);
  int step = 0;
  for (int it = 0; it < n; ++it) {
    cyc.col_order[static_cast<size_t>(c)] = step++;
    cyc.col_seq.push_back(c);
    const int r = g.o_row(c);  // X -> O along the column
    cyc.row_order[static_cast<size_t>(r)] = step++;
    c = g.x_col(r);  // O -> X along the row
  }
  if (c != g.x_col(start_row) ||
      std::count(cyc.col_order.begin(), cyc.col_order.end(), -1) != 0)
    fail(ErrorCode::MultipleComponents, "grid segments split into several cycles");
  return cyc;
}

LorenzWord trace_word(const GridDiagram& g) {
  const TraceOrder cyc = trace_order(g);
  std::string word;
  for (int c : cyc.col_seq) {
    const bool upward = g.o_row(c) < g.x_row(c);
    switch (g.column_role(c)) {
      case ColumnRole::AShort:
        if (upward) word.push_back('x');
        break;
      case ColumnRole::BShort:
        if (upward) word.push_back('y');
        break;
      case ColumnRole::LongVertical:
        if (upward) fail(ErrorCode::NotLorenz, "long vertical oriented upward");
        break;
    }
  }
  if (word.empty()) fail(ErrorCode::NotLorenz, "no arc strokes found while tracing");
  LorenzWord w = LorenzWord::parse(word);
  if (w.letters() != word)
    fail(ErrorCode::NotLorenz, "trace reads non-canonical word '" + word + "'");
  return w;
}

// ---------------------------------------------------------------------------
// postcondition validation for built grids

namespace {

void validate_built_grid(const GridDiagram& g, const OrbitCombinatorics& oc) {
  const int a = oc.a, b = oc.b, t = oc.t;
  const InvariantRecord inv = closed_form_invariants(oc);

  if (g.n() != inv.grid_number) construction_failure(oc, "P1: wrong grid size");
  // marker counts: 2a X's on the A side, 2b O's on the B∪C side
  int x_in_a = 0, o_in_bc = 0;
  for (int r = 0; r < g.n(); ++r) {
    if (g.row_role(r) != RowRole::BShort) ++x_in_a;
    if (g.column_role(g.o_col(r)) != ColumnRole::AShort) ++o_in_bc;
  }
  if (x_in_a != 2 * a || o_in_bc != 2 * b)
    construction_failure(oc, "P1: marker counts per region");

  // P2: single component realizing the word
  try {
    if (trace_word(g) != oc.word) construction_failure(oc, "P2: trace reads a different word");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConstructionFailure) throw;
    construction_failure(oc, std::string("P2: ") + e.what());
  }

  // P3: crossings only on long strands, with the closed-form counts
  std::vector<Crossing> crossings;
  try {
    crossings = enumerate_crossings(g);
  } catch (const Error&) {
    construction_failure(oc, "P3: short segments intersect");
  }
  int c_a = 0, c_b = 0, c_c = 0;
  for (const Crossing& cr : crossings) {
    if (cr.region == Region::A) ++c_a;
    else if (cr.region == Region::B) ++c_b;
    else ++c_c;
  }
  if (c_a != inv.crossings_A || c_b != inv.crossings_B || c_c != inv.crossings_C ||
      static_cast<int>(crossings.size()) != inv.crossings_total)
    construction_failure(oc, "P3: regional crossing counts differ from the closed forms");
  for (int k = 1; k <= t; ++k) {
    const int vc = g.long_vertical_column(k);
    const int hr = g.long_horizontal_row(k);
    int on_v = 0, on_h = 0;
    for (const Crossing& cr : crossings) {
      if (cr.region == Region::B && cr.col == vc) ++on_v;
      if (cr.region == Region::A && cr.row == hr) ++on_h;
    }
    if (on_v != (b - oc.nu[static_cast<size_t>(k - 1)]) - (t - k))
      construction_failure(oc, "P3: long vertical " + std::to_string(k) + " crossing count");
    if (on_h != (a - oc.mu[static_cast<size_t>(k - 1)]) - (t - k))
      construction_failure(oc, "P3: long horizontal " + std::to_string(k) + " crossing count");
  }

  // P6: winding sums and marker pairings
  long long sum_a = 0, sum_b = 0;
  for (int r = 0; r < g.n(); ++r) {
    const GridPoint corner{g.x_col(r), g.n() - r - 1};
    const long long mw = -winding_number(g, corner);
    if (g.row_role(r) == RowRole::BShort) sum_b += mw;
    else sum_a += mw;
  }
  const int sum_nu = std::accumulate(oc.nu.begin(), oc.nu.end(), 0);
  const int sum_mu = std::accumulate(oc.mu.begin(), oc.mu.end(), 0);
  if (sum_a != static_cast<long long>(a) * a)
    construction_failure(oc, "P6: A-part winding sum");
  if (sum_b != -static_cast<long long>(b) * b + b + static_cast<long long>(b) * t - sum_nu)
    construction_failure(oc, "P6: B-part winding sum");
  const auto xs = x_marker_points(g);
  const auto os = o_marker_points(g);
  const long long joo2 = j_pairing(os, os).twice;
  const long long jxx2 = j_pairing(xs, xs).twice;
  const long long exp_joo = a * t - sum_mu - t * t + t * (t + 1) / 2 +
                            static_cast<long long>(b) * (2 * b - 1);
  const long long exp_jxx = b * t - sum_nu - t * t + t * (t + 1) / 2 +
                            2LL * a * a - a;
  if (joo2 != 2 * exp_joo) construction_failure(oc, "P6: J(O,O)");
  if (jxx2 != 2 * exp_jxx) construction_failure(oc, "P6: J(X,X)");

  // P4: direct grading equals the closed form
  try {
    if (alexander_direct(g) != inv.alexander_x_minus)
      construction_failure(oc, "P4: direct Alexander grading differs from the closed form");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConstructionFailure) throw;
    construction_failure(oc, std::string("P4: ") + e.what());
  }
}

}  // namespace

}  // namespace lorenz
