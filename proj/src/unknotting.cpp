#include "lorenz/unknotting.hpp"

#include <algorithm>
#include <string>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

int trip_or_throw(const GridDiagram& g) {
  const int t = g.trip_number();
  if (t < 1) fail(ErrorCode::NotLorenz, "diagram has no long strands");
  return t;
}

}  // namespace

StringLabeling string_labels(const GridDiagram& g, CutMode mode) {
  const int n = g.n();
  const int t = trip_or_throw(g);
  StringLabeling lab;
  lab.mode = mode;
  lab.column_string.assign(static_cast<size_t>(n), 0);
  lab.row_string.assign(static_cast<size_t>(n), 0);

  // walk from the X of long horizontal 1, bumping the string index each time
  // the trace arrives at the X left end of a long horizontal (a cut point)
  int cur = 1;
  int c = g.x_col(g.long_horizontal_row(1));
  for (int it = 0; it < n; ++it) {
    lab.column_string[static_cast<size_t>(c)] = cur;
    const int r = g.o_row(c);
    lab.row_string[static_cast<size_t>(r)] = cur;
    if (g.row_role(r) == RowRole::LongHorizontal) ++cur;  // next X is a cut
    c = g.x_col(r);
  }
  if (cur != t + 1)
    fail(ErrorCode::InternalError, "string labeling found " + std::to_string(cur - 1) +
                                       " cuts instead of " + std::to_string(t));

  if (mode == CutMode::AtORightEnds) {
    // moving the cuts from the X ends to the O ends hands each long
    // horizontal to the following string; everything else keeps its label
    for (int k = 1; k <= t; ++k) {
      int& s = lab.row_string[static_cast<size_t>(g.long_horizontal_row(k))];
      s = s % t + 1;
    }
  }
  return lab;
}

WrongCrossingReport classify_by_trace(const GridDiagram& g) {
  trip_or_throw(g);
  const TraceOrder order = trace_order(g);
  const StringLabeling lab_b = string_labels(g, CutMode::AtXLeftEnds);
  const StringLabeling lab_a = string_labels(g, CutMode::AtORightEnds);

  WrongCrossingReport rep;
  for (const Crossing& cr : enumerate_crossings(g)) {
    LabeledCrossing lc;
    lc.crossing = cr;
    lc.string_vertical = lab_b.column_string[static_cast<size_t>(cr.col)];
    lc.string_horizontal = lab_b.row_string[static_cast<size_t>(cr.row)];
    lc.wrong = order.col_order[static_cast<size_t>(cr.col)] >
               order.row_order[static_cast<size_t>(cr.row)];
    const bool in_bc = cr.region != Region::A;
    const bool in_ac = cr.region != Region::B;
    if (in_bc) {
      ++rep.c_BC;
      if (lc.string_vertical == lc.string_horizontal) ++rep.self_B;
      if (lc.wrong) ++rep.u_BC;
    }
    if (in_ac) {
      ++rep.c_AC;
      const int sa_v = lab_a.column_string[static_cast<size_t>(cr.col)];
      const int sa_h = lab_a.row_string[static_cast<size_t>(cr.row)];
      if (sa_v == sa_h) ++rep.self_A;
      if (lc.wrong) ++rep.u_AC;
    }
    if (lc.wrong) {
      ++rep.U;
      rep.changes.push_back(cr);
    }
    rep.crossings.push_back(lc);
  }
  return rep;
}

int wrong_count_from_start(const GridDiagram& g, int start_k) {
  trip_or_throw(g);
  const TraceOrder order = trace_order(g, start_k);
  int wrong = 0;
  for (const Crossing& cr : enumerate_crossings(g))
    if (order.col_order[static_cast<size_t>(cr.col)] >
        order.row_order[static_cast<size_t>(cr.row)])
      ++wrong;
  return wrong;
}

namespace {

EpsilonDelta epsilon_delta_impl(const std::vector<int>& vcol, const std::vector<int>& hrow_b) {
  const int t = static_cast<int>(vcol.size());
  EpsilonDelta ed;
  ed.eps.assign(static_cast<size_t>(t), std::vector<int>(static_cast<size_t>(t), 0));
  ed.delta.assign(static_cast<size_t>(t), std::vector<int>(static_cast<size_t>(t), 0));
  if (t < 2) return ed;

  // recut numeration: string s's long horizontal is the one string s-1 owned
  auto hrow_a = [&](int s) { return hrow_b[static_cast<size_t>((s + t - 2) % t)]; };

  for (int i = 1; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      // upper-left corner of the rectangle spanned by the two strings'
      // long strands: the higher horizontal meets the lefter vertical
      const int sv_left = vcol[static_cast<size_t>(i - 1)] < vcol[static_cast<size_t>(j - 1)] ? i : j;
      const int sh_up =
          hrow_b[static_cast<size_t>(i - 1)] < hrow_b[static_cast<size_t>(j - 1)] ? i : j;
      int e = 0;
      if (sv_left != sh_up) e = sv_left > sh_up ? 1 : -1;
      ed.eps[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e;
      ed.eps[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = e;
      ed.N_B += e;

      // lower-right corner under the recut numeration
      const int sv_right = vcol[static_cast<size_t>(i - 1)] > vcol[static_cast<size_t>(j - 1)] ? i : j;
      const int sh_down = hrow_a(i) > hrow_a(j) ? i : j;
      int d = 0;
      if (sh_down != sv_right) d = sh_down > sv_right ? 1 : -1;
      ed.delta[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = d;
      ed.delta[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = d;
      ed.N_A += d;
    }
  }
  return ed;
}

}  // namespace

EpsilonDelta epsilon_delta(const GridDiagram& g) {
  const int t = trip_or_throw(g);
  const StringLabeling lab = string_labels(g, CutMode::AtXLeftEnds);
  std::vector<int> vcol(static_cast<size_t>(t), -1), hrow(static_cast<size_t>(t), -1);
  for (int k = 1; k <= t; ++k) {
    const int vc = g.long_vertical_column(k);
    const int hr = g.long_horizontal_row(k);
    vcol[static_cast<size_t>(lab.column_string[static_cast<size_t>(vc)] - 1)] = vc;
    hrow[static_cast<size_t>(lab.row_string[static_cast<size_t>(hr)] - 1)] = hr;
  }
  if (std::count(vcol.begin(), vcol.end(), -1) != 0 ||
      std::count(hrow.begin(), hrow.end(), -1) != 0)
    fail(ErrorCode::InternalError, "each string must own one long vertical and one horizontal");
  return epsilon_delta_impl(vcol, hrow);
}

EpsilonDelta epsilon_delta_config(const std::vector<int>& v_col_of_string,
                                  const std::vector<int>& h_row_of_string_b) {
  if (v_col_of_string.size() != h_row_of_string_b.size())
    fail(ErrorCode::InternalError, "configuration sizes differ");
  return epsilon_delta_impl(v_col_of_string, h_row_of_string_b);
}

WrongCrossingReport unknotting_set(const GridDiagram& g) {
  const int t = trip_or_throw(g);
  WrongCrossingReport rep = classify_by_trace(g);
  const EpsilonDelta ed = epsilon_delta(g);
  rep.N_A = ed.N_A;
  rep.N_B = ed.N_B;

  // derive a and b back from the diagram: a left arcs and b right arcs each
  // contribute one upward stroke
  int a = 0, b = 0;
  for (int c = 0; c < g.n(); ++c) {
    const bool upward = g.o_row(c) < g.x_row(c);
    if (!upward) continue;
    if (g.column_role(c) == ColumnRole::AShort) ++a;
    else if (g.column_role(c) == ColumnRole::BShort) ++b;
  }

  auto mismatch = [&](const std::string& what) {
    fail(ErrorCode::ProcedureMismatch, what);
  };
  if (rep.N_B - rep.N_A != -(t - 1)) mismatch("N_B - N_A != -(t-1)");
  if (rep.self_B != b) mismatch("self-crossings in B∪C differ from b");
  if (rep.self_A != a) mismatch("self-crossings in A∪C differ from a");
  if (2 * rep.u_BC != rep.c_BC - b + rep.N_B)
    mismatch("u_BC does not satisfy (c_BC - b + N_B)/2");
  if (2 * rep.u_AC != rep.c_AC - a - rep.N_A)
    mismatch("u_AC does not satisfy (c_AC - a - N_A)/2");
  if (rep.U != rep.u_AC + rep.u_BC - t * (t - 1) / 2)
    mismatch("U != u_AC + u_BC - t(t-1)/2");
  if (static_cast<int>(rep.changes.size()) != rep.U) mismatch("|changes| != U");

  // the trace count must agree with the closed form of the traced word
  const InvariantRecord inv = closed_form_invariants(orbit_combinatorics(trace_word(g)));
  if (rep.U != inv.unknotting) mismatch("trace count differs from the closed-form u");
  return rep;
}

}  // namespace lorenz
