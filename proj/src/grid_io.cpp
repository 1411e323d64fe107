#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/grid.hpp"

#include <json.hpp>

namespace lorenz {

GridFormat grid_format_from_string(std::string_view name) {
  if (name == "ascii") return GridFormat::Ascii;
  if (name == "svg") return GridFormat::Svg;
  if (name == "json") return GridFormat::Json;
  fail(ErrorCode::UnknownFormat, "unknown grid format '" + std::string(name) + "'");
}

namespace {

std::string role_name(ColumnRole r) {
  switch (r) {
    case ColumnRole::AShort: return "A_short";
    case ColumnRole::LongVertical: return "C_long_vertical";
    case ColumnRole::BShort: return "B_short";
  }
  return "?";
}

std::string role_name(RowRole r) {
  switch (r) {
    case RowRole::AShort: return "A_short";
    case RowRole::LongHorizontal: return "C_long_horizontal";
    case RowRole::BShort: return "B_short";
  }
  return "?";
}

std::string to_ascii(const GridDiagram& g) {
  std::string out;
  const std::string dot = "·";
  for (int r = 0; r < g.n(); ++r) {
    for (int c = 0; c < g.n(); ++c) {
      if (g.x_col(r) == c) out += 'X';
      else if (g.o_col(r) == c) out += 'O';
      else out += dot;
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const GridDiagram& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  std::vector<int> xs, os, lv, lh;
  std::vector<std::string> crs, rrs;
  for (int r = 0; r < g.n(); ++r) {
    xs.push_back(g.x_col(r) + 1);  // serialized 1-based
    os.push_back(g.o_col(r) + 1);
    rrs.push_back(role_name(g.row_role(r)));
  }
  for (int c = 0; c < g.n(); ++c) crs.push_back(role_name(g.column_role(c)));
  for (int k = 1; k <= g.trip_number(); ++k) {
    lv.push_back(g.long_vertical_column(k) + 1);
    lh.push_back(g.long_horizontal_row(k) + 1);
  }
  j["X"] = xs;
  j["O"] = os;
  j["column_roles"] = crs;
  j["row_roles"] = rrs;
  j["long_vertical_order"] = lv;
  j["long_horizontal_order"] = lh;
  return j.dump(2) + "\n";
}

// Fixed 40px cells; verticals drawn in front, horizontals broken at
// crossings; every segment ends in an arrowhead showing orientation.
std::string to_svg(const GridDiagram& g) {
  const int cell = 40;
  const int margin = 20;
  const int gap = 6;
  const int n = g.n();
  const int size = 2 * margin + n * cell;
  auto cx = [&](int col) { return margin + col * cell + cell / 2; };
  auto cy = [&](int row) { return margin + row * cell + cell / 2; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  for (int i = 0; i <= n; ++i) {
    const int v = margin + i * cell;
    svg << "  <line x1=\"" << v << "\" y1=\"" << margin << "\" x2=\"" << v << "\" y2=\""
        << margin + n * cell << "\" stroke=\"#dddddd\"/>\n";
    svg << "  <line x1=\"" << margin << "\" y1=\"" << v << "\" x2=\"" << margin + n * cell
        << "\" y2=\"" << v << "\" stroke=\"#dddddd\"/>\n";
  }

  const auto crossings = enumerate_crossings(g);
  // horizontal segments, split around each crossing on them
  for (int r = 0; r < n; ++r) {
    const int c_from = g.o_col(r), c_to = g.x_col(r);
    const int lo = std::min(c_from, c_to), hi = std::max(c_from, c_to);
    std::vector<int> cuts;
    for (const Crossing& cr : crossings)
      if (cr.row == r) cuts.push_back(cr.col);
    std::sort(cuts.begin(), cuts.end());
    int x_start = cx(lo);
    const int y = cy(r);
    std::vector<std::pair<int, int>> pieces;
    for (int cut : cuts) {
      pieces.emplace_back(x_start, cx(cut) - gap);
      x_start = cx(cut) + gap;
    }
    pieces.emplace_back(x_start, cx(hi));
    const bool rightward = c_to > c_from;
    for (size_t i = 0; i < pieces.size(); ++i) {
      const bool last_piece = rightward ? (i + 1 == pieces.size()) : (i == 0);
      const int x1 = rightward ? pieces[i].first : pieces[i].second;
      const int x2 = rightward ? pieces[i].second : pieces[i].first;
      svg << "  <line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
          << "\" stroke=\"black\" stroke-width=\"2\""
          << (last_piece ? " marker-end=\"url(#arrow)\"" : "") << "/>\n";
    }
  }
  // vertical segments, unbroken (they pass in front)
  for (int c = 0; c < n; ++c) {
    const int r_from = g.x_row(c), r_to = g.o_row(c);
    svg << "  <line x1=\"" << cx(c) << "\" y1=\"" << cy(r_from) << "\" x2=\"" << cx(c)
        << "\" y2=\"" << cy(r_to)
        << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
  }
  // markers
  for (int r = 0; r < n; ++r) {
    const int xo = cx(g.o_col(r)), xx = cx(g.x_col(r)), y = cy(r);
    svg << "  <circle cx=\"" << xo << "\" cy=\"" << y
        << "\" r=\"8\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "  <line x1=\"" << xx - 6 << "\" y1=\"" << y - 6 << "\" x2=\"" << xx + 6
        << "\" y2=\"" << y + 6 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg << "  <line x1=\"" << xx - 6 << "\" y1=\"" << y + 6 << "\" x2=\"" << xx + 6
        << "\" y2=\"" << y - 6 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string export_grid(const GridDiagram& g, GridFormat format) {
  switch (format) {
    case GridFormat::Ascii: return to_ascii(g);
    case GridFormat::Json: return to_json_text(g);
    case GridFormat::Svg: return to_svg(g);
  }
  fail(ErrorCode::UnknownFormat, "unhandled grid format");
}

GridDiagram grid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadGridData, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    auto get_cols = [&](const char* key) {
      std::vector<int> v = j.at(key).get<std::vector<int>>();
      for (int& c : v) c -= 1;  // serialized 1-based
      return v;
    };
    std::vector<int> xs = get_cols("X"), os = get_cols("O");
    std::vector<int> lv = get_cols("long_vertical_order"), lh = get_cols("long_horizontal_order");
    std::vector<ColumnRole> crs;
    for (const auto& name : j.at("column_roles")) {
      const std::string s = name.get<std::string>();
      if (s == "A_short") crs.push_back(ColumnRole::AShort);
      else if (s == "C_long_vertical") crs.push_back(ColumnRole::LongVertical);
      else if (s == "B_short") crs.push_back(ColumnRole::BShort);
      else fail(ErrorCode::BadGridData, "unknown column role '" + s + "'");
    }
    std::vector<RowRole> rrs;
    for (const auto& name : j.at("row_roles")) {
      const std::string s = name.get<std::string>();
      if (s == "A_short") rrs.push_back(RowRole::AShort);
      else if (s == "C_long_horizontal") rrs.push_back(RowRole::LongHorizontal);
      else if (s == "B_short") rrs.push_back(RowRole::BShort);
      else fail(ErrorCode::BadGridData, "unknown row role '" + s + "'");
    }
    return GridDiagram::from_parts(n, std::move(xs), std::move(os), std::move(crs),
                                   std::move(rrs), std::move(lv), std::move(lh));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadGridData, std::string("grid JSON schema: ") + e.what());
  }
}

}  // namespace lorenz
