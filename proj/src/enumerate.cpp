#include "lorenz/enumerate.hpp"

#include <algorithm>
#include <string>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

// Duval's algorithm: generates all Lyndon words over {x, y} of length at
// most max_len in lexicographic word order.
void lyndon_words(int max_len, std::vector<std::string>& out) {
  std::string w = "x";
  while (true) {
    if (static_cast<int>(w.size()) <= max_len) out.push_back(w);
    // extend periodically to full length, then increment the last letter
    std::string t = w;
    w.clear();
    for (int i = 0; i < max_len; ++i) w.push_back(t[static_cast<size_t>(i) % t.size()]);
    while (!w.empty() && w.back() == 'y') w.pop_back();
    if (w.empty()) break;
    w.back() = 'y';
  }
}

int trip_number(const std::string& w) {
  int t = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'y' && w[(i + 1) % w.size()] == 'x') ++t;
  return t;
}

}  // namespace

std::vector<LorenzWord> enumerate_words(int max_len, bool include_t1) {
  if (max_len < 2 || max_len > 64)
    fail(ErrorCode::BoundTooLarge, "max_len must lie in 2..64, got " + std::to_string(max_len));
  std::vector<std::string> raw;
  lyndon_words(max_len, raw);
  std::sort(raw.begin(), raw.end(), [](const std::string& l, const std::string& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  std::vector<LorenzWord> out;
  for (const std::string& w : raw) {
    if (w.size() < 2) continue;  // the single-letter Lyndon words x and y
    if (!include_t1 && trip_number(w) == 1) continue;
    out.push_back(LorenzWord::parse(w));
  }
  return out;
}

}  // namespace lorenz
