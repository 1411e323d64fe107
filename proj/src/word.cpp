#include "lorenz/word.hpp"

#include <algorithm>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::SingleLetterWord: return "SingleLetterWord";
    case ErrorCode::PeriodicWord: return "PeriodicWord";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::MultipleComponents: return "MultipleComponents";
    case ErrorCode::NotLorenz: return "NotLorenz";
    case ErrorCode::ShortShortCrossing: return "ShortShortCrossing";
    case ErrorCode::NonIntegerGrading: return "NonIntegerGrading";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::BadGridData: return "BadGridData";
    case ErrorCode::ProcedureMismatch: return "ProcedureMismatch";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

namespace {

// Booth's least-rotation algorithm, O(n).
size_t least_rotation_start(const std::string& s) {
  const size_t n = s.size();
  std::string d = s + s;
  std::vector<ptrdiff_t> f(d.size(), -1);
  size_t k = 0;
  for (size_t j = 1; j < d.size(); ++j) {
    char c = d[j];
    ptrdiff_t i = f[j - k - 1];
    while (i != -1 && c != d[k + static_cast<size_t>(i) + 1]) {
      if (c < d[k + static_cast<size_t>(i) + 1]) k = j - static_cast<size_t>(i) - 1;
      i = f[static_cast<size_t>(i)];
    }
    if (c != d[k + static_cast<size_t>(i) + 1]) {
      if (c < d[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

bool is_primitive(const std::string& s) {
  // A word equal to one of its nontrivial rotations is a proper power.
  return (s + s).find(s, 1) == s.size();
}

}  // namespace

LorenzWord LorenzWord::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::EmptyWord, "a Lorenz word needs at least one x and one y");
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == 'x' || c == 'X') s.push_back('x');
    else if (c == 'y' || c == 'Y') s.push_back('y');
    else fail(ErrorCode::InvalidLetter, "letter '" + std::string(1, c) + "' is not in {x, y}");
  }
  const bool has_x = s.find('x') != std::string::npos;
  const bool has_y = s.find('y') != std::string::npos;
  if (!has_x || !has_y)
    fail(ErrorCode::SingleLetterWord,
         "'" + s + "' names an ear boundary orbit, not a knot");
  if (!is_primitive(s))
    fail(ErrorCode::PeriodicWord, "'" + s + "' is a proper power and names a multi-traversed orbit");
  const size_t k = least_rotation_start(s);
  return LorenzWord(s.substr(k) + s.substr(0, k));
}

int LorenzWord::count_x() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'x'));
}

int LorenzWord::count_y() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'y'));
}

LorenzWord LorenzWord::swapped_xy() const {
  std::string s = letters_;
  for (char& c : s) c = (c == 'x') ? 'y' : 'x';
  return parse(s);
}

std::vector<Syllable> syllables(const LorenzWord& w) {
  const std::string& s = w.letters();
  std::vector<Syllable> out;
  size_t i = 0;
  while (i < s.size()) {
    Syllable syl;
    while (i < s.size() && s[i] == 'x') { ++syl.alpha; ++i; }
    while (i < s.size() && s[i] == 'y') { ++syl.beta; ++i; }
    out.push_back(syl);
  }
  // canonical words start with x and end with y, so the loop always closes
  // a full syllable; alpha,beta >= 1 by construction.
  return out;
}

namespace {

// Compares rotations starting at i and j over one period of the doubled word.
// x < y. Equality is impossible for a primitive word.
int compare_rotations(const std::string& d, int len, int i, int j) {
  if (i == j) return 0;
  for (int k = 0; k < len; ++k) {
    char ci = d[static_cast<size_t>(i + k)];
    char cj = d[static_cast<size_t>(j + k)];
    if (ci != cj) return ci < cj ? -1 : 1;
  }
  fail(ErrorCode::InternalError, "tied rotations in a primitive word");
}

}  // namespace

OrbitCombinatorics orbit_combinatorics(const LorenzWord& w) {
  OrbitCombinatorics oc;
  oc.word = w;
  const std::string& s = w.letters();
  const int L = w.length();
  const std::string d = s + s;
  oc.a = w.count_x();
  oc.b = w.count_y();

  std::vector<int> xpos, ypos;
  for (int i = 0; i < L; ++i) (s[static_cast<size_t>(i)] == 'x' ? xpos : ypos).push_back(i);

  auto less = [&](int i, int j) { return compare_rotations(d, L, i, j) < 0; };
  std::sort(xpos.begin(), xpos.end(), less);                          // ascending
  std::sort(ypos.begin(), ypos.end(), [&](int i, int j) { return less(j, i); });  // descending

  oc.p_rank.assign(static_cast<size_t>(L), 0);
  oc.q_rank.assign(static_cast<size_t>(L), 0);
  oc.pos_of_p_ = xpos;
  oc.pos_of_q_ = ypos;
  for (int r = 0; r < oc.a; ++r) oc.p_rank[static_cast<size_t>(xpos[static_cast<size_t>(r)])] = r + 1;
  for (int r = 0; r < oc.b; ++r) oc.q_rank[static_cast<size_t>(ypos[static_cast<size_t>(r)])] = r + 1;

  for (const Syllable& syl : syllables(w)) {
    oc.alpha.push_back(syl.alpha);
    oc.beta.push_back(syl.beta);
  }
  oc.t = static_cast<int>(oc.alpha.size());

  // branch position of the point at word position i
  auto branch_of_pos = [&](int i) {
    return s[static_cast<size_t>(i)] == 'x' ? oc.p_rank[static_cast<size_t>(i)] - 1
                                            : oc.a + oc.b - oc.q_rank[static_cast<size_t>(i)];
  };
  oc.pi.assign(static_cast<size_t>(L), 0);
  for (int i = 0; i < L; ++i)
    oc.pi[static_cast<size_t>(branch_of_pos(i))] = branch_of_pos((i + 1) % L);

  // mu: p-ranks of x positions whose cyclic predecessor is y; nu symmetric.
  for (int i = 0; i < L; ++i) {
    char prev = s[static_cast<size_t>((i + L - 1) % L)];
    if (s[static_cast<size_t>(i)] == 'x' && prev == 'y') oc.mu.push_back(oc.p_rank[static_cast<size_t>(i)]);
    if (s[static_cast<size_t>(i)] == 'y' && prev == 'x') oc.nu.push_back(oc.q_rank[static_cast<size_t>(i)]);
  }
  std::sort(oc.mu.begin(), oc.mu.end());
  std::sort(oc.nu.begin(), oc.nu.end());

  // invariants
  auto check = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InternalError, std::string("orbit combinatorics: ") + what);
  };
  check(oc.a + oc.b == L, "a + b = L");
  check(std::accumulate(oc.alpha.begin(), oc.alpha.end(), 0) == oc.a, "a = sum alpha");
  check(std::accumulate(oc.beta.begin(), oc.beta.end(), 0) == oc.b, "b = sum beta");
  check(oc.t >= 1, "t >= 1");
  check(static_cast<int>(oc.mu.size()) == oc.t && static_cast<int>(oc.nu.size()) == oc.t,
        "|mu| = |nu| = t");
  check(oc.mu.front() == 1 && oc.nu.front() == 1, "mu_1 = nu_1 = 1");
  for (int k = 1; k < oc.t; ++k)
    check(oc.mu[static_cast<size_t>(k)] > oc.mu[static_cast<size_t>(k - 1)] &&
              oc.nu[static_cast<size_t>(k)] > oc.nu[static_cast<size_t>(k - 1)],
          "mu, nu strictly increasing");
  // pi is order-preserving on each half of the branch line
  for (int r = 2; r <= oc.a; ++r)
    check(oc.pi[static_cast<size_t>(oc.branch_of_p(r - 1))] < oc.pi[static_cast<size_t>(oc.branch_of_p(r))],
          "pi monotone on I1");
  for (int r = 2; r <= oc.b; ++r)
    check(oc.pi[static_cast<size_t>(oc.branch_of_q(r))] < oc.pi[static_cast<size_t>(oc.branch_of_q(r - 1))],
          "pi monotone on I2");
  // the p-points that are images of q-points carry exactly the ranks mu
  {
    std::vector<int> img;
    for (int r = 1; r <= oc.b; ++r) {
      int to = oc.pi[static_cast<size_t>(oc.branch_of_q(r))];
      if (to < oc.a) img.push_back(to + 1);
    }
    std::sort(img.begin(), img.end());
    check(img == oc.mu, "images of I2 land at ranks mu");
    std::vector<int> img2;
    for (int r = 1; r <= oc.a; ++r) {
      int to = oc.pi[static_cast<size_t>(oc.branch_of_p(r))];
      if (to >= oc.a) img2.push_back(oc.a + oc.b - to);
    }
    std::sort(img2.begin(), img2.end());
    check(img2 == oc.nu, "images of I1 land at ranks nu");
  }
  return oc;
}

}  // namespace lorenz
