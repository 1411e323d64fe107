#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "lorenz/enumerate.hpp"
#include "lorenz/error.hpp"
#include "lorenz/word.hpp"

using namespace lorenz;

namespace {

// Independent oracle for the branch-line order: materialize every rotation
// as a string and sort. Deliberately avoids the library's comparator.
struct BruteOrbit {
  int a = 0, b = 0, t = 0;
  std::vector<int> mu, nu;
};

BruteOrbit brute_orbit(const std::string& w) {
  const int L = static_cast<int>(w.size());
  std::vector<std::string> rot(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) rot[static_cast<size_t>(i)] = w.substr(static_cast<size_t>(i)) + w.substr(0, static_cast<size_t>(i));
  std::vector<int> xs, ys;
  for (int i = 0; i < L; ++i) (w[static_cast<size_t>(i)] == 'x' ? xs : ys).push_back(i);
  std::sort(xs.begin(), xs.end(),
            [&](int i, int j) { return rot[static_cast<size_t>(i)] < rot[static_cast<size_t>(j)]; });
  std::sort(ys.begin(), ys.end(),
            [&](int i, int j) { return rot[static_cast<size_t>(i)] > rot[static_cast<size_t>(j)]; });
  BruteOrbit bo;
  bo.a = static_cast<int>(xs.size());
  bo.b = static_cast<int>(ys.size());
  for (int r = 0; r < bo.a; ++r) {
    const int pos = xs[static_cast<size_t>(r)];
    if (w[static_cast<size_t>((pos + L - 1) % L)] == 'y') bo.mu.push_back(r + 1);
  }
  for (int r = 0; r < bo.b; ++r) {
    const int pos = ys[static_cast<size_t>(r)];
    if (w[static_cast<size_t>((pos + L - 1) % L)] == 'x') bo.nu.push_back(r + 1);
  }
  std::sort(bo.mu.begin(), bo.mu.end());
  std::sort(bo.nu.begin(), bo.nu.end());
  bo.t = static_cast<int>(bo.mu.size());
  return bo;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a lorenz::Error");
}

}  // namespace

TEST_CASE("parse canonicalizes to the least rotation") {
  CHECK(LorenzWord::parse("yyx").letters() == "xyy");
  CHECK(LorenzWord::parse("xxxyyyxyy").letters() == "xxxyyyxyy");
  CHECK(LorenzWord::parse("yxyyx").letters() == "xyxyy");
  CHECK(LorenzWord::parse("XyY").letters() == "xyy");  // case-insensitive
  // idempotent
  const LorenzWord w = LorenzWord::parse("yxxxyyyxy");
  CHECK(LorenzWord::parse(w.letters()) == w);
}

TEST_CASE("parse rejects bad input") {
  CHECK(code_of([] { LorenzWord::parse(""); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { LorenzWord::parse("xzy"); }) == ErrorCode::InvalidLetter);
  CHECK(code_of([] { LorenzWord::parse("xxx"); }) == ErrorCode::SingleLetterWord);
  CHECK(code_of([] { LorenzWord::parse("y"); }) == ErrorCode::SingleLetterWord);
  CHECK(code_of([] { LorenzWord::parse("xyxy"); }) == ErrorCode::PeriodicWord);
  CHECK(code_of([] { LorenzWord::parse("xyyxyyxyy"); }) == ErrorCode::PeriodicWord);
}

TEST_CASE("syllable decomposition") {
  auto syl = syllables(LorenzWord::parse("xxxyyyxyy"));
  REQUIRE(syl.size() == 2);
  CHECK(syl[0] == Syllable{3, 3});
  CHECK(syl[1] == Syllable{1, 2});
  CHECK(syllables(LorenzWord::parse("xy")) == std::vector<Syllable>{{1, 1}});
  auto syl2 = syllables(LorenzWord::parse("xyxyy"));
  CHECK(syl2 == std::vector<Syllable>{{1, 1}, {1, 2}});
}

TEST_CASE("orbit combinatorics of the running examples") {
  {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse("xxxyyyxyy"));
    CHECK(oc.a == 4);
    CHECK(oc.b == 5);
    CHECK(oc.t == 2);
    CHECK(oc.mu == std::vector<int>{1, 3});
    CHECK(oc.nu == std::vector<int>{1, 3});
  }
  {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse("xyxyy"));
    CHECK(oc.t == 2);
    CHECK(oc.mu == std::vector<int>{1, 2});
    CHECK(oc.nu == std::vector<int>{1, 2});
  }
  for (const char* t1 : {"xy", "xxy", "xxxyy", "xxxxxxy"}) {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse(t1));
    CHECK(oc.t == 1);
    CHECK(oc.mu == std::vector<int>{1});
    CHECK(oc.nu == std::vector<int>{1});
  }
}

TEST_CASE("orbit combinatorics agrees with the brute-force ranking oracle") {
  for (const LorenzWord& w : enumerate_words(11, true)) {
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    const BruteOrbit bo = brute_orbit(w.letters());
    REQUIRE(oc.a == bo.a);
    REQUIRE(oc.b == bo.b);
    REQUIRE(oc.t == bo.t);
    REQUIRE(oc.mu == bo.mu);
    REQUIRE(oc.nu == bo.nu);
  }
}

TEST_CASE("rotation invariance and letter-swap symmetry") {
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const std::string s = w.letters();
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    for (size_t r = 1; r < s.size(); ++r) {
      const LorenzWord rotated = LorenzWord::parse(s.substr(r) + s.substr(0, r));
      CHECK(rotated == w);  // canonicalization collapses the rotation class
    }
    const OrbitCombinatorics swapped = orbit_combinatorics(w.swapped_xy());
    CHECK(swapped.a == oc.b);
    CHECK(swapped.b == oc.a);
    CHECK(swapped.t == oc.t);
    CHECK(swapped.mu == oc.nu);
    CHECK(swapped.nu == oc.mu);
  }
}

TEST_CASE("the first-return permutation is a single cycle") {
  for (const LorenzWord& w : enumerate_words(10, true)) {
    const OrbitCombinatorics oc = orbit_combinatorics(w);
    const int L = w.length();
    int pos = 0, steps = 0;
    do {
      pos = oc.pi[static_cast<size_t>(pos)];
      ++steps;
    } while (pos != 0 && steps <= L);
    CHECK(steps == L);
  }
}
