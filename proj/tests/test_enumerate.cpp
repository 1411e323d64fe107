#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "lorenz/enumerate.hpp"
#include "lorenz/error.hpp"
#include "lorenz/verify.hpp"
#include "lorenz/word.hpp"

using namespace lorenz;

namespace {

std::vector<std::string> names(const std::vector<LorenzWord>& ws) {
  std::vector<std::string> out;
  for (const LorenzWord& w : ws) out.push_back(w.letters());
  return out;
}

// Moebius-formula oracle: primitive binary necklaces of length n (for n >= 2
// none of them are single-letter)
long long primitive_necklaces(int n) {
  auto moebius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    }
    if (m > 1) result = -result;
    return result;
  };
  long long sum = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) sum += moebius(d) * (1LL << (n / d));
  return sum / n;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(names(enumerate_words(2, true)) == std::vector<std::string>{"xy"});
  CHECK(names(enumerate_words(3, true)) == std::vector<std::string>{"xy", "xxy", "xyy"});
  // every length-<=4 word has trip number 1, so the filtered list is empty
  CHECK(enumerate_words(4, false).empty());
  CHECK(names(enumerate_words(5, false)) == std::vector<std::string>{"xxyxy", "xyxyy"});
}

TEST_CASE("xyxyy appears exactly once up to length 5") {
  const auto ws = names(enumerate_words(5, true));
  CHECK(std::count(ws.begin(), ws.end(), "xyxyy") == 1);
}

TEST_CASE("counts match the Moebius necklace formula") {
  for (int n = 2; n <= 14; ++n) {
    const auto ws = enumerate_words(n, true);
    long long expected = 0;
    for (int len = 2; len <= n; ++len) expected += primitive_necklaces(len);
    CHECK(static_cast<long long>(ws.size()) == expected);
  }
}

TEST_CASE("enumeration is deterministic, deduplicated and ordered") {
  const auto ws = names(enumerate_words(12, true));
  auto sorted = ws;
  std::sort(sorted.begin(), sorted.end(), [](const std::string& l, const std::string& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  CHECK(ws == sorted);
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(enumerate_words(1, true), Error);
  CHECK_THROWS_AS(enumerate_words(65, true), Error);
}

TEST_CASE("verify_word passes on the running examples") {
  for (const char* word : {"xxxyyyxyy", "xyxyy", "xxy"}) {
    const VerificationReport rep = verify_word(LorenzWord::parse(word));
    CHECK(rep.pass());
  }
}

TEST_CASE("parallel and serial corpus runs serialize identically") {
  const CorpusReport serial = verify_corpus(8, 1);
  const CorpusReport parallel = verify_corpus(8, 4);
  CHECK(serial.all_pass);
  CHECK(corpus_summary_json(serial) == corpus_summary_json(parallel));
}

TEST_CASE("per-word report JSON carries exact pairing values") {
  const VerificationReport rep = verify_word(LorenzWord::parse("xxxyyyxyy"));
  CHECK(rep.j_oo_twice == 2 * 48);
  const std::string j = report_json(rep);
  CHECK(j.find("\"j_pairings\"") != std::string::npos);
  CHECK(j.find("\"OO\": 48") != std::string::npos);
  CHECK(j.find("\"XX\": 33") != std::string::npos);
}
