#pragma once

#include <string>
#include <vector>

#include "lorenz/word.hpp"

namespace lorenz {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Outcome of running every identity of the construction on one word: grid
// postconditions, the three unknotting-number routes, the braid oracle and
// the word round trip. Observations are recorded facts that the theory does
// not assert (they never affect pass()).
struct VerificationReport {
  std::string word;
  std::vector<CheckResult> checks;
  std::vector<CheckResult> observations;
  long long j_oo_twice = 0;  // marker pairings, stored doubled (exact)
  long long j_xx_twice = 0;
  double millis = 0.0;

  bool pass() const noexcept;
};

VerificationReport verify_word(const LorenzWord& w);

struct CorpusReport {
  int max_len = 0;
  int word_count = 0;
  bool all_pass = false;
  std::vector<VerificationReport> words;  // ordered by (length, lexicographic)
  double millis = 0.0;
};

// Runs verify_word over every primitive necklace (t = 1 included) up to
// max_len, fanning out over `jobs` workers. The report ordering and content
// are independent of the worker count.
CorpusReport verify_corpus(int max_len, int jobs = 1);

// Canonical JSON renderings. Timings are deliberately omitted so repeated
// and parallel runs serialize byte-identically.
std::string report_json(const VerificationReport& rep);
std::string corpus_summary_json(const CorpusReport& rep);

}  // namespace lorenz
