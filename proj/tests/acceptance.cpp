// Acceptance suite: one criterion per block, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "lorenz/braid.hpp"
#include "lorenz/enumerate.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/unknotting.hpp"
#include "lorenz/verify.hpp"
#include "lorenz/word.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string summary;
  bool pass;
  double millis;
};

std::vector<Criterion> results;

template <typename Fn>
void criterion(int number, const std::string& title, double budget_ms, Fn&& body) {
  const auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body();
    pass = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (pass && budget_ms > 0 && ms > budget_ms) {
    pass = false;
    detail += " [exceeded " + std::to_string(budget_ms) + " ms budget]";
  }
  results.push_back({number, title, pass, ms});
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " — "
            << detail << "  (" << static_cast<long long>(ms) << " ms)" << std::endl;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("expected " + what);
}

std::string fmt(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

int main() {
  using namespace lorenz;

  criterion(1, "example word xxxyyyxyy reproduces mu, nu, a, b, t, u, c", 1000.0, [] {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse("xxxyyyxyy"));
    expect(oc.mu == std::vector<int>{1, 3}, "mu = (1,3)");
    expect(oc.nu == std::vector<int>{1, 3}, "nu = (1,3)");
    expect(oc.a == 4 && oc.b == 5 && oc.t == 2, "a=4 b=5 t=2");
    const InvariantRecord inv = closed_form_invariants(oc);
    expect(inv.unknotting == 2, "u = 2");
    expect(inv.crossings_total == 12, "c = 12");
    return "mu=" + fmt(oc.mu) + " nu=" + fmt(oc.nu) + " a=4 b=5 t=2 u=2 c=12";
  });

  criterion(2, "trefoil oracle on xyxyy", 1000.0, [] {
    const OrbitCombinatorics oc = orbit_combinatorics(LorenzWord::parse("xyxyy"));
    const InvariantRecord inv = closed_form_invariants(oc);
    expect(inv.unknotting == 1, "u = 1");
    const BraidData braid = lorenz_braid(oc);
    expect(braid.strands == 5, "5 strands");
    expect(braid.k() == 6, "6 crossings");
    expect(positive_braid_unknotting(6, 5) == 1, "(6-5+1)/2 = 1");
    const LaurentPoly delta = alexander_polynomial(braid);
    expect(delta.spread() == 2, "spread 2 = 2u");
    expect(delta.coeff(1) == 1 && delta.coeff(0) == -1 && delta.coeff(-1) == 1,
           "delta = s - 1 + 1/s (trefoil, up to units)");
    return std::string("u=1, braid 5 strands / 6 crossings, delta spread 2");
  });

  CorpusReport corpus;  // shared with criterion 5
  criterion(3, "full identity suite over every primitive necklace, length <= 12", 60000.0, [&] {
    corpus = verify_corpus(12, 1);
    expect(corpus.word_count > 100, "hundreds of classes");
    for (const VerificationReport& rep : corpus.words)
      if (!rep.pass())
        for (const CheckResult& c : rep.checks)
          if (!c.pass)
            throw std::runtime_error(rep.word + " failed " + c.name + ": " + c.detail);
    return std::to_string(corpus.word_count) + " words, every check exact";
  });

  criterion(4, "trip-number-1 words are unknots with empty change sets", 0.0, [] {
    int checked = 0;
    for (const LorenzWord& w : enumerate_words(12, true)) {
      const OrbitCombinatorics oc = orbit_combinatorics(w);
      if (oc.t != 1) continue;
      const InvariantRecord inv = closed_form_invariants(oc);
      expect(inv.unknotting == 0, "u = 0 for " + w.letters());
      const WrongCrossingReport rep = unknotting_set(build_grid(oc));
      expect(rep.changes.empty(), "empty change set for " + w.letters());
      ++checked;
    }
    const GridDiagram g = build_grid(orbit_combinatorics(LorenzWord::parse("xy")));
    expect(g.n() == 3, "xy grid is 3x3");
    expect(enumerate_crossings(g).size() == 1, "xy grid has exactly 1 crossing");
    return std::to_string(checked) + " t=1 words, all u=0; xy is a 3x3 one-crossing grid";
  });

  criterion(5, "repeated and parallel corpus runs are byte-identical", 0.0, [&] {
    const std::string first = corpus_summary_json(corpus);
    const std::string again = corpus_summary_json(verify_corpus(12, 1));
    const std::string parallel = corpus_summary_json(verify_corpus(12, 4));
    expect(first == again, "repeated run byte-identical");
    expect(first == parallel, "parallel run byte-identical");
    return std::to_string(first.size()) + "-byte summary stable across reruns and 4 workers";
  });

  const bool all = std::all_of(results.begin(), results.end(),
                               [](const Criterion& c) { return c.pass; });
  std::cout << (all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES") << std::endl;
  return all ? 0 : 1;
}
