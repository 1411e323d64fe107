#include "lorenz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "lorenz/braid.hpp"
#include "lorenz/enumerate.hpp"
#include "lorenz/error.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/unknotting.hpp"

#include <json.hpp>

namespace lorenz {

bool VerificationReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

class Checker {
 public:
  explicit Checker(VerificationReport& rep) : rep_(rep) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    rep_.checks.push_back({name, ok, detail});
  }

  template <typename T>
  void check_eq(const std::string& name, const T& got, const T& want) {
    const bool ok = got == want;
    check(name, ok, ok ? "" : "got " + to_str(got) + ", want " + to_str(want));
  }

  void observe(const std::string& name, bool value, const std::string& detail = "") {
    rep_.observations.push_back({name, value, detail});
  }

 private:
  template <typename T>
  static std::string to_str(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) return v;
    else return std::to_string(v);
  }
  VerificationReport& rep_;
};

}  // namespace

VerificationReport verify_word(const LorenzWord& w) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.word = w.letters();
  Checker ck(rep);

  const OrbitCombinatorics oc = orbit_combinatorics(w);
  const InvariantRecord inv = closed_form_invariants(oc);
  const int sum_mu = std::accumulate(oc.mu.begin(), oc.mu.end(), 0);
  const int sum_nu = std::accumulate(oc.nu.begin(), oc.nu.end(), 0);

  // the grid and its postconditions; build_grid re-validates internally, the
  // explicit checks below keep the report granular
  try {
    const GridDiagram g = build_grid(oc);
    ck.check_eq("grid.P1.size", g.n(), inv.grid_number);
    ck.check_eq("grid.P2.round_trip", trace_word(g).letters(), w.letters());

    const auto crossings = enumerate_crossings(g);
    int c_a = 0, c_b = 0, c_c = 0;
    for (const Crossing& cr : crossings)
      (cr.region == Region::A ? c_a : cr.region == Region::B ? c_b : c_c) += 1;
    ck.check_eq("grid.P3.crossings_A", c_a, inv.crossings_A);
    ck.check_eq("grid.P3.crossings_B", c_b, inv.crossings_B);
    ck.check_eq("grid.P3.crossings_C", c_c, inv.crossings_C);
    ck.check_eq("grid.P3.crossings_total", static_cast<int>(crossings.size()),
                inv.crossings_total);
    bool per_strand = true;
    for (int k = 1; k <= oc.t; ++k) {
      int on_v = 0, on_h = 0;
      for (const Crossing& cr : crossings) {
        if (cr.region == Region::B && cr.col == g.long_vertical_column(k)) ++on_v;
        if (cr.region == Region::A && cr.row == g.long_horizontal_row(k)) ++on_h;
      }
      per_strand = per_strand && on_v == (oc.b - oc.nu[static_cast<size_t>(k - 1)]) - (oc.t - k) &&
                   on_h == (oc.a - oc.mu[static_cast<size_t>(k - 1)]) - (oc.t - k);
    }
    ck.check("grid.P3.per_strand", per_strand);

    ck.check_eq("grid.P4.alexander_direct", alexander_direct(g), inv.alexander_x_minus);

    long long sum_a = 0, sum_b = 0;
    for (int r = 0; r < g.n(); ++r) {
      const long long mw = -winding_number(g, {g.x_col(r), g.n() - r - 1});
      (g.row_role(r) == RowRole::BShort ? sum_b : sum_a) += mw;
    }
    ck.check_eq("grid.P6.winding_sum_A", sum_a, static_cast<long long>(oc.a) * oc.a);
    ck.check_eq("grid.P6.winding_sum_B", sum_b,
                -static_cast<long long>(oc.b) * oc.b + oc.b +
                    static_cast<long long>(oc.b) * oc.t - sum_nu);
    const auto os = o_marker_points(g);
    const auto xs = x_marker_points(g);
    rep.j_oo_twice = j_pairing(os, os).twice;
    rep.j_xx_twice = j_pairing(xs, xs).twice;
    ck.check_eq("grid.P6.J_OO", j_pairing(os, os).twice,
                2LL * (oc.a * oc.t - sum_mu - oc.t * oc.t + oc.t * (oc.t + 1) / 2 +
                       static_cast<long long>(oc.b) * (2 * oc.b - 1)));
    ck.check_eq("grid.P6.J_XX", j_pairing(xs, xs).twice,
                2LL * (oc.b * oc.t - sum_nu - oc.t * oc.t + oc.t * (oc.t + 1) / 2 +
                       2LL * oc.a * oc.a - oc.a));

    // P5: the crossing-change procedure
    const WrongCrossingReport proc = unknotting_set(g);
    ck.check_eq("unknot.P5.U_equals_u", proc.U, inv.unknotting);
    ck.check_eq("unknot.P5.N_identity", proc.N_B - proc.N_A, -(oc.t - 1));
    ck.check_eq("unknot.self_B", proc.self_B, oc.b);
    ck.check_eq("unknot.self_A", proc.self_A, oc.a);
    bool cross_rule = true, self_right = true;
    int wrong_c = 0;
    for (const LabeledCrossing& lc : proc.crossings) {
      if (lc.crossing.region != Region::A) {
        if (lc.string_vertical == lc.string_horizontal) self_right = self_right && !lc.wrong;
        else cross_rule = cross_rule && (!lc.wrong == (lc.string_vertical < lc.string_horizontal));
      }
      if (lc.crossing.region == Region::C && lc.wrong) ++wrong_c;
    }
    ck.check("unknot.self_right", self_right);
    ck.check("unknot.right_iff_i_less_j", cross_rule);
    ck.check_eq("unknot.wrong_in_C", wrong_c, oc.t * (oc.t - 1) / 2);
    ck.check_eq("unknot.changes_size", static_cast<int>(proc.changes.size()), inv.unknotting);

    // observation: the wrong-crossing total from other trace starts
    std::set<int> totals;
    for (int k = 1; k <= oc.t; ++k) totals.insert(wrong_count_from_start(g, k));
    std::string detail = "counts";
    for (int v : totals) detail += ' ' + std::to_string(v);
    ck.observe("trace_start_independent", totals.size() == 1, detail);
  } catch (const Error& e) {
    ck.check("grid.construction", false, e.what());
  }

  // the braid oracle
  try {
    const BraidData braid = lorenz_braid(oc);
    ck.check_eq("braid.strands", braid.strands, oc.a + oc.b);
    ck.check_eq("braid.k_equals_c", braid.k(), inv.crossings_total);
    ck.check_eq("braid.inversions", inversion_count(braid), inv.crossings_total);
    ck.check_eq("braid.positive_formula",
                positive_braid_unknotting(braid.k(), braid.strands),
                static_cast<long long>(inv.unknotting));
    const LaurentPoly delta = alexander_polynomial(braid);
    ck.check_eq("braid.delta_at_one", delta.at_one(), 1LL);
    ck.check_eq("braid.delta_spread", delta.spread(), 2 * inv.unknotting);
    bool palindromic = true;
    for (int e = 0; e <= delta.max_exp(); ++e)
      palindromic = palindromic && delta.coeff(e) == delta.coeff(-e);
    ck.check("braid.delta_symmetric", palindromic);
  } catch (const Error& e) {
    ck.check("braid.oracle", false, e.what());
  }

  ck.observe("u_zero_iff_t_one", (inv.unknotting == 0) == (oc.t == 1),
             "u=" + std::to_string(inv.unknotting) + " t=" + std::to_string(oc.t));

  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

CorpusReport verify_corpus(int max_len, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  CorpusReport rep;
  rep.max_len = max_len;
  const std::vector<LorenzWord> words = enumerate_words(max_len, /*include_t1=*/true);
  rep.word_count = static_cast<int>(words.size());
  rep.words.resize(words.size());

  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (size_t i = 0; i < words.size(); ++i) rep.words[i] = verify_word(words[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= words.size()) return;
        rep.words[i] = verify_word(words[i]);  // slot per word keeps order deterministic
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  rep.all_pass = std::all_of(rep.words.begin(), rep.words.end(),
                             [](const VerificationReport& r) { return r.pass(); });
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

namespace {

// exact integers stay integers; true half-integers become {num, den: 2}
nlohmann::ordered_json half_json(long long twice) {
  if (twice % 2 == 0) return nlohmann::ordered_json(twice / 2);
  return nlohmann::ordered_json{{"num", twice}, {"den", 2}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["word"] = rep.word;
  j["pass"] = rep.pass();
  j["j_pairings"] = {{"OO", half_json(rep.j_oo_twice)}, {"XX", half_json(rep.j_xx_twice)}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : rep.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  nlohmann::ordered_json obs = nlohmann::ordered_json::array();
  for (const CheckResult& c : rep.observations) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["value"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    obs.push_back(e);
  }
  j["observations"] = obs;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

std::string corpus_summary_json(const CorpusReport& rep) {
  nlohmann::ordered_json j;
  j["max_len"] = rep.max_len;
  j["word_count"] = rep.word_count;
  j["all_pass"] = rep.all_pass;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const VerificationReport& r : rep.words) {
    nlohmann::ordered_json e;
    e["word"] = r.word;
    e["pass"] = r.pass();
    words.push_back(e);
    if (!r.pass()) failures.push_back(report_to_json(r));
  }
  j["failures"] = failures;
  j["words"] = words;
  return j.dump(2) + "\n";
}

}  // namespace lorenz
