#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorenz/braid.hpp"
#include "lorenz/enumerate.hpp"
#include "lorenz/error.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/unknotting.hpp"
#include "lorenz/verify.hpp"
#include "lorenz/word.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;

template <typename T>
ordered_json vec_json(const std::vector<T>& v) {
  return ordered_json(v);
}

int run_analyze(const std::string& word_text, bool as_json) {
  const lorenz::LorenzWord w = lorenz::LorenzWord::parse(word_text);
  const lorenz::OrbitCombinatorics oc = lorenz::orbit_combinatorics(w);
  const lorenz::InvariantRecord inv = lorenz::closed_form_invariants(oc);
  if (as_json) {
    ordered_json j;
    j["word"] = word_text;
    j["canonical"] = w.letters();
    j["a"] = oc.a;
    j["b"] = oc.b;
    j["t"] = oc.t;
    j["alpha"] = vec_json(oc.alpha);
    j["beta"] = vec_json(oc.beta);
    j["mu"] = vec_json(oc.mu);
    j["nu"] = vec_json(oc.nu);
    j["grid_number"] = inv.grid_number;
    j["crossings"] = {{"A", inv.crossings_A},
                      {"B", inv.crossings_B},
                      {"C", inv.crossings_C},
                      {"total", inv.crossings_total}};
    j["unknotting"] = inv.unknotting;
    j["alexander_x_minus"] = inv.alexander_x_minus;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::cout << "word        " << w.letters() << "\n"
            << "a, b, t     " << oc.a << ", " << oc.b << ", " << oc.t << "\n"
            << "alpha       " << list(oc.alpha) << "\n"
            << "beta        " << list(oc.beta) << "\n"
            << "mu          " << list(oc.mu) << "\n"
            << "nu          " << list(oc.nu) << "\n"
            << "grid number " << inv.grid_number << "\n"
            << "crossings   A=" << inv.crossings_A << " B=" << inv.crossings_B
            << " C=" << inv.crossings_C << " total=" << inv.crossings_total << "\n"
            << "unknotting  " << inv.unknotting << "\n"
            << "A(x-)       " << inv.alexander_x_minus << "\n";
  return kExitOk;
}

int run_grid(const std::string& word_text, const std::string& format) {
  const lorenz::LorenzWord w = lorenz::LorenzWord::parse(word_text);
  const lorenz::GridDiagram g = lorenz::build_grid(lorenz::orbit_combinatorics(w));
  std::cout << lorenz::export_grid(g, lorenz::grid_format_from_string(format));
  return kExitOk;
}

ordered_json crossing_json(const lorenz::LabeledCrossing& lc) {
  ordered_json e;
  e["row"] = lc.crossing.row + 1;  // rows and columns are 1-based on the wire
  e["col"] = lc.crossing.col + 1;
  e["region"] = lorenz::to_string(lc.crossing.region);
  e["strings"] = {lc.string_vertical, lc.string_horizontal};
  e["wrong"] = lc.wrong;
  return e;
}

int run_unknot(const std::string& word_text, bool as_json) {
  const lorenz::LorenzWord w = lorenz::LorenzWord::parse(word_text);
  const lorenz::GridDiagram g = lorenz::build_grid(lorenz::orbit_combinatorics(w));
  const lorenz::WrongCrossingReport rep = lorenz::unknotting_set(g);
  if (as_json) {
    ordered_json j;
    j["word"] = w.letters();
    j["U"] = rep.U;
    j["N_A"] = rep.N_A;
    j["N_B"] = rep.N_B;
    j["c_AC"] = rep.c_AC;
    j["c_BC"] = rep.c_BC;
    j["self_A"] = rep.self_A;
    j["self_B"] = rep.self_B;
    j["u_AC"] = rep.u_AC;
    j["u_BC"] = rep.u_BC;
    ordered_json crossings = ordered_json::array();
    for (const lorenz::LabeledCrossing& lc : rep.crossings) crossings.push_back(crossing_json(lc));
    j["crossings"] = crossings;
    ordered_json changes = ordered_json::array();
    for (const lorenz::Crossing& cr : rep.changes)
      changes.push_back({{"row", cr.row + 1}, {"col", cr.col + 1},
                         {"region", lorenz::to_string(cr.region)}});
    j["changes"] = changes;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "word " << w.letters() << ": U = " << rep.U << " crossing change(s)\n";
  for (const lorenz::Crossing& cr : rep.changes)
    std::cout << "  flip row " << cr.row + 1 << ", col " << cr.col + 1 << " (region "
              << lorenz::to_string(cr.region) << ")\n";
  std::cout << "N_A=" << rep.N_A << " N_B=" << rep.N_B << " u_AC=" << rep.u_AC
            << " u_BC=" << rep.u_BC << " self_A=" << rep.self_A << " self_B=" << rep.self_B
            << "\n";
  return kExitOk;
}

int run_braid(const std::string& word_text, bool with_alexander) {
  const lorenz::LorenzWord w = lorenz::LorenzWord::parse(word_text);
  const lorenz::BraidData braid = lorenz::lorenz_braid(lorenz::orbit_combinatorics(w));
  std::cout << "strands " << braid.strands << "\n"
            << "crossings " << braid.k() << "\n"
            << "word";
  for (int gen : braid.word) std::cout << ' ' << gen;
  std::cout << "\n";
  if (with_alexander) {
    const lorenz::LaurentPoly delta = lorenz::alexander_polynomial(braid);
    std::cout << "alexander " << delta.to_string() << "\n"
              << "spread " << delta.spread() << "\n";
  }
  return kExitOk;
}

int run_enumerate(int max_len, bool include_t1) {
  for (const lorenz::LorenzWord& w : lorenz::enumerate_words(max_len, include_t1))
    std::cout << w.letters() << '\n';
  return kExitOk;
}

int run_verify_word(const std::string& word_text, bool as_json) {
  const lorenz::LorenzWord w = lorenz::LorenzWord::parse(word_text);
  const lorenz::VerificationReport rep = lorenz::verify_word(w);
  if (as_json) {
    std::cout << lorenz::report_json(rep);
  } else {
    for (const lorenz::CheckResult& c : rep.checks)
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    for (const lorenz::CheckResult& c : rep.observations)
      std::cout << "note  " << c.name << " = " << (c.pass ? "true" : "false")
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "  " << rep.word << '\n';
  }
  return rep.pass() ? kExitOk : kExitVerifyFailed;
}

int run_verify_corpus(int max_len, int jobs, bool as_json) {
  const lorenz::CorpusReport rep = lorenz::verify_corpus(max_len, jobs);
  if (as_json) {
    std::cout << lorenz::corpus_summary_json(rep);
  } else {
    std::cout << rep.word_count << " words up to length " << rep.max_len << ": "
              << (rep.all_pass ? "all pass" : "FAILURES") << "  ("
              << static_cast<long long>(rep.millis) << " ms)\n";
    for (const lorenz::VerificationReport& r : rep.words)
      if (!r.pass())
        for (const lorenz::CheckResult& c : r.checks)
          if (!c.pass)
            std::cout << "FAIL " << r.word << " " << c.name << "  (" << c.detail
                      << ")  reproduce: lorenzknot verify " << r.word << '\n';
  }
  return rep.all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorenz knot grid diagrams, unknotting numbers and cross-checks"};
  app.require_subcommand(1);

  std::string word_text, format = "ascii";
  bool as_json = false, with_alexander = false, include_t1 = false;
  int max_len = 0, jobs = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "branch-line data and closed-form invariants");
  analyze->add_option("word", word_text, "cyclic word over {x,y}")->required();
  analyze->add_flag("--json", as_json, "emit JSON");

  CLI::App* grid = app.add_subcommand("grid", "construct and export the grid diagram");
  grid->add_option("word", word_text)->required();
  grid->add_option("--format", format, "ascii|svg|json")->default_val("ascii");

  CLI::App* unknot = app.add_subcommand("unknot", "crossing-change set from the traced diagram");
  unknot->add_option("word", word_text)->required();
  unknot->add_flag("--json", as_json);

  CLI::App* braid = app.add_subcommand("braid", "Lorenz permutation braid");
  braid->add_option("word", word_text)->required();
  braid->add_flag("--alexander", with_alexander, "also compute the Alexander polynomial");

  CLI::App* enumerate = app.add_subcommand("enumerate", "canonical primitive words");
  enumerate->add_option("--max-len", max_len, "maximum word length (2..64)")->required();
  enumerate->add_flag("--include-t1", include_t1, "include trip-number-1 words (unknots)");

  CLI::App* verify = app.add_subcommand("verify", "run every identity check");
  verify->add_option("word", word_text, "verify a single word");
  verify->add_option("--max-len", max_len, "verify the whole corpus up to this length");
  verify->add_option("--jobs", jobs, "parallel workers for corpus runs")->default_val(1);
  verify->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(word_text, as_json);
    if (grid->parsed()) return run_grid(word_text, format);
    if (unknot->parsed()) return run_unknot(word_text, as_json);
    if (braid->parsed()) return run_braid(word_text, with_alexander);
    if (enumerate->parsed()) return run_enumerate(max_len, include_t1);
    if (verify->parsed()) {
      if (!word_text.empty()) return run_verify_word(word_text, as_json);
      if (max_len > 0) return run_verify_corpus(max_len, jobs, as_json);
      std::cerr << "verify needs a word or --max-len\n";
      return kExitInvalidInput;
    }
  } catch (const lorenz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
