// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "doodlekit/braid.hpp"
#include "doodlekit/cli.hpp"
#include "doodlekit/free_group.hpp"
#include "doodlekit/gauss.hpp"
#include "doodlekit/moves.hpp"
#include "doodlekit/search.hpp"
#include "support.hpp"

using namespace doodlekit;
namespace fs = std::filesystem;

namespace {

constexpr double relations_seconds_limit = 1.0;
constexpr double round_trip_seconds_limit = 30.0;
constexpr int round_trip_words = 200;
constexpr int soundness_words = 1000;
constexpr std::size_t state_limit = 100000;
constexpr int random_equivalence_words = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << std::endl;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t expected_relation_count(int n) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t far = m >= 2 ? (m - 1) * (m - 2) / 2 : 0;
  return 2 * m + 4 * far + 2 * (m - 1);
}

TwinWord kishino_word() { return braid(parse_gauss(slurp(fs::path(DOODLEKIT_FIXTURES) / "kishino.gauss"))); }

void representation() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string counts;
  for (int n = 2; n <= 6; ++n) {
    const auto r = verify_relations(n, Backend::openmp);
    ok = ok && r.all_hold() && r.total() == expected_relation_count(n);
    counts += (n > 2 ? " " : "") + std::to_string(r.passed()) + "/" + std::to_string(r.total());
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < relations_seconds_limit;
  report(1, "representation well-definedness", ok,
         "n=2..6 relations hold " + counts + " in " + std::to_string(dt) + " s (limit 1 s)");
}

void separation() {
  bool ok = true;
  int pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      const TwinWord a(n, {real_letter(i), real_letter(i + 1), real_letter(i)});
      const TwinWord b(n, {real_letter(i + 1), real_letter(i), real_letter(i + 1)});
      const TwinWord c(n, {virtual_letter(i), real_letter(i + 1), real_letter(i)});
      const TwinWord d(n, {real_letter(i + 1), real_letter(i), virtual_letter(i + 1)});
      ok = ok && separates(a, b).has_value() && separates(c, d).has_value();
      pairs += 2;
    }
  }
  const auto w1 = separates(testing::word(3, "s1 s2 s1"), testing::word(3, "s2 s1 s2"));
  const auto w2 = separates(testing::word(3, "r1 s2 s1"), testing::word(3, "s2 s1 r2"));
  const bool exact = w1 && w2 && w1->generator == 1 && format_free_word(w1->left) == "x1 x3" &&
                     format_free_word(w1->right) == "x1 x2 x3" && w2->generator == 1 &&
                     format_free_word(w2->left) == "x2 x1 x3" && format_free_word(w2->right) == "x1 x2 x3";
  report(2, "forbidden-move separation", ok && exact,
         std::to_string(pairs) + " pairs separated for n<=6; n=3 witnesses " + (exact ? "exact" : "differ"));
}

void round_trip() {
  const auto t0 = Clock::now();
  std::mt19937 rng(2024);
  int passed = 0;
  int tried = 0;
  auto check = [&](const GaussData& g) {
    ++tried;
    if (isomorphic(closure_gauss(braid(g)), g)) ++passed;
  };
  while (tried < round_trip_words) {
    const auto w = testing::random_word(rng, testing::random_strands(rng, 1, 5), 15);
    check(closure_gauss(w));
  }
  check(parse_gauss(slurp(fs::path(DOODLEKIT_FIXTURES) / "kishino.gauss")));
  const double dt = seconds_since(t0);
  report(3, "Alexander round trip", passed == tried && dt < round_trip_seconds_limit,
         std::to_string(passed) + "/" + std::to_string(tried) + " (random + Kishino) in " + std::to_string(dt) +
             " s (limit 30 s)");
}

void soundness() {
  std::mt19937 rng(2025);
  std::size_t moves = 0;
  int bad = 0;
  for (int t = 0; t < soundness_words; ++t) {
    const auto w = testing::random_word(rng, testing::random_strands(rng, 1, 5), 12);
    const int c = closure_components(w);
    for (const auto& nb : neighbors(w, {16, 6, all_moves})) {
      ++moves;
      if (closure_components(nb.result) != c) ++bad;
    }
  }
  report(4, "move soundness", bad == 0,
         std::to_string(moves) + " neighbors of " + std::to_string(soundness_words) + " words, " +
             std::to_string(bad) + " changed the component count");
}

void markov() {
  const auto dir = fs::temp_directory_path() / "doodlekit_acceptance";
  fs::create_directories(dir);
  int total = 0;
  int proven = 0;
  int replayed = 0;
  std::size_t worst = 0;
  std::string misses;
  auto attempt = [&](const TwinWord& u, const TwinWord& v) {
    ++total;
    const auto verdict = equivalent_closures(u, v, {state_limit, 0, 0, all_moves});
    const auto* e = std::get_if<Equivalent>(&verdict);
    if (!e || e->states_explored > state_limit) {
      misses += " " + format_word_at(u) + "~" + format_word_at(v);
      return;
    }
    ++proven;
    worst = std::max(worst, e->states_explored);
    const auto path = (dir / ("cert" + std::to_string(total) + ".txt")).string();
    std::ofstream(path, std::ios::binary) << format_certificate(e->trace);
    std::ostringstream out, err;
    if (cli::run({"verify-cert", path}, out, err) == cli::exit_code::ok) ++replayed;
  };
  for (const char* beta : {"", "s1", "r1"}) {
    attempt(parse_word(std::string(beta) + " s2 s1 s2", 3), parse_word(beta, 2));
  }
  for (const char* beta : {"s1", "r1"}) {
    const auto b = parse_word(beta, 2);
    auto letters = shift_left(1, b).letters();
    letters.push_back(virtual_letter(1));
    attempt(TwinWord(3, letters), b);
  }
  std::mt19937 rng(2026);
  for (int t = 0; t < random_equivalence_words; ++t) {
    const auto w = testing::random_word(rng, testing::random_strands(rng, 2, 3), 6);
    attempt(w, braid(closure_gauss(w)));
  }
  fs::remove_all(dir);
  report(5, "Markov completeness at desk scale", proven == total && replayed == total,
         std::to_string(proven) + "/" + std::to_string(total) + " proven (3 collapse, 2 left virtual, " +
             std::to_string(random_equivalence_words) + " braided), " + std::to_string(replayed) +
             " certificates verified, worst " + std::to_string(worst) + " states (limit 100000)" +
             (misses.empty() ? "" : "; missed:" + misses));
}

void negative_control() {
  const SearchBudget budget{state_limit, 0, 0, all_moves};
  const auto d = equivalent_closures(TwinWord(2), TwinWord(1), budget);
  const auto* dist = std::get_if<Distinct>(&d);
  const bool distinct = dist && dist->invariant == "closure_components";
  const auto u = equivalent_closures(kishino_word(), TwinWord(1), budget);
  const auto* unk = std::get_if<Unknown>(&u);
  report(6, "negative control", distinct && unk != nullptr,
         std::string("empty VT_2 vs empty VT_1 ") + (distinct ? "Distinct" : "not Distinct") + "; Kishino vs empty VT_1 " +
             (unk ? "Unknown after " + std::to_string(unk->states_explored) + " states" : "not Unknown"));
}

void gauss_fidelity() {
  const fs::path golden = DOODLEKIT_GOLDEN;
  const fs::path fixtures = DOODLEKIT_FIXTURES;
  struct Case {
    const char* name;
    std::vector<std::string> args;
    std::string shown;
  };
  const auto f = [&](const char* file) { return (fixtures / file).string(); };
  const std::vector<Case> cases{
      {"gauss_validate_kink", {"gauss-validate", f("kink.gauss")}, "gauss-validate fixtures/kink.gauss"},
      {"gauss_validate_slot_misuse", {"gauss-validate", f("bad_slot.gauss")}, "gauss-validate fixtures/bad_slot.gauss"},
      {"gauss_validate_unmatched", {"gauss-validate", f("unmatched.gauss")}, "gauss-validate fixtures/unmatched.gauss"},
      {"gauss_iso_kink_self",
       {"gauss-iso", f("kink.gauss"), f("kink.gauss")},
       "gauss-iso fixtures/kink.gauss fixtures/kink.gauss"},
      {"gauss_iso_kink_twisted",
       {"gauss-iso", f("kink.gauss"), f("twisted.gauss")},
       "gauss-iso fixtures/kink.gauss fixtures/twisted.gauss"},
      {"gauss_iso_s1s1_swapped",
       {"gauss-iso", f("s1s1.gauss"), f("s1s1_swapped.gauss")},
       "gauss-iso fixtures/s1s1.gauss fixtures/s1s1_swapped.gauss"},
      {"gauss_iso_kishino_relabeled",
       {"gauss-iso", f("kishino.gauss"), f("kishino_relabeled.gauss")},
       "gauss-iso fixtures/kishino.gauss fixtures/kishino_relabeled.gauss"},
      {"closure_s1", {"closure-gauss", "--n", "2", "s1"}, "closure-gauss --n 2 \"s1\""},
      {"closure_empty", {"closure-gauss", "--n", "3", ""}, "closure-gauss --n 3 \"\""},
      {"closure_s1s1", {"closure-gauss", "--n", "2", "s1 s1"}, "closure-gauss --n 2 \"s1 s1\""},
  };
  int matched = 0;
  std::string diffs;
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int code = cli::run(c.args, out, err);
    const auto text = "$ doodlekit " + c.shown + "\n" + out.str() + "--- stderr\n" + err.str() + "--- exit " +
                      std::to_string(code) + "\n";
    if (text == slurp(golden / (std::string(c.name) + ".txt"))) {
      ++matched;
    } else {
      diffs += std::string(" ") + c.name;
    }
  }
  report(7, "Gauss model fidelity", matched == static_cast<int>(cases.size()),
         std::to_string(matched) + "/" + std::to_string(cases.size()) + " golden transcripts byte-identical" +
             (diffs.empty() ? "" : "; differing:" + diffs));
}

}  // namespace

int main() {
  representation();
  separation();
  round_trip();
  soundness();
  markov();
  negative_control();
  gauss_fidelity();
  std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
