// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "gaussknot/generator.hpp"
#include "gaussknot/solver.hpp"
#include "oracles.hpp"

using namespace gaussknot;

namespace {

// Corpus and tolerances.
constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::size_t kCorpusSize = 1000;
constexpr std::size_t kCorpusCrossings = 50;
constexpr double kTargetMeanSeconds = 0.3;
constexpr double kTargetTotalSeconds = 30.0;
constexpr double kHardwareTolerance = 3.0;
constexpr std::size_t kEnumerationMax = 4;
constexpr std::size_t kRm3Configurations = 200;
constexpr std::size_t kRepresentationCodes = 100;
constexpr std::size_t kDeterminismCorpus = 200;
constexpr std::size_t kTinyNodeBudget = 1;

const GaussCode kTrefoil{1, -2, 3, -1, 2, -3};

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects failed expectations so a criterion can report the first one.
struct Checker {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  Result result(const std::string& detail) const {
    if (failures.empty()) return {true, detail};
    return {false, std::to_string(failures.size()) + " of " + std::to_string(checks) +
                       " checks failed; first: " + failures.front()};
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Corpus {
  std::vector<GaussCode> codes;
  std::vector<SolveReport> reports;
  double seconds = 0;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    TangleRecipe recipe;
    recipe.seed = kCorpusSeed;
    recipe.target_crossings = kCorpusCrossings;
    out.codes = random_unknot_corpus(recipe, kCorpusSize);
    const auto start = Clock::now();
    for (const auto& code : out.codes) out.reports.push_back(solve(code));
    out.seconds = seconds_since(start);
    return out;
  }();
  return c;
}

Result trefoil_fixpoint() {
  Checker c;
  const SolveReport r = solve(kTrefoil);
  c.expect(canonical_form(r.final_code) == canonical_form(kTrefoil), "final class differs");
  c.expect(!r.is_unknot, "reported as unknot");
  c.expect(r.reduction_count() == 0, "reductions applied");
  c.expect(r.crossings_final == 3, "crossings changed");
  const std::size_t oracle = min_reachable(kTrefoil);
  c.expect(oracle == 3, "oracle minimum " + std::to_string(oracle));
  return c.result("final " + serialize(r.final_code) + ", oracle minimum " + std::to_string(oracle));
}

Result move_unit_suite() {
  Checker c;
  const auto eq = [&](const GaussCode& got, const GaussCode& want, const std::string& what) {
    c.expect(got == want, what + ": got [" + serialize(got) + "]");
  };
  // RM1
  c.expect(find_rm1(GaussCode{1, -1}).size() == 2 && find_rm1(GaussCode{1, -1})[0].pos == 0, "find_rm1 [1,-1]");
  c.expect(find_rm1(kTrefoil).empty(), "find_rm1 trefoil");
  c.expect(find_rm1(GaussCode{-1, 2, -2, 1}).at(0).pos == 1, "find_rm1 [-1,2,-2,1]");
  eq(apply_rm1(GaussCode{1, -1}, {0}), GaussCode{}, "apply_rm1 curl");
  eq(apply_rm1(GaussCode{-1, 2, -2, 1}, {1}), GaussCode{-1, 1}, "apply_rm1 interior");
  eq(apply_rm1(GaussCode{3, -3, 1, -2, -1, 2}, {0}), GaussCode{1, -2, -1, 2}, "apply_rm1 relabel");
  // RM2
  const auto rm2_first = [](const GaussCode& g) { return find_rm2(g).at(0); };
  c.expect(rm2_first(GaussCode{1, 2, -1, -2}) == Rm2Site{0, 2}, "find_rm2 [1,2,-1,-2]");
  c.expect(rm2_first(GaussCode{1, 2, -2, -1}) == Rm2Site{0, 2}, "find_rm2 [1,2,-2,-1]");
  c.expect(find_rm2(kTrefoil).empty(), "find_rm2 trefoil");
  eq(apply_rm2(GaussCode{1, 2, -1, -2}, {0, 2}), GaussCode{}, "apply_rm2 bigon");
  eq(apply_rm2(GaussCode{1, 2, -2, -1}, {0, 2}), GaussCode{}, "apply_rm2 reversed partner");
  eq(apply_rm2(GaussCode{3, 1, 2, -1, -2, -3}, {1, 3}), GaussCode{1, -1}, "apply_rm2 relabel");
  // Length changes on every site of a sample.
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    oracle::Seq s = oracle::random_code(2 + i % 5, rng);
    const GaussCode g(std::vector<Entry>(s.begin(), s.end()));
    for (const auto& site : find_rm1(g)) c.expect(apply_rm1(g, site).length() + 2 == g.length(), "RM1 length");
    for (const auto& site : find_rm2(g)) c.expect(apply_rm2(g, site).length() + 4 == g.length(), "RM2 length");
    for (const auto& m : translation_candidates(g)) c.expect(apply_move(g, m).length() == g.length(), "TM length");
  }
  // TM1: trefoil size-2 tangle, crossing 3 outside, inside entries flip.
  const Tangle t = make_tangle(kTrefoil, {0, 2}, {3, 2});
  const auto tm1 = find_tm1(kTrefoil, t);
  c.expect(!tm1.empty() && tm1[0].crossing_label == 3, "find_tm1 trefoil label 3");
  if (!tm1.empty()) eq(apply_tm1(kTrefoil, tm1[0]), GaussCode{-1, 2, -3, 1, -2, 3}, "apply_tm1 trefoil");
  // TM2: same-sign passes slide, tangle untouched.
  const GaussCode slide{1, 3, 4, 2, -4, -3, -1, -2};
  const auto tm2 = find_tm2(slide, make_tangle(slide, {1, 2}, {4, 2}));
  c.expect(tm2.size() == 1, "find_tm2 even tangle");
  if (tm2.size() == 1) eq(apply_tm2(slide, tm2[0]), GaussCode{1, 2, 3, -2, -1, 4, -3, -4}, "apply_tm2 even tangle");
  const GaussCode mixed{1, 3, -4, -2, -3, 4, -1, 2};
  c.expect(find_tm2(mixed, make_tangle(mixed, {1, 1}, {4, 1})).empty(), "find_tm2 mixed signs");
  const GaussCode apart{1, 3, 2, -3, -1, -4, -2, 4};
  c.expect(find_tm2(apart, make_tangle(apart, {1, 1}, {3, 1})).empty(), "find_tm2 distant negations");
  // Stale sites fail loudly.
  bool threw = false;
  try {
    apply_rm1(kTrefoil, {0});
  } catch (const StaleSiteError&) {
    threw = true;
  }
  c.expect(threw, "stale RM1 accepted");
  return c.result(std::to_string(c.checks) + " checks");
}

Result rm3_subsumption() {
  Checker c;
  std::mt19937_64 rng(kCorpusSeed);
  for (std::size_t i = 0; i < kRm3Configurations; ++i) {
    const oracle::Seq s = oracle::random_code(i % 5, rng);
    const Rm3Configuration rm3 = rm3_configuration(GaussCode(std::vector<Entry>(s.begin(), s.end())), rng);
    const auto sites = find_tm2(rm3.code, rm3.tangle);
    c.expect(sites.size() == 1, serialize(rm3.code) + ": " + std::to_string(sites.size()) + " TM2 sites");
    if (sites.size() != 1) continue;
    const GaussCode once = apply_tm2(rm3.code, sites[0]);
    bool back = false;
    for (const auto& m : translation_candidates(once)) {
      if (m.kind() == MoveKind::TM2 && std::get<Tm2Site>(m.site).tangle.size == 1 &&
          canonical_form(apply_move(once, m)) == canonical_form(rm3.code)) {
        back = true;
      }
    }
    c.expect(back, serialize(rm3.code) + ": second TM2 does not return");
  }
  return c.result(std::to_string(kRm3Configurations) + " configurations, one site each, round trip restored");
}

Result exhaustive_optimality() {
  Checker c;
  std::size_t classes = 0;
  for (std::size_t n = 0; n <= kEnumerationMax; ++n) {
    for (const auto& code : enumerate_valid_codes(n, kEnumerationMax)) {
      ++classes;
      const std::size_t solved = solve(code).crossings_final;
      const std::size_t best = min_reachable(code);
      c.expect(solved == best, serialize(code) + ": solve " + std::to_string(solved) + " vs oracle " +
                                   std::to_string(best));
    }
  }
  return c.result(std::to_string(classes) + " classes up to " + std::to_string(kEnumerationMax) +
                  " crossings, zero mismatches");
}

Result generator_round_trip() {
  const Corpus& k = corpus();
  std::size_t unknots = 0;
  double worst = 0;
  for (const auto& r : k.reports) {
    unknots += r.is_unknot ? 1 : 0;
    worst = std::max(worst, std::chrono::duration<double>(r.elapsed).count());
  }
  const double mean = k.seconds / static_cast<double>(k.codes.size());
  const bool verdicts = unknots == k.codes.size();
  const bool timing = mean <= kTargetMeanSeconds * kHardwareTolerance && k.seconds <= kTargetTotalSeconds * kHardwareTolerance;
  std::ostringstream d;
  d << unknots << "/" << k.codes.size() << " unknots at " << kCorpusCrossings << " crossings; total " << std::fixed
    << std::setprecision(3) << k.seconds << " s (limit " << kTargetTotalSeconds * kHardwareTolerance << "), mean "
    << std::setprecision(5) << mean << " s (limit " << kTargetMeanSeconds * kHardwareTolerance << "), worst " << worst
    << " s";
  return {verdicts && timing, d.str()};
}

Result multi_translation_cases() {
  const Corpus& k = corpus();
  Checker c;
  std::map<std::string, std::size_t> composition;
  std::size_t found = 0;
  for (std::size_t i = 0; i < k.reports.size(); ++i) {
    const SolveReport& r = k.reports[i];
    GaussCode before = relabel_sequential(r.initial_code);
    std::size_t j = 0;
    while (j < r.moves.size()) {
      if (r.moves[j].move.is_reduction()) {
        before = r.moves[j++].result;
        continue;
      }
      std::size_t end = j;
      while (end < r.moves.size() && !r.moves[end].move.is_reduction()) ++end;
      if (end - j >= 2) {
        ++found;
        std::string kinds;
        GaussCode cur = before;
        for (std::size_t m = j; m < end; ++m) {
          kinds += (kinds.empty() ? "" : "+") + std::string(to_string(r.moves[m].move.kind()));
          cur = apply_move(cur, r.moves[m].move);
          c.expect(cur == r.moves[m].result, "instance " + std::to_string(i) + ": replay diverges");
        }
        c.expect(has_reduction(cur), "instance " + std::to_string(i) + ": path end not reducible");
        ++composition[kinds];
      }
      before = r.moves[end - 1].result;
      j = end;
    }
  }
  c.expect(found > 0, "no multi-translation path in the corpus");
  std::string d = std::to_string(found) + " paths of length >= 2, all replayable; composition:";
  for (const auto& [kinds, n] : composition) d += " " + kinds + " x" + std::to_string(n);
  return c.result(d);
}

Result representation_independence() {
  Checker c;
  std::mt19937_64 rng(kCorpusSeed);
  for (std::size_t i = 0; i < kRepresentationCodes; ++i) {
    const oracle::Seq s = oracle::random_code(1 + i % 7, rng);
    const GaussCode g(std::vector<Entry>(s.begin(), s.end()));
    const std::size_t expected = solve(g).crossings_final;
    for (std::size_t k = 1; k < g.length(); ++k) {
      c.expect(solve(rotate(g, static_cast<std::ptrdiff_t>(k))).crossings_final == expected,
               serialize(g) + " rotated by " + std::to_string(k));
    }
    c.expect(solve(reverse(g)).crossings_final == expected, serialize(g) + " reversed");
  }
  return c.result(std::to_string(kRepresentationCodes) + " codes, " + std::to_string(c.checks) +
                  " rotations and reversals agree");
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto& [key, v] : j.items()) {
      if (key.find("elapsed_us") == std::string::npos) out[key] = strip_timing(v);
    }
    return out;
  }
  if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

Result determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "gaussknot_acceptance";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "corpus.txt").string();
  cli::GenerateOptions gen;
  gen.recipe.seed = kCorpusSeed;
  gen.recipe.target_crossings = kCorpusCrossings;
  gen.count = kDeterminismCorpus;
  gen.output_path = path;
  std::ostringstream sink, err;
  if (cli::cmd_generate(gen, sink, err) != cli::kSuccess) return {false, "generate failed: " + err.str()};

  std::string reports[2];
  for (auto& report : reports) {
    std::ostringstream out;
    if (cli::cmd_batch(path, {true, true}, SearchBudget{}, out, err) != cli::kSuccess) {
      return {false, "batch failed: " + err.str()};
    }
    report = strip_timing(Json::parse(out.str())).dump(2);
  }
  std::filesystem::remove_all(dir);
  const bool same = reports[0] == reports[1];
  return {same, std::to_string(kDeterminismCorpus) + "-knot batch, " + std::to_string(reports[0].size()) +
                    " bytes after removing timing fields, " + (same ? "identical" : "DIFFERENT")};
}

Result budget_honesty() {
  const Corpus& k = corpus();
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < k.reports.size() && !pick; ++i) {
    for (auto len : k.reports[i].translation_path_lengths()) {
      if (len >= 2) pick = i;
    }
  }
  if (!pick) return {false, "no corpus instance needs a search"};
  const GaussCode& code = k.codes[*pick];

  Checker c;
  SearchBudget tiny;
  tiny.max_nodes = kTinyNodeBudget;
  try {
    const SolveReport r = solve(code, tiny);
    c.expect(false, "truncated search returned a report (unknot=" + std::string(r.is_unknot ? "yes" : "no") + ")");
  } catch (const SolveBudgetExceeded& e) {
    c.expect(!e.partial().is_unknot, "partial report claims unknot");
    c.expect(e.limit() == BudgetLimit::Nodes, "wrong limit");
  }
  std::ostringstream out, err;
  const int rc = cli::cmd_solve(serialize(code), {}, tiny, out, err);
  c.expect(rc == cli::kBudgetExceeded, "cli exit code " + std::to_string(rc));
  c.expect(out.str().find("unknot: yes") == std::string::npos, "cli printed an unknot verdict");
  return c.result("instance " + std::to_string(*pick) + " (" + std::to_string(code.crossings()) +
                  " crossings) under max_nodes=" + std::to_string(kTinyNodeBudget) +
                  ": budget exceeded, no unknot verdict, exit code 3");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"1 trefoil fixpoint", trefoil_fixpoint},
      {"2 move unit suite", move_unit_suite},
      {"3 RM3 subsumption", rm3_subsumption},
      {"4 exhaustive optimality", exhaustive_optimality},
      {"5 generator round trip", generator_round_trip},
      {"6 multi-translation cases", multi_translation_cases},
      {"7 representation independence", representation_independence},
      {"8 determinism", determinism},
      {"9 budget honesty", budget_honesty},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << " (" << std::fixed << std::setprecision(2)
              << seconds_since(start) << " s): " << r.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
