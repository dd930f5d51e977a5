#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gaussknot::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string mix_text(const MoveMix& mix) {
  std::ostringstream s;
  s << mix.inverse_rm1 << ',' << mix.inverse_rm2 << ',' << mix.tm1 << ',' << mix.tm2;
  return s.str();
}

std::string invalid_message(const std::exception& e) {
  if (const auto* v = dynamic_cast<const ValidityError*>(&e)) {
    return std::string(to_string(v->kind())) + (v->label() ? "(" + std::to_string(v->label()) + ")" : "") + ": " +
           v->what();
  }
  return e.what();
}

}  // namespace

int cmd_solve(std::string_view code_text, const OutputOptions& output, const SearchBudget& budget, std::ostream& out,
              std::ostream& err) {
  GaussCode code;
  try {
    code = parse(code_text);
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidityError& e) {
    err << "invalid input: " << invalid_message(e) << '\n';
    return kInvalidInput;
  }

  try {
    const SolveReport report = solve(code, budget);
    if (output.json) {
      out << to_json(report, true).dump(2) << '\n';
    } else {
      print_report(out, report, output.trace);
    }
    return kSuccess;
  } catch (const SolveBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "; the result below is partial, not a final answer\n";
    if (output.json) {
      Json j = to_json(e.partial(), true);
      j["budget_exceeded"] = true;
      out << j.dump(2) << '\n';
    } else {
      print_report(out, e.partial(), output.trace);
    }
    return kBudgetExceeded;
  }
}

BatchReport run_batch(std::istream& in, const SearchBudget& budget) {
  const auto start = Clock::now();
  BatchReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (!text.empty() && text.front() == '#') continue;
    BatchEntry entry;
    entry.line = line_no;
    entry.input = text;
    try {
      entry.report = solve(parse(text), budget);
    } catch (const SolveBudgetExceeded& e) {
      entry.status = BatchEntry::Status::BudgetExceeded;
      entry.error = e.what();
      entry.report = e.partial();
    } catch (const ParseError& e) {
      entry.status = BatchEntry::Status::Invalid;
      entry.error = e.what();
    } catch (const ValidityError& e) {
      entry.status = BatchEntry::Status::Invalid;
      entry.error = invalid_message(e);
    }
    report.entries.push_back(std::move(entry));
  }
  report.totals = fold_totals(report.entries);
  report.totals.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return report;
}

int cmd_batch(const std::string& path, const OutputOptions& output, const SearchBudget& budget, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read " << path << '\n';
    return kIoError;
  }
  const BatchReport report = run_batch(in, budget);
  if (in.bad()) {
    err << "error while reading " << path << '\n';
    return kIoError;
  }

  if (output.json) {
    out << to_json(report, output.trace).dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& e : report.entries) {
    out << "line " << e.line << ": " << to_string(e.status);
    if (e.report) {
      out << " final=" << serialize(e.report->final_code) << " crossings=" << e.report->crossings_final
          << " unknot=" << (e.report->is_unknot ? "yes" : "no") << " moves=" << e.report->moves.size();
    }
    if (!e.error.empty()) out << " error=\"" << e.error << '"';
    out << '\n';
    if (output.trace && e.report) {
      for (const auto& m : e.report->moves) out << "  step " << m.step << ": " << describe(m.move) << '\n';
    }
  }
  const auto& t = report.totals;
  out << "knots: " << t.knots << " solved: " << t.solved << " unknots: " << t.unknots << " invalid: " << t.invalid
      << " budget_exceeded: " << t.budget_exceeded << '\n'
      << "reductions: " << t.reductions << " translations: " << t.translations
      << " multi-translation paths: " << t.multi_translation_paths << '\n'
      << std::fixed << std::setprecision(3) << "wall time: " << t.wall_time.count() / 1e6 << " s"
      << " mean per knot: " << (t.knots ? t.solve_time.count() / 1e6 / t.knots : 0.0) << " s\n"
      << std::defaultfloat;
  return kSuccess;
}

MoveMix parse_mix(std::string_view text) {
  std::vector<double> weights;
  std::stringstream in{std::string(text)};
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    const std::string t = trim(token);
    const double w = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad weight '" + t + "'");
    weights.push_back(w);
  }
  if (weights.size() != 4) throw std::invalid_argument("move mix needs four weights: rm1,rm2,tm1,tm2");
  return MoveMix{weights[0], weights[1], weights[2], weights[3]};
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<GaussCode> corpus;
  try {
    corpus = random_unknot_corpus(options.recipe, options.count);
  } catch (const std::invalid_argument& e) {
    err << "infeasible recipe: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (options.output_path) {
    file.open(*options.output_path);
    if (!file) {
      err << "cannot write " << *options.output_path << '\n';
      return kIoError;
    }
    sink = &file;
  }
  *sink << "# gaussknot corpus: seed=" << options.recipe.seed << " count=" << options.count
        << " crossings=" << options.recipe.target_crossings << " mix=" << mix_text(options.recipe.mix) << '\n';
  for (const auto& code : corpus) *sink << serialize(code) << '\n';
  sink->flush();
  if (!*sink) {
    err << "error while writing corpus\n";
    return kIoError;
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  constexpr std::size_t kGuard = 4;
  if (options.max_crossings > kGuard && !options.allow_large) {
    err << "refusing to enumerate " << options.max_crossings << " crossings: class counts grow superexponentially. "
        << "Pass --allow-large to raise the guard of " << kGuard << " explicitly.\n";
    return kUsage;
  }
  const std::size_t guard = std::max(kGuard, options.max_crossings);

  std::vector<std::pair<GaussCode, std::string>> counterexamples;
  std::size_t total = 0;
  out << "realizability of enumerated codes is not checked; non-planar sequences are included\n";
  for (std::size_t n = 0; n <= options.max_crossings; ++n) {
    const auto classes = enumerate_valid_codes(n, guard);
    std::vector<GaussCode> irreducible;
    for (const auto& code : classes) {
      std::size_t solved = 0;
      std::size_t oracle = 0;
      try {
        solved = solve(code, options.budget).crossings_final;
        oracle = min_reachable(code, options.budget);
      } catch (const BudgetExceeded& e) {
        err << "budget exceeded on " << serialize(code) << ": " << e.what() << '\n';
        return kBudgetExceeded;
      }
      if (solved != oracle) {
        counterexamples.emplace_back(code, "solve=" + std::to_string(solved) + " oracle=" + std::to_string(oracle));
      }
      if (n > 0 && oracle == n) irreducible.push_back(code);
    }
    total += classes.size();
    out << "crossings " << n << ": " << classes.size() << " classes, " << irreducible.size() << " irreducible";
    if (!irreducible.empty() && irreducible.size() <= 8) {
      out << " (";
      for (std::size_t i = 0; i < irreducible.size(); ++i) out << (i ? "; " : "") << serialize(irreducible[i]);
      out << ")";
    }
    out << '\n';
  }

  if (!counterexamples.empty()) {
    std::ofstream file(options.counterexample_path);
    for (const auto& [code, why] : counterexamples) file << serialize(code) << "  # " << why << '\n';
    if (!file) {
      err << "cannot write " << options.counterexample_path << '\n';
      return kIoError;
    }
    out << "FAIL: " << counterexamples.size() << " of " << total << " classes disagree with the oracle; see "
        << options.counterexample_path << '\n';
    return kVerifyFailed;
  }
  out << "PASS: " << total << " classes, solver matches the exhaustive oracle\n";
  return kSuccess;
}

}  // namespace gaussknot::cli
