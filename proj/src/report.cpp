#include "gaussknot/report.hpp"

#include <iomanip>
#include <ostream>

namespace gaussknot {

namespace {

Json interval_json(const CyclicInterval& iv) { return Json::array({iv.start, iv.length}); }

double seconds(std::chrono::microseconds us) { return static_cast<double>(us.count()) / 1e6; }

}  // namespace

Json to_json(const Tangle& tangle) {
  Json j;
  j["first"] = interval_json(tangle.first);
  j["second"] = interval_json(tangle.second);
  j["size"] = tangle.size;
  j["inter_strand_count"] = tangle.inter_strand_count;
  j["ends_adjacent"] = tangle.ends_adjacent;
  return j;
}

Json to_json(const MoveDescriptor& move) {
  Json j;
  j["kind"] = to_string(move.kind());
  std::visit(
      [&](const auto& site) {
        using S = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<S, Rm1Site>) {
          j["pos"] = site.pos;
        } else if constexpr (std::is_same_v<S, Rm2Site>) {
          j["pair_pos"] = site.pair_pos;
          j["partner_pos"] = site.partner_pos;
        } else if constexpr (std::is_same_v<S, Tm1Site>) {
          j["tangle"] = to_json(site.tangle);
          j["end_a"] = to_string(site.end_a);
          j["end_b"] = to_string(site.end_b);
          j["crossing_label"] = site.crossing_label;
        } else {
          j["tangle"] = to_json(site.tangle);
          j["end_1"] = to_string(site.end_1);
          j["end_2"] = to_string(site.end_2);
          j["pass_a"] = site.pass_a;
          j["pass_b"] = site.pass_b;
          j["partner_pos"] = site.partner_pos;
        }
      },
      move.site);
  return j;
}

Json to_json(const SolveReport& report, bool include_moves) {
  Json j;
  j["schema"] = kSolveReportSchema;
  j["initial_code"] = serialize(report.initial_code);
  j["final_code"] = serialize(report.final_code);
  j["is_unknot"] = report.is_unknot;
  j["crossings_initial"] = report.crossings_initial;
  j["crossings_final"] = report.crossings_final;
  j["reductions"] = report.reduction_count();
  j["translations"] = report.translation_count();
  j["translation_paths"] = report.translation_path_lengths();
  j["search_nodes_explored"] = report.search_nodes_explored;
  j["elapsed_us"] = report.elapsed.count();
  if (include_moves) {
    Json moves = Json::array();
    for (const auto& m : report.moves) {
      Json entry;
      entry["step"] = m.step;
      entry["move"] = to_json(m.move);
      entry["result"] = serialize(m.result);
      moves.push_back(std::move(entry));
    }
    j["moves"] = std::move(moves);
  }
  return j;
}

const char* to_string(BatchEntry::Status status) noexcept {
  switch (status) {
    case BatchEntry::Status::Solved:
      return "solved";
    case BatchEntry::Status::Invalid:
      return "invalid";
    case BatchEntry::Status::BudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

BatchTotals fold_totals(const std::vector<BatchEntry>& entries) {
  BatchTotals t;
  for (const auto& e : entries) {
    ++t.knots;
    switch (e.status) {
      case BatchEntry::Status::Solved:
        ++t.solved;
        break;
      case BatchEntry::Status::Invalid:
        ++t.invalid;
        break;
      case BatchEntry::Status::BudgetExceeded:
        ++t.budget_exceeded;
        break;
    }
    if (!e.report) continue;
    if (e.status == BatchEntry::Status::Solved && e.report->is_unknot) ++t.unknots;
    t.reductions += e.report->reduction_count();
    t.translations += e.report->translation_count();
    for (auto len : e.report->translation_path_lengths()) t.multi_translation_paths += len >= 2 ? 1 : 0;
    t.solve_time += e.report->elapsed;
  }
  return t;
}

Json to_json(const BatchReport& report, bool include_moves) {
  Json j;
  j["schema"] = kBatchReportSchema;
  Json knots = Json::array();
  for (const auto& e : report.entries) {
    Json k;
    k["line"] = e.line;
    k["input"] = e.input;
    k["status"] = to_string(e.status);
    if (!e.error.empty()) k["error"] = e.error;
    if (e.report) k["report"] = to_json(*e.report, include_moves);
    knots.push_back(std::move(k));
  }
  j["knots"] = std::move(knots);
  const auto& t = report.totals;
  Json totals;
  totals["knots"] = t.knots;
  totals["solved"] = t.solved;
  totals["unknots"] = t.unknots;
  totals["invalid"] = t.invalid;
  totals["budget_exceeded"] = t.budget_exceeded;
  totals["reductions"] = t.reductions;
  totals["translations"] = t.translations;
  totals["multi_translation_paths"] = t.multi_translation_paths;
  totals["solve_elapsed_us"] = t.solve_time.count();
  totals["wall_elapsed_us"] = t.wall_time.count();
  totals["mean_elapsed_us"] = t.knots ? t.solve_time.count() / static_cast<long long>(t.knots) : 0;
  j["totals"] = std::move(totals);
  return j;
}

void print_report(std::ostream& out, const SolveReport& report, bool trace) {
  if (trace) {
    for (const auto& m : report.moves) {
      out << "  step " << m.step << ": " << describe(m.move) << " -> " << serialize(m.result) << '\n';
    }
  }
  out << "final: " << serialize(report.final_code) << '\n'
      << "crossings: " << report.crossings_final << " (from " << report.crossings_initial << ")\n"
      << "unknot: " << (report.is_unknot ? "yes" : "no") << '\n'
      << "moves: " << report.moves.size() << " (" << report.reduction_count() << " reductions, "
      << report.translation_count() << " translations)\n"
      << "search nodes: " << report.search_nodes_explored << '\n'
      << "elapsed: " << std::fixed << std::setprecision(6) << seconds(report.elapsed) << " s\n"
      << std::defaultfloat;
}

}  // namespace gaussknot
