// Structured (JSON) and plain-text renderings of solver results. The JSON
// field names are a stable contract; see docs/report-schema.md.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussknot/solver.hpp"

namespace gaussknot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSolveReportSchema = "gaussknot.solve_report/1";
inline constexpr const char* kBatchReportSchema = "gaussknot.batch_report/1";

Json to_json(const Tangle& tangle);
Json to_json(const MoveDescriptor& move);
// include_moves = false drops the trace, leaving the summary fields.
Json to_json(const SolveReport& report, bool include_moves = true);

// One input line of a batch and what became of it.
struct BatchEntry {
  enum class Status { Solved, Invalid, BudgetExceeded };

  std::size_t line = 0;
  std::string input;
  Status status = Status::Solved;
  std::string error;
  // Present for Solved, and for BudgetExceeded (the partial report).
  std::optional<SolveReport> report;
};

const char* to_string(BatchEntry::Status status) noexcept;

struct BatchTotals {
  std::size_t knots = 0;
  std::size_t solved = 0;
  std::size_t unknots = 0;
  std::size_t invalid = 0;
  std::size_t budget_exceeded = 0;
  std::size_t reductions = 0;
  std::size_t translations = 0;
  std::size_t multi_translation_paths = 0;
  std::chrono::microseconds solve_time{0};
  std::chrono::microseconds wall_time{0};
};

struct BatchReport {
  std::vector<BatchEntry> entries;
  BatchTotals totals;
};

// Folds the per-entry values into totals (wall_time is left to the caller).
BatchTotals fold_totals(const std::vector<BatchEntry>& entries);

Json to_json(const BatchReport& report, bool include_moves = false);

// Human-readable summary of one solve; with trace, one line per move.
void print_report(std::ostream& out, const SolveReport& report, bool trace);

}  // namespace gaussknot
