// Subcommands of the gaussknot tool, separated from argument parsing so the
// test suites can drive them with in-memory streams.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gaussknot/budget.hpp"
#include "gaussknot/generator.hpp"
#include "gaussknot/report.hpp"

namespace gaussknot::cli {

// Process exit codes; stable for scripting.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
  kIoError = 4,
  kVerifyFailed = 5,
};

struct OutputOptions {
  bool trace = false;
  bool json = false;
};

int cmd_solve(std::string_view code_text, const OutputOptions& output, const SearchBudget& budget, std::ostream& out,
              std::ostream& err);

// Solves every line of a corpus. Comment lines (#...) are skipped; blank
// lines are the empty code. Bad lines are recorded, never fatal.
BatchReport run_batch(std::istream& in, const SearchBudget& budget);

int cmd_batch(const std::string& path, const OutputOptions& output, const SearchBudget& budget, std::ostream& out,
              std::ostream& err);

struct GenerateOptions {
  TangleRecipe recipe;
  std::size_t count = 1;
  std::optional<std::string> output_path;
};

// "2,2,1,1" -> inverse RM1, inverse RM2, TM1, TM2 weights.
MoveMix parse_mix(std::string_view text);

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t max_crossings = 3;
  bool allow_large = false;
  SearchBudget budget;
  std::string counterexample_path = "verify_counterexamples.txt";
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace gaussknot::cli
