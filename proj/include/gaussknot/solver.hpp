// The simplification loop.
//
// Each step tries, in order:
//   1. the first RM2 site,
//   2. the first RM1 site,
//   3. every single translation (TM1 or TM2), keeping the first whose result
//      admits a reduction,
//   4. a breadth-first search over all projections with the same crossing
//      count reachable through translations, deduplicated by canonical form,
//      stopping at the first one that admits a reduction.
// When all four fail the code is as simple as these moves can make it.
#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "gaussknot/budget.hpp"
#include "gaussknot/gauss_code.hpp"
#include "gaussknot/moves.hpp"

namespace gaussknot {

struct StepOutcome {
  enum class Kind { Reduced, Translated, Exhausted };

  Kind kind = Kind::Exhausted;
  // One reduction, or the translation path that enables one.
  std::vector<MoveDescriptor> moves;
  GaussCode code;
  std::size_t nodes_explored = 0;
  // Reached through the full search rather than the one-move lookahead.
  bool from_search = false;
};

const char* to_string(StepOutcome::Kind kind) noexcept;

struct AppliedMove {
  MoveDescriptor move;
  GaussCode result;
  // Index of the solver step this move belongs to; a multi-move
  // translation path shares one step index.
  std::size_t step = 0;
};

struct SolveReport {
  GaussCode initial_code;
  GaussCode final_code;
  bool is_unknot = false;
  std::vector<AppliedMove> moves;
  std::size_t crossings_initial = 0;
  std::size_t crossings_final = 0;
  std::size_t search_nodes_explored = 0;
  std::chrono::microseconds elapsed{0};

  std::size_t reduction_count() const noexcept;
  std::size_t translation_count() const noexcept;
  // Lengths of the translation paths committed by the solver, in order.
  std::vector<std::size_t> translation_path_lengths() const;
};

class SolveBudgetExceeded : public BudgetExceeded {
 public:
  SolveBudgetExceeded(BudgetLimit limit, SolveReport partial)
      : BudgetExceeded(limit), partial_(std::move(partial)) {}
  const SolveReport& partial() const noexcept { return partial_; }

 private:
  SolveReport partial_;
};

struct TranslationSearch {
  bool found = false;
  std::vector<MoveDescriptor> path;
  GaussCode code;
  std::size_t nodes_explored = 0;
};

// Requires a code with no reduction site (std::invalid_argument otherwise).
// Throws BudgetExceeded when truncated.
TranslationSearch explore_translations(const GaussCode& code, const SearchBudget& budget);
TranslationSearch explore_translations(const GaussCode& code, const Deadline& deadline);

// Requires a nonempty code. Throws BudgetExceeded from the full search.
StepOutcome step(const GaussCode& code, const SearchBudget& budget);
StepOutcome step(const GaussCode& code, const Deadline& deadline);

// Deterministic for a given code and budget (timing fields aside). Throws
// SolveBudgetExceeded carrying the report up to the truncated step.
SolveReport solve(const GaussCode& code, const SearchBudget& budget = {});

// Re-applies the report's moves to its initial code.
GaussCode replay(const SolveReport& report);

}  // namespace gaussknot
