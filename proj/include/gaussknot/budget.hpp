// Limits on state-space searches. A truncated search is always reported as
// BudgetExceeded; it is never folded into "nothing more to find".
#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>

namespace gaussknot {

struct SearchBudget {
  // Distinct canonical forms a single search may visit.
  std::size_t max_nodes = 1'000'000;
  // Wall clock for one whole solve (or one oracle search).
  std::chrono::milliseconds max_time{std::chrono::minutes(5)};

  // Throws std::invalid_argument unless both limits are positive.
  void check() const;
};

enum class BudgetLimit { Nodes, Time };

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(BudgetLimit limit);
  BudgetLimit limit() const noexcept { return limit_; }

 private:
  BudgetLimit limit_;
};

// Tracks the wall clock against a budget from construction onwards.
class Deadline {
 public:
  explicit Deadline(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  const SearchBudget& budget() const noexcept { return budget_; }
  std::chrono::steady_clock::duration elapsed() const { return std::chrono::steady_clock::now() - start_; }
  void check_time() const {
    if (elapsed() > budget_.max_time) throw BudgetExceeded(BudgetLimit::Time);
  }
  void check_nodes(std::size_t visited) const {
    if (visited > budget_.max_nodes) throw BudgetExceeded(BudgetLimit::Nodes);
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gaussknot
