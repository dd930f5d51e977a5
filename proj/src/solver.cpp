#include "gaussknot/solver.hpp"

#include <deque>
#include <unordered_set>

namespace gaussknot {

void SearchBudget::check() const {
  if (max_nodes == 0 || max_time.count() <= 0) throw std::invalid_argument("search budget limits must be positive");
}

BudgetExceeded::BudgetExceeded(BudgetLimit limit)
    : std::runtime_error(limit == BudgetLimit::Nodes ? "search node budget exceeded" : "search time budget exceeded"),
      limit_(limit) {}

const char* to_string(StepOutcome::Kind kind) noexcept {
  switch (kind) {
    case StepOutcome::Kind::Reduced:
      return "reduced";
    case StepOutcome::Kind::Translated:
      return "translated";
    case StepOutcome::Kind::Exhausted:
      return "exhausted";
  }
  return "?";
}

std::size_t SolveReport::reduction_count() const noexcept {
  std::size_t n = 0;
  for (const auto& m : moves) n += m.move.is_reduction() ? 1 : 0;
  return n;
}

std::size_t SolveReport::translation_count() const noexcept { return moves.size() - reduction_count(); }

std::vector<std::size_t> SolveReport::translation_path_lengths() const {
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < moves.size();) {
    std::size_t j = i;
    while (j < moves.size() && moves[j].step == moves[i].step) ++j;
    if (!moves[i].move.is_reduction()) lengths.push_back(j - i);
    i = j;
  }
  return lengths;
}

TranslationSearch explore_translations(const GaussCode& code, const SearchBudget& budget) {
  budget.check();
  return explore_translations(code, Deadline(budget));
}

TranslationSearch explore_translations(const GaussCode& start, const Deadline& deadline) {
  if (has_reduction(start)) throw std::invalid_argument("explore_translations needs a code without reduction sites");

  struct Node {
    GaussCode code;
    std::size_t parent;
    MoveDescriptor move;
  };
  std::vector<Node> nodes{{start, 0, {}}};
  std::unordered_set<GaussCode, GaussCodeHash> visited{canonical_form(start)};
  std::deque<std::size_t> frontier{0};
  TranslationSearch result;

  while (!frontier.empty()) {
    deadline.check_time();
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (auto& move : translation_candidates(nodes[current].code)) {
      GaussCode next = apply_move(nodes[current].code, move);
      if (!visited.insert(canonical_form(next)).second) continue;
      deadline.check_nodes(visited.size());
      const bool reducible = has_reduction(next);
      nodes.push_back({std::move(next), current, std::move(move)});
      if (reducible) {
        result.found = true;
        result.code = nodes.back().code;
        for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent) result.path.push_back(nodes[i].move);
        std::reverse(result.path.begin(), result.path.end());
        result.nodes_explored = visited.size();
        return result;
      }
      frontier.push_back(nodes.size() - 1);
    }
  }
  result.code = start;
  result.nodes_explored = visited.size();
  return result;
}

StepOutcome step(const GaussCode& code, const SearchBudget& budget) {
  budget.check();
  return step(code, Deadline(budget));
}

StepOutcome step(const GaussCode& code, const Deadline& deadline) {
  if (code.empty()) throw std::invalid_argument("step needs a nonempty code");
  StepOutcome out;

  if (auto rm2 = find_rm2(code); !rm2.empty()) {
    out.kind = StepOutcome::Kind::Reduced;
    out.moves = {{rm2.front()}};
    out.code = apply_rm2(code, rm2.front());
    return out;
  }
  if (auto rm1 = find_rm1(code); !rm1.empty()) {
    out.kind = StepOutcome::Kind::Reduced;
    out.moves = {{rm1.front()}};
    out.code = apply_rm1(code, rm1.front());
    return out;
  }

  for (auto& move : translation_candidates(code)) {
    GaussCode next = apply_move(code, move);
    ++out.nodes_explored;
    if (has_reduction(next)) {
      out.kind = StepOutcome::Kind::Translated;
      out.moves = {std::move(move)};
      out.code = std::move(next);
      return out;
    }
  }
  deadline.check_time();

  TranslationSearch search = explore_translations(code, deadline);
  out.nodes_explored += search.nodes_explored;
  if (search.found) {
    out.kind = StepOutcome::Kind::Translated;
    out.moves = std::move(search.path);
    out.code = std::move(search.code);
    out.from_search = true;
    return out;
  }
  out.kind = StepOutcome::Kind::Exhausted;
  out.code = code;
  return out;
}

SolveReport solve(const GaussCode& code, const SearchBudget& budget) {
  budget.check();
  const Deadline deadline(budget);
  SolveReport report;
  report.initial_code = code;
  report.crossings_initial = code.crossings();
  GaussCode current = relabel_sequential(code);

  const auto finish = [&] {
    report.final_code = current;
    report.crossings_final = current.crossings();
    report.is_unknot = current.empty();
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(deadline.elapsed());
  };

  std::size_t step_index = 0;
  while (!current.empty()) {
    StepOutcome outcome;
    try {
      outcome = step(current, deadline);
    } catch (const BudgetExceeded& e) {
      finish();
      throw SolveBudgetExceeded(e.limit(), std::move(report));
    }
    report.search_nodes_explored += outcome.nodes_explored;
    if (outcome.kind == StepOutcome::Kind::Exhausted) break;
    GaussCode walk = current;
    for (auto& move : outcome.moves) {
      walk = apply_move(walk, move);
      report.moves.push_back({std::move(move), walk, step_index});
    }
    current = std::move(outcome.code);
    ++step_index;
  }
  finish();
  return report;
}

GaussCode replay(const SolveReport& report) {
  GaussCode code = relabel_sequential(report.initial_code);
  for (const auto& m : report.moves) code = apply_move(code, m.move);
  return code;
}

}  // namespace gaussknot
