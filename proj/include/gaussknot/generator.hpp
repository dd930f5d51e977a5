// Test instances and ground truth.
//
// Instances are built by running moves backwards: inserting curls (inverse
// RM1) and bigons (inverse RM2) into a known code, interleaved with
// translations that smear the inserted patterns apart. Starting from the
// empty code, everything produced is an unknot by construction.
//
// The oracles are deliberately brute force: enumerate every code of a few
// crossings, and search the full move graph (all four moves at every
// crossing level) for the fewest crossings reachable.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gaussknot/budget.hpp"
#include "gaussknot/gauss_code.hpp"
#include "gaussknot/tangle.hpp"

namespace gaussknot {

struct MoveMix {
  double inverse_rm1 = 2.0;
  double inverse_rm2 = 2.0;
  double tm1 = 1.0;
  double tm2 = 1.0;
};

struct TangleRecipe {
  std::uint64_t seed = 1;
  std::size_t target_crossings = 0;
  MoveMix mix;

  static constexpr std::size_t kMaxCrossings = 50;

  // Throws std::invalid_argument for negative weights, a target above
  // kMaxCrossings, no insertion move, or an odd target without inverse RM1.
  void check() const;
};

// Inserts the pair (m, -m), or (-m, m) when !positive_first, before
// position `gap` (gap == length appends). m = crossings + 1.
GaussCode inverse_rm1(const GaussCode& code, Position gap, bool positive_first = true);

// Inserts a same-sign pair (a, b) before gap1 and its negations before
// gap2, as (-a, -b) or, when swap_partner, (-b, -a). Fresh labels
// a = n + 1, b = n + 2. gap == length appends, which is cyclically the
// same place as gap 0; the gaps must differ modulo length unless the code is
// empty.
GaussCode inverse_rm2(const GaussCode& code, Position gap1, Position gap2, bool overpass = true,
                      bool swap_partner = false);

GaussCode random_unknot(const TangleRecipe& recipe);

// `count` instances from one recipe; instance i uses a seed mixed from
// recipe.seed and i, so corpora with a shared prefix agree on it.
std::vector<GaussCode> random_unknot_corpus(const TangleRecipe& recipe, std::size_t count);

// Every valid code with exactly n crossings, one canonical_form per class,
// in ascending order. Refuses n > guard.
std::vector<GaussCode> enumerate_valid_codes(std::size_t n, std::size_t guard = 4);

// Fewest crossings over everything reachable from code by any sequence of
// RM1, RM2, TM1 and TM2 moves. Throws BudgetExceeded when truncated.
std::size_t min_reachable(const GaussCode& code, const SearchBudget& budget = {});

// A third-Reidemeister configuration: a one-crossing tangle c / -c, with a
// same-sign pass just before each of its strands and the two negated passes
// adjacent elsewhere. Built by inserting those six entries into `base`;
// find_tm2 on the tangle reports exactly one site.
struct Rm3Configuration {
  GaussCode code;
  Tangle tangle;
};

Rm3Configuration rm3_configuration(const GaussCode& base, std::mt19937_64& rng);

}  // namespace gaussknot
