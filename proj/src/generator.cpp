#include "gaussknot/generator.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <stdexcept>
#include <unordered_set>

#include "gaussknot/moves.hpp"

namespace gaussknot {

namespace {

struct Insertion {
  Position gap;
  std::vector<Entry> entries;
};

// Insertions sharing a gap keep their relative order.
GaussCode insert_at_gaps(const GaussCode& code, std::vector<Insertion> insertions) {
  const std::size_t len = code.length();
  for (auto& ins : insertions) {
    if (ins.gap > len) throw std::out_of_range("insertion gap beyond the end of the code");
  }
  std::stable_sort(insertions.begin(), insertions.end(),
                   [](const Insertion& x, const Insertion& y) { return x.gap < y.gap; });
  std::vector<Entry> out;
  out.reserve(len + 8);
  auto next = insertions.begin();
  for (Position p = 0; p <= len; ++p) {
    for (; next != insertions.end() && next->gap == p; ++next) out.insert(out.end(), next->entries.begin(), next->entries.end());
    if (p < len) out.push_back(code[p]);
  }
  return GaussCode(std::move(out));
}

Entry fresh_label(const GaussCode& code, std::size_t offset) {
  Entry max_label = 0;
  for (Entry e : code) max_label = std::max(max_label, std::abs(e));
  return max_label + static_cast<Entry>(offset);
}

std::optional<MoveDescriptor> sample_translation(const GaussCode& code, MoveKind kind, std::mt19937_64& rng) {
  const std::size_t len = code.length();
  if (len < 4) return std::nullopt;
  std::uniform_int_distribution<std::size_t> start_dist(0, len - 1);
  std::uniform_int_distribution<std::size_t> length_dist(1, len - 2);
  std::vector<MoveDescriptor> sites;
  for (int attempt = 0; attempt < 32 && sites.empty(); ++attempt) {
    const CyclicInterval strand{start_dist(rng), length_dist(rng)};
    for (const auto& tangle : tangles_from_strand(code, strand)) {
      if (kind == MoveKind::TM1) {
        for (const auto& s : find_tm1(code, tangle)) sites.push_back({s});
      } else {
        for (const auto& s : find_tm2(code, tangle)) sites.push_back({s});
      }
    }
  }
  if (sites.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
  return sites[pick(rng)];
}

}  // namespace

void TangleRecipe::check() const {
  const auto& m = mix;
  if (m.inverse_rm1 < 0 || m.inverse_rm2 < 0 || m.tm1 < 0 || m.tm2 < 0) {
    throw std::invalid_argument("move weights must be nonnegative");
  }
  if (target_crossings > kMaxCrossings) throw std::invalid_argument("target crossings above 50");
  if (target_crossings > 0 && m.inverse_rm1 == 0 && m.inverse_rm2 == 0) {
    throw std::invalid_argument("recipe has no crossing-adding move");
  }
  if (m.inverse_rm1 == 0 && target_crossings % 2 != 0) {
    throw std::invalid_argument("odd target needs inverse RM1 (inverse RM2 adds two crossings)");
  }
}

GaussCode inverse_rm1(const GaussCode& code, Position gap, bool positive_first) {
  const Entry m = fresh_label(code, 1);
  return insert_at_gaps(code, {{gap, positive_first ? std::vector<Entry>{m, -m} : std::vector<Entry>{-m, m}}});
}

GaussCode inverse_rm2(const GaussCode& code, Position gap1, Position gap2, bool overpass, bool swap_partner) {
  const std::size_t len = code.length();
  if (len > 0 && gap1 % len == gap2 % len) throw std::invalid_argument("inverse RM2 needs two distinct gaps");
  const Entry sign = overpass ? 1 : -1;
  const Entry a = sign * fresh_label(code, 1);
  const Entry b = sign * fresh_label(code, 2);
  std::vector<Entry> partner = swap_partner ? std::vector<Entry>{-b, -a} : std::vector<Entry>{-a, -b};
  return insert_at_gaps(code, {{gap1, {a, b}}, {gap2, std::move(partner)}});
}

GaussCode random_unknot(const TangleRecipe& recipe) {
  recipe.check();
  std::mt19937_64 rng(recipe.seed);
  std::uniform_int_distribution<int> coin(0, 1);
  GaussCode code;

  while (code.crossings() < recipe.target_crossings) {
    const std::size_t remaining = recipe.target_crossings - code.crossings();
    const bool can_rm2 = remaining >= 2;
    std::vector<double> weights{recipe.mix.inverse_rm1, can_rm2 ? recipe.mix.inverse_rm2 : 0.0,
                                code.empty() ? 0.0 : recipe.mix.tm1, code.empty() ? 0.0 : recipe.mix.tm2};
    // remaining == 1 without inverse RM1 is excluded by check()
    if (weights[0] == 0 && weights[1] == 0) weights[0] = 1;
    std::discrete_distribution<int> choose(weights.begin(), weights.end());
    int choice = choose(rng);

    if (choice >= 2) {
      const auto kind = choice == 2 ? MoveKind::TM1 : MoveKind::TM2;
      if (auto move = sample_translation(code, kind, rng)) {
        code = apply_move(code, *move);
        continue;
      }
      // No site of that kind: fall back to an insertion.
      choice = can_rm2 && recipe.mix.inverse_rm2 > 0 ? 1 : 0;
      if (recipe.mix.inverse_rm1 == 0) choice = 1;
    }

    const std::size_t len = code.length();
    std::uniform_int_distribution<std::size_t> gap_dist(0, len == 0 ? 0 : len - 1);
    if (choice == 0) {
      code = inverse_rm1(code, gap_dist(rng), coin(rng) == 1);
    } else {
      const Position g1 = gap_dist(rng);
      Position g2 = gap_dist(rng);
      if (len > 1) {
        while (g2 == g1) g2 = gap_dist(rng);
      }
      code = inverse_rm2(code, g1, g2, coin(rng) == 1, coin(rng) == 1);
    }
  }
  return relabel_sequential(code);
}

std::vector<GaussCode> random_unknot_corpus(const TangleRecipe& recipe, std::size_t count) {
  std::vector<GaussCode> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // splitmix64 finalizer
    std::uint64_t z = recipe.seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    TangleRecipe instance = recipe;
    instance.seed = z ^ (z >> 31);
    corpus.push_back(random_unknot(instance));
  }
  return corpus;
}

std::vector<GaussCode> enumerate_valid_codes(std::size_t n, std::size_t guard) {
  if (n > guard) {
    throw std::invalid_argument("enumeration of " + std::to_string(n) + " crossings exceeds the guard of " +
                                std::to_string(guard) + "; raise the guard explicitly");
  }
  std::set<GaussCode> classes;
  std::vector<Entry> word;
  word.reserve(2 * n);
  // open[label] is the sign still owed for that label, 0 once closed.
  std::vector<Entry> open(n + 1, 0);

  const std::function<void(Entry)> extend = [&](Entry next_label) {
    if (word.size() == 2 * n) {
      classes.insert(canonical_form(GaussCode(word)));
      return;
    }
    for (Entry label = 1; label < next_label; ++label) {
      if (open[label] == 0) continue;
      const Entry owed = open[label];
      word.push_back(owed * label);
      open[label] = 0;
      extend(next_label);
      open[label] = owed;
      word.pop_back();
    }
    if (static_cast<std::size_t>(next_label) <= n) {
      for (Entry sign : {1, -1}) {
        word.push_back(sign * next_label);
        open[next_label] = -sign;
        extend(next_label + 1);
        open[next_label] = 0;
        word.pop_back();
      }
    }
  };
  extend(1);
  return {classes.begin(), classes.end()};
}

std::size_t min_reachable(const GaussCode& code, const SearchBudget& budget) {
  budget.check();
  const Deadline deadline(budget);
  const GaussCode root = canonical_form(code);
  std::unordered_set<GaussCode, GaussCodeHash> visited{root};
  // Fewest crossings first, FIFO among equals. The whole reachable set is
  // still visited unless the empty code turns up.
  using Item = std::tuple<std::size_t, std::size_t, GaussCode>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  std::size_t order = 0;
  frontier.emplace(root.crossings(), order++, root);
  std::size_t best = root.crossings();

  while (!frontier.empty() && best > 0) {
    deadline.check_time();
    const GaussCode current = std::get<2>(frontier.top());
    frontier.pop();
    auto moves = reduction_candidates(current);
    auto translations = translation_candidates(current);
    moves.insert(moves.end(), translations.begin(), translations.end());
    for (const auto& move : moves) {
      GaussCode next = canonical_form(apply_move(current, move));
      if (!visited.insert(next).second) continue;
      deadline.check_nodes(visited.size());
      best = std::min(best, next.crossings());
      frontier.emplace(next.crossings(), order++, std::move(next));
    }
  }
  return best;
}

Rm3Configuration rm3_configuration(const GaussCode& base, std::mt19937_64& rng) {
  const std::size_t len = base.length();
  std::uniform_int_distribution<int> coin(0, 1);
  const Entry pass = coin(rng) ? 1 : -1;
  const Entry a = pass * fresh_label(base, 1);
  const Entry b = pass * fresh_label(base, 2);
  const Entry c = (coin(rng) ? 1 : -1) * fresh_label(base, 3);

  std::vector<Entry> partner = coin(rng) ? std::vector<Entry>{-a, -b} : std::vector<Entry>{-b, -a};
  const auto build = [&](const std::array<Position, 3>& gaps) {
    GaussCode code = insert_at_gaps(base, {{gaps[0], {a, c}}, {gaps[1], {b, -c}}, {gaps[2], partner}});
    Position pc = 0, pnc = 0;
    for (Position p = 0; p < code.length(); ++p) {
      if (code[p] == c) pc = p;
      if (code[p] == -c) pnc = p;
    }
    Tangle tangle = make_tangle(code, {pc, 1}, {pnc, 1});
    return Rm3Configuration{std::move(code), tangle};
  };

  // Scattered gaps can line base entries up into a second slide across c;
  // those draws are rejected. Inserting all six entries in one gap never
  // does that.
  if (len >= 3) {
    std::vector<Position> all(len);
    std::iota(all.begin(), all.end(), Position{0});
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::shuffle(all.begin(), all.end(), rng);
      Rm3Configuration rm3 = build({all[0], all[1], all[2]});
      if (find_tm2(rm3.code, rm3.tangle).size() == 1) return rm3;
    }
  }
  const Position gap = len == 0 ? 0 : std::uniform_int_distribution<Position>(0, len - 1)(rng);
  return build({gap, gap, gap});
}

}  // namespace gaussknot
