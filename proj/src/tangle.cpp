#include "gaussknot/tangle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gaussknot {

namespace {

using IntervalPair = std::pair<CyclicInterval, CyclicInterval>;

IntervalPair normalized(const CyclicInterval& a, const CyclicInterval& b) {
  return a.start < b.start ? IntervalPair{a, b} : IntervalPair{b, a};
}

bool well_formed(const CyclicInterval& iv, std::size_t len) {
  return iv.length >= 1 && iv.length < len && iv.start < len;
}

// Walks the complement of `strand` (a linear run of positions starting just
// after it) and yields every interval of that run that holds the negations
// of the strand's external crossings and is closed under negation together
// with the strand.
class ComplementWalker {
 public:
  ComplementWalker(std::size_t code_length, const std::vector<Position>& partner, const CyclicInterval& strand)
      : partner_(partner), strand_(strand), len_(code_length),
        base_((strand.start + strand.length) % len_), run_(len_ - strand.length) {}

  // Index within the complement run, or -1 for positions inside the strand.
  long index_of(Position p) const {
    if (strand_.contains(p, len_)) return -1;
    return static_cast<long>((p + len_ - base_) % len_);
  }
  Position position_of(long k) const { return (base_ + static_cast<std::size_t>(k)) % len_; }

  template <typename Emit>
  void run(Emit&& emit) {
    long lo = static_cast<long>(run_), hi = -1;
    for (std::size_t i = 0; i < strand_.length; ++i) {
      const Position p = (strand_.start + i) % len_;
      const long k = index_of(partner_[p]);
      if (k < 0) continue;
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    if (hi < 0) return;  // strand closes on itself; no second strand to trace

    auto seed = close(lo, hi, 0, -1);
    if (!seed) return;
    std::set<std::pair<long, long>> seen{*seed};
    std::vector<std::pair<long, long>> pending{*seed};
    while (!pending.empty()) {
      const auto [a, b] = pending.back();
      pending.pop_back();
      emit(CyclicInterval{position_of(a), static_cast<std::size_t>(b - a + 1)});
      if (a > 0) {
        if (auto wider = close(a - 1, b, a, b); wider && seen.insert(*wider).second) pending.push_back(*wider);
      }
      if (b + 1 < static_cast<long>(run_)) {
        if (auto wider = close(a, b + 1, a, b); wider && seen.insert(*wider).second) pending.push_back(*wider);
      }
    }
  }

 private:
  // Smallest closed interval containing [lo, hi], given that [done_lo,
  // done_hi] is already known to be closed. nullopt when the closure is the
  // whole complement (no exterior would remain).
  std::optional<std::pair<long, long>> close(long lo, long hi, long done_lo, long done_hi) const {
    // [scan_lo, scan_hi] is the range whose partners have been examined.
    long scan_lo = done_lo, scan_hi = done_hi;
    if (scan_lo > scan_hi) {
      scan_lo = lo;
      scan_hi = lo - 1;
    }
    while (lo < scan_lo || hi > scan_hi) {
      const long k = lo < scan_lo ? --scan_lo : ++scan_hi;
      const long j = index_of(partner_[position_of(k)]);
      if (j < 0) continue;
      lo = std::min(lo, j);
      hi = std::max(hi, j);
    }
    if (lo == 0 && hi + 1 == static_cast<long>(run_)) return std::nullopt;
    return std::pair{lo, hi};
  }

  const std::vector<Position>& partner_;
  CyclicInterval strand_;
  std::size_t len_;
  Position base_;
  std::size_t run_;
};

bool valid_pair(std::size_t len, const std::vector<Position>& partner, const CyclicInterval& a,
                const CyclicInterval& b) {
  if (!well_formed(a, len) || !well_formed(b, len)) return false;
  if (a.length + b.length >= len) return false;
  if (a.contains(b.start, len) || b.contains(a.start, len)) return false;
  const auto inside = [&](Position p) { return a.contains(p, len) || b.contains(p, len); };
  for (const auto& iv : {a, b}) {
    for (std::size_t i = 0; i < iv.length; ++i) {
      if (!inside(partner[(iv.start + i) % len])) return false;
    }
  }
  return true;
}

Tangle build_tangle(std::size_t len, const std::vector<Position>& partner, const CyclicInterval& a,
                    const CyclicInterval& b) {
  const auto [first, second] = normalized(a, b);
  Tangle t;
  t.first = first;
  t.second = second;
  t.size = (first.length + second.length) / 2;
  for (std::size_t i = 0; i < first.length; ++i) {
    if (second.contains(partner[(first.start + i) % len], len)) ++t.inter_strand_count;
  }
  t.ends_adjacent = t.inter_strand_count % 2 == 0;
  return t;
}

// Intervals closed under negation on their own.
std::vector<CyclicInterval> self_closed_intervals(const GaussCode& code, const std::vector<Position>& partner) {
  const std::size_t len = code.length();
  std::vector<CyclicInterval> out;
  for (Position s = 0; s < len; ++s) {
    std::size_t completed = 0;
    for (std::size_t l = 1; l < len; ++l) {
      const Position p = (s + l - 1) % len;
      if ((partner[p] + len - s) % len < l) completed += 2;
      if (completed == l) out.push_back({s, l});
    }
  }
  return out;
}

std::vector<Tangle> collect(const GaussCode& code, std::optional<std::size_t> only_size) {
  const std::size_t len = code.length();
  std::vector<Tangle> tangles;
  if (code.crossings() < 2) return tangles;
  const auto partner = partner_positions(code);
  std::set<IntervalPair> seen;

  const auto record = [&](const CyclicInterval& a, const CyclicInterval& b) {
    const std::size_t size = (a.length + b.length) / 2;
    if (only_size && size != *only_size) return;
    if (seen.insert(normalized(a, b)).second) tangles.push_back(build_tangle(len, partner, a, b));
  };

  // Strands sharing at least one crossing: trace the second strand from
  // the negations of the first strand's external crossings.
  for (Position s = 0; s < len; ++s) {
    for (std::size_t l = 1; l < len; ++l) {
      if (only_size && l > 2 * *only_size) break;
      const CyclicInterval strand{s, l};
      ComplementWalker(code.length(), partner, strand).run([&](const CyclicInterval& other) { record(strand, other); });
    }
  }

  // Strands sharing no crossing: each is closed by itself.
  const auto closed = self_closed_intervals(code, partner);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const auto& a = closed[i];
      const auto& b = closed[j];
      if (a.length + b.length >= len) continue;
      if (a.contains(b.start, len) || b.contains(a.start, len)) continue;
      record(a, b);
    }
  }

  std::sort(tangles.begin(), tangles.end(), [](const Tangle& x, const Tangle& y) {
    return std::tie(x.size, x.first, x.second) < std::tie(y.size, y.first, y.second);
  });
  return tangles;
}

}  // namespace

const char* to_string(TangleEnd end) noexcept {
  switch (end) {
    case TangleEnd::FirstBefore:
      return "first_before";
    case TangleEnd::FirstAfter:
      return "first_after";
    case TangleEnd::SecondBefore:
      return "second_before";
    case TangleEnd::SecondAfter:
      return "second_after";
  }
  return "?";
}

bool on_first_strand(TangleEnd end) noexcept {
  return end == TangleEnd::FirstBefore || end == TangleEnd::FirstAfter;
}

std::optional<Position> end_position(const GaussCode& code, const Tangle& tangle, TangleEnd end) {
  const std::size_t len = code.length();
  const CyclicInterval& iv = on_first_strand(end) ? tangle.first : tangle.second;
  const bool before = end == TangleEnd::FirstBefore || end == TangleEnd::SecondBefore;
  const Position p = before ? (iv.start + len - 1) % len : (iv.start + iv.length) % len;
  if (tangle.first.contains(p, len) || tangle.second.contains(p, len)) return std::nullopt;
  return p;
}

bool is_valid_tangle(const GaussCode& code, const CyclicInterval& a, const CyclicInterval& b) {
  return valid_pair(code.length(), partner_positions(code), a, b);
}

Tangle make_tangle(const GaussCode& code, const CyclicInterval& a, const CyclicInterval& b) {
  const auto partner = partner_positions(code);
  if (!valid_pair(code.length(), partner, a, b)) throw std::invalid_argument("interval pair is not a valid tangle");
  return build_tangle(code.length(), partner, a, b);
}

std::vector<Tangle> find_tangles(const GaussCode& code, std::size_t size) {
  if (size < 1 || size + 1 > code.crossings()) {
    throw std::invalid_argument("tangle size must lie in [1, crossings - 1]");
  }
  return collect(code, size);
}

std::vector<Tangle> find_all_tangles(const GaussCode& code) { return collect(code, std::nullopt); }

std::vector<Tangle> tangles_from_strand(const GaussCode& code, const CyclicInterval& strand) {
  std::vector<Tangle> out;
  if (!well_formed(strand, code.length())) return out;
  const auto partner = partner_positions(code);
  ComplementWalker(code.length(), partner, strand).run([&](const CyclicInterval& other) {
    out.push_back(build_tangle(code.length(), partner, strand, other));
  });
  return out;
}

}  // namespace gaussknot
