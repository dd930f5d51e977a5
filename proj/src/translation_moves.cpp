#include "gaussknot/translation_moves.hpp"

#include <array>
#include <optional>

namespace gaussknot {

namespace {

struct Hop {
  TangleEnd end;
  Position from;
};

struct HopOptions {
  bool negate_inside = false;
  bool negate_moved = false;
  // Adjacent pair (p, p+1) whose entries trade places, if any.
  std::optional<Position> swap_pair;
};

// Rebuilds the code with each hopping entry moved to the opposite end of
// its strand.
GaussCode hop_across(const GaussCode& code, const Tangle& tangle, const std::array<Hop, 2>& hops,
                     const HopOptions& options) {
  const std::size_t len = code.length();
  // pre/post insertions for the first and second strand
  std::array<std::vector<Entry>, 2> pre, post;
  std::vector<bool> moved(len, false);
  for (const Hop& h : hops) {
    moved[h.from] = true;
    const int strand = on_first_strand(h.end) ? 0 : 1;
    const bool was_before = h.end == TangleEnd::FirstBefore || h.end == TangleEnd::SecondBefore;
    (was_before ? post : pre)[strand].push_back(options.negate_moved ? -code[h.from] : code[h.from]);
  }
  std::vector<Entry> source = code.entries();
  if (options.swap_pair) std::swap(source[*options.swap_pair], source[code.next(*options.swap_pair)]);

  const std::array<const CyclicInterval*, 2> strands{&tangle.first, &tangle.second};
  std::vector<Entry> out;
  out.reserve(len);
  for (Position p = 0; p < len; ++p) {
    for (int s = 0; s < 2; ++s) {
      if (p == strands[s]->start) out.insert(out.end(), pre[s].begin(), pre[s].end());
    }
    if (!moved[p]) {
      const bool inside = tangle.first.contains(p, len) || tangle.second.contains(p, len);
      out.push_back(options.negate_inside && inside ? -source[p] : source[p]);
    }
    for (int s = 0; s < 2; ++s) {
      if (p == strands[s]->last(len)) out.insert(out.end(), post[s].begin(), post[s].end());
    }
  }
  return relabel_sequential(GaussCode(std::move(out)));
}

bool tangle_still_valid(const GaussCode& code, const Tangle& tangle) {
  if (!is_valid_tangle(code, tangle.first, tangle.second)) return false;
  return make_tangle(code, tangle.first, tangle.second) == tangle;
}

std::optional<Position> adjacent_pair_start(const GaussCode& code, Position p, Position q) {
  if (code.next(p) == q) return p;
  if (code.next(q) == p) return q;
  return std::nullopt;
}

std::optional<Tm2Site> tm2_at(const GaussCode& code, const std::vector<Position>& partner, const Tangle& tangle,
                              TangleEnd e1, TangleEnd e2) {
  const auto p1 = end_position(code, tangle, e1);
  const auto p2 = end_position(code, tangle, e2);
  if (!p1 || !p2 || *p1 == *p2) return std::nullopt;
  const Entry a = code[*p1];
  const Entry b = code[*p2];
  if ((a > 0) != (b > 0)) return std::nullopt;
  const Position q1 = partner[*p1];
  const Position q2 = partner[*p2];
  const auto start = adjacent_pair_start(code, q1, q2);
  if (!start) return std::nullopt;
  if (q1 == *p2 || q2 == *p1) return std::nullopt;
  return Tm2Site{tangle, e1, e2, a, b, *start};
}

}  // namespace

std::vector<Tm1Site> find_tm1(const GaussCode& code, const Tangle& tangle) {
  std::vector<Tm1Site> sites;
  if (code.empty()) return sites;
  for (std::size_t i = 0; i < kTangleEnds.size(); ++i) {
    const auto pa = end_position(code, tangle, kTangleEnds[i]);
    if (!pa) continue;
    for (std::size_t j = i + 1; j < kTangleEnds.size(); ++j) {
      const auto pb = end_position(code, tangle, kTangleEnds[j]);
      if (on_first_strand(kTangleEnds[i]) == on_first_strand(kTangleEnds[j])) continue;
      if (!pb || *pa == *pb || code[*pa] != -code[*pb]) continue;
      sites.push_back(Tm1Site{tangle, kTangleEnds[i], kTangleEnds[j], std::abs(code[*pa])});
    }
  }
  return sites;
}

bool is_tm1_site(const GaussCode& code, const Tm1Site& site) {
  if (on_first_strand(site.end_a) == on_first_strand(site.end_b)) return false;
  if (!tangle_still_valid(code, site.tangle)) return false;
  const auto pa = end_position(code, site.tangle, site.end_a);
  const auto pb = end_position(code, site.tangle, site.end_b);
  return pa && pb && *pa != *pb && code[*pa] == -code[*pb] && std::abs(code[*pa]) == site.crossing_label;
}

GaussCode apply_tm1(const GaussCode& code, const Tm1Site& site) {
  if (!is_tm1_site(code, site)) throw StaleSiteError("TM1 site no longer matches the code");
  const Position pa = *end_position(code, site.tangle, site.end_a);
  const Position pb = *end_position(code, site.tangle, site.end_b);
  HopOptions options;
  options.negate_inside = true;
  options.negate_moved = !site.tangle.ends_adjacent;
  return hop_across(code, site.tangle, {Hop{site.end_a, pa}, Hop{site.end_b, pb}}, options);
}

std::vector<Tm2Site> find_tm2(const GaussCode& code, const Tangle& tangle) {
  std::vector<Tm2Site> sites;
  if (code.empty()) return sites;
  const auto partner = partner_positions(code);
  for (TangleEnd e1 : {TangleEnd::FirstBefore, TangleEnd::FirstAfter}) {
    for (TangleEnd e2 : {TangleEnd::SecondBefore, TangleEnd::SecondAfter}) {
      if (auto site = tm2_at(code, partner, tangle, e1, e2)) sites.push_back(*site);
    }
  }
  return sites;
}

bool is_tm2_site(const GaussCode& code, const Tm2Site& site) {
  if (!on_first_strand(site.end_1) || on_first_strand(site.end_2)) return false;
  if (!tangle_still_valid(code, site.tangle)) return false;
  const auto fresh = tm2_at(code, partner_positions(code), site.tangle, site.end_1, site.end_2);
  return fresh && *fresh == site;
}

GaussCode apply_tm2(const GaussCode& code, const Tm2Site& site) {
  if (!is_tm2_site(code, site)) throw StaleSiteError("TM2 site no longer matches the code");
  const Position p1 = *end_position(code, site.tangle, site.end_1);
  const Position p2 = *end_position(code, site.tangle, site.end_2);
  HopOptions options;
  if (!site.tangle.ends_adjacent) options.swap_pair = site.partner_pos;
  return hop_across(code, site.tangle, {Hop{site.end_1, p1}, Hop{site.end_2, p2}}, options);
}

}  // namespace gaussknot
