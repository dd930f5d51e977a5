#include "gaussknot/moves.hpp"

namespace gaussknot {

namespace {

std::string interval_text(const CyclicInterval& iv) {
  return "[" + std::to_string(iv.start) + "+" + std::to_string(iv.length) + "]";
}

std::string tangle_text(const Tangle& t) {
  return "tangle " + interval_text(t.first) + interval_text(t.second) + " size " + std::to_string(t.size);
}

}  // namespace

const char* to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::RM1:
      return "RM1";
    case MoveKind::RM2:
      return "RM2";
    case MoveKind::TM1:
      return "TM1";
    case MoveKind::TM2:
      return "TM2";
  }
  return "?";
}

GaussCode apply_move(const GaussCode& code, const MoveDescriptor& move) {
  return std::visit(
      [&](const auto& site) -> GaussCode {
        using S = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<S, Rm1Site>) {
          return apply_rm1(code, site);
        } else if constexpr (std::is_same_v<S, Rm2Site>) {
          return apply_rm2(code, site);
        } else if constexpr (std::is_same_v<S, Tm1Site>) {
          return apply_tm1(code, site);
        } else {
          return apply_tm2(code, site);
        }
      },
      move.site);
}

std::vector<MoveDescriptor> reduction_candidates(const GaussCode& code) {
  std::vector<MoveDescriptor> out;
  for (const auto& s : find_rm2(code)) out.push_back({s});
  for (const auto& s : find_rm1(code)) out.push_back({s});
  return out;
}

std::vector<MoveDescriptor> translation_candidates(const GaussCode& code) {
  std::vector<MoveDescriptor> out;
  for (const auto& tangle : find_all_tangles(code)) {
    for (const auto& s : find_tm1(code, tangle)) out.push_back({s});
    for (const auto& s : find_tm2(code, tangle)) out.push_back({s});
  }
  return out;
}

std::string describe(const MoveDescriptor& move) {
  return std::visit(
      [](const auto& site) -> std::string {
        using S = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<S, Rm1Site>) {
          return "RM1 at " + std::to_string(site.pos);
        } else if constexpr (std::is_same_v<S, Rm2Site>) {
          return "RM2 at " + std::to_string(site.pair_pos) + " with " + std::to_string(site.partner_pos);
        } else if constexpr (std::is_same_v<S, Tm1Site>) {
          return std::string("TM1 ") + to_string(site.end_a) + "/" + to_string(site.end_b) + " crossing " +
                 std::to_string(site.crossing_label) + " " + tangle_text(site.tangle);
        } else {
          return std::string("TM2 ") + to_string(site.end_1) + "/" + to_string(site.end_2) + " passes " +
                 std::to_string(site.pass_a) + "," + std::to_string(site.pass_b) + " " + tangle_text(site.tangle);
        }
      },
      move.site);
}

}  // namespace gaussknot
