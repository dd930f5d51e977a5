// A located, applicable instance of one of the four moves, plus the
// enumeration order every search in the library relies on.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gaussknot/reduction_moves.hpp"
#include "gaussknot/translation_moves.hpp"

namespace gaussknot {

enum class MoveKind { RM1, RM2, TM1, TM2 };

const char* to_string(MoveKind kind) noexcept;

struct MoveDescriptor {
  std::variant<Rm1Site, Rm2Site, Tm1Site, Tm2Site> site;

  MoveKind kind() const noexcept { return static_cast<MoveKind>(site.index()); }
  bool is_reduction() const noexcept { return kind() == MoveKind::RM1 || kind() == MoveKind::RM2; }

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

GaussCode apply_move(const GaussCode& code, const MoveDescriptor& move);

// RM2 sites, then RM1 sites.
std::vector<MoveDescriptor> reduction_candidates(const GaussCode& code);

// Tangles in find_all_tangles order; for each, its TM1 sites then its TM2
// sites.
std::vector<MoveDescriptor> translation_candidates(const GaussCode& code);

// One-line human readable description, e.g. "TM2 first_before/second_after over 3,5".
std::string describe(const MoveDescriptor& move);

}  // namespace gaussknot
