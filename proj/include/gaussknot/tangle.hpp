// Tangles: a disc in the projection that the knot crosses exactly four
// times. In a Gauss code a tangle is a pair of disjoint cyclic intervals
// (the two strands through the disc) whose entries are closed under
// negation: every crossing met inside either strand is completed inside the
// union. The union must leave at least one entry outside, and the two
// strands must both be nonempty.
//
// The crossings shared between the strands decide how the four ends sit on
// the boundary circle: with an even count each strand's ends are adjacent,
// with an odd count they are opposite.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gaussknot/gauss_code.hpp"

namespace gaussknot {

struct CyclicInterval {
  Position start = 0;
  std::size_t length = 0;

  // Position of the last entry, for a code of the given length.
  Position last(std::size_t code_length) const noexcept { return (start + length - 1) % code_length; }
  bool contains(Position p, std::size_t code_length) const noexcept {
    return (p + code_length - start) % code_length < length;
  }

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
  friend auto operator<=>(const CyclicInterval&, const CyclicInterval&) = default;
};

struct Tangle {
  // Normalized so that first.start < second.start.
  CyclicInterval first;
  CyclicInterval second;
  std::size_t size = 0;
  std::size_t inter_strand_count = 0;
  bool ends_adjacent = true;

  friend bool operator==(const Tangle&, const Tangle&) = default;
};

// The four places where the knot leaves the disc. Each names the exterior
// entry immediately beyond one boundary of one strand.
enum class TangleEnd { FirstBefore = 0, FirstAfter = 1, SecondBefore = 2, SecondAfter = 3 };

inline constexpr std::array<TangleEnd, 4> kTangleEnds = {TangleEnd::FirstBefore, TangleEnd::FirstAfter,
                                                         TangleEnd::SecondBefore, TangleEnd::SecondAfter};

const char* to_string(TangleEnd end) noexcept;
bool on_first_strand(TangleEnd end) noexcept;

// Position just beyond the given end, or nullopt when that position lies in
// the tangle itself (the two strands touch there).
std::optional<Position> end_position(const GaussCode& code, const Tangle& tangle, TangleEnd end);

bool is_valid_tangle(const GaussCode& code, const CyclicInterval& a, const CyclicInterval& b);

// Builds the normalized tangle record for a valid interval pair.
// Throws std::invalid_argument if the pair is not a valid tangle.
Tangle make_tangle(const GaussCode& code, const CyclicInterval& a, const CyclicInterval& b);

// Tangles of exactly `size` crossings, ordered by first.start (then
// first.length, second.start, second.length). Requires
// 1 <= size <= crossings - 1; throws std::invalid_argument otherwise.
std::vector<Tangle> find_tangles(const GaussCode& code, std::size_t size);

// Every tangle of every size, ascending by size and then as find_tangles.
std::vector<Tangle> find_all_tangles(const GaussCode& code);

// Tangles whose first strand (before normalization) is exactly `strand`:
// every closed second strand that contains the negations of the strand's
// externally completed crossings. Used by the generator to sample
// translations without a full scan.
std::vector<Tangle> tangles_from_strand(const GaussCode& code, const CyclicInterval& strand);

}  // namespace gaussknot
