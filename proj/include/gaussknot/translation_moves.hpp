// Translation moves: rewrites that keep the crossing count but change the
// projection, so that a reduction can become available.
//
// TM1 (a flype) flips a tangle across a crossing formed just outside one end
// of each strand. Every entry inside the tangle is negated (the flip swaps
// over and under) and each of the two outside entries hops to the opposite
// end of the strand it was next to.
//
// TM2 slides a strand that passes (over or under) both tangle strands just
// outside one end of each, to the far ends. The two passes hop across their
// strands; the tangle is left alone. With a one-crossing tangle this is the
// third Reidemeister move.
//
// The hop rule: an entry just before a strand is reinserted just after it,
// and an entry just after a strand is reinserted just before it.
//
// Where the strands' ends lie on the boundary circle matters. With an even
// number of crossings between the strands, each strand's two ends are
// neighbours and both moves keep the outside entries as they are. With an
// odd number the ends alternate around the circle, and the far side is met
// in the opposite order: TM1 exchanges over and under at the relocated
// crossing (both moved entries change sign), and TM2 reverses the order in
// which the sliding strand meets the two tangle strands (its adjacent pair
// of negated passes swaps places).
//
// A crossing between the two ends of one strand is not a TM1 site: flipping
// the tangle moves such a crossing onto the ends of the other strand, which
// the hop rule cannot express.
#pragma once

#include <vector>

#include "gaussknot/gauss_code.hpp"
#include "gaussknot/reduction_moves.hpp"
#include "gaussknot/tangle.hpp"

namespace gaussknot {

struct Tm1Site {
  Tangle tangle;
  TangleEnd end_a = TangleEnd::FirstBefore;
  TangleEnd end_b = TangleEnd::FirstAfter;
  Entry crossing_label = 0;

  friend bool operator==(const Tm1Site&, const Tm1Site&) = default;
};

struct Tm2Site {
  Tangle tangle;
  TangleEnd end_1 = TangleEnd::FirstBefore;   // on the first strand
  TangleEnd end_2 = TangleEnd::SecondBefore;  // on the second strand
  Entry pass_a = 0;
  Entry pass_b = 0;
  // First position of the adjacent pair holding -pass_a and -pass_b.
  Position partner_pos = 0;

  friend bool operator==(const Tm2Site&, const Tm2Site&) = default;
};

std::vector<Tm1Site> find_tm1(const GaussCode& code, const Tangle& tangle);
std::vector<Tm2Site> find_tm2(const GaussCode& code, const Tangle& tangle);

bool is_tm1_site(const GaussCode& code, const Tm1Site& site);
bool is_tm2_site(const GaussCode& code, const Tm2Site& site);

// Throw StaleSiteError when the site no longer matches.
GaussCode apply_tm1(const GaussCode& code, const Tm1Site& site);
GaussCode apply_tm2(const GaussCode& code, const Tm2Site& site);

}  // namespace gaussknot
