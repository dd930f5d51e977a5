// Reduction moves: cyclic rewrites that delete crossings.
//
//   RM1  an adjacent pair (x, -x)                       -> both removed
//   RM2  an adjacent same-sign pair (x, y) whose negations
//        (-x, -y) are also adjacent, in either order     -> all four removed
//
// Adjacency wraps around the end of the code. Every apply_* re-checks its
// site and throws StaleSiteError rather than rewriting a code the site no
// longer describes; results are relabeled to 1..n.
#pragma once

#include <stdexcept>
#include <vector>

#include "gaussknot/gauss_code.hpp"

namespace gaussknot {

class StaleSiteError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Rm1Site {
  Position pos = 0;
  friend bool operator==(const Rm1Site&, const Rm1Site&) = default;
};

struct Rm2Site {
  Position pair_pos = 0;
  Position partner_pos = 0;
  friend bool operator==(const Rm2Site&, const Rm2Site&) = default;
};

std::vector<Rm1Site> find_rm1(const GaussCode& code);
std::vector<Rm2Site> find_rm2(const GaussCode& code);

bool is_rm1_site(const GaussCode& code, const Rm1Site& site) noexcept;
bool is_rm2_site(const GaussCode& code, const Rm2Site& site) noexcept;

GaussCode apply_rm1(const GaussCode& code, const Rm1Site& site);
GaussCode apply_rm2(const GaussCode& code, const Rm2Site& site);

// True when at least one RM1 or RM2 site exists. Cheaper than the finders.
bool has_reduction(const GaussCode& code);

// Drops the marked positions and relabels what is left.
GaussCode erase_positions(const GaussCode& code, const std::vector<Position>& positions);

}  // namespace gaussknot
