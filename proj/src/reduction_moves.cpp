#include "gaussknot/reduction_moves.hpp"

#include <algorithm>

namespace gaussknot {

namespace {

bool same_sign(Entry a, Entry b) noexcept { return (a > 0) == (b > 0); }

// Position of the first entry of the adjacent pair {p, q}, or length() when
// p and q are not cyclically adjacent.
Position adjacent_pair_start(const GaussCode& code, Position p, Position q) noexcept {
  if (code.next(p) == q) return p;
  if (code.next(q) == p) return q;
  return code.length();
}

std::vector<std::size_t> sorted_positions(const GaussCode& code, Position pair_pos, Position partner_pos) {
  std::vector<std::size_t> ps{pair_pos, code.next(pair_pos), partner_pos, code.next(partner_pos)};
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace

bool is_rm1_site(const GaussCode& code, const Rm1Site& site) noexcept {
  if (site.pos >= code.length()) return false;
  return code[site.pos] == -code[code.next(site.pos)];
}

bool is_rm2_site(const GaussCode& code, const Rm2Site& site) noexcept {
  const std::size_t len = code.length();
  if (len < 4 || site.pair_pos >= len || site.partner_pos >= len) return false;
  const Entry x = code[site.pair_pos];
  const Entry y = code[code.next(site.pair_pos)];
  if (!same_sign(x, y)) return false;
  const Entry u = code[site.partner_pos];
  const Entry v = code[code.next(site.partner_pos)];
  if (!((u == -x && v == -y) || (u == -y && v == -x))) return false;
  const auto ps = sorted_positions(code, site.pair_pos, site.partner_pos);
  return std::adjacent_find(ps.begin(), ps.end()) == ps.end();
}

std::vector<Rm1Site> find_rm1(const GaussCode& code) {
  std::vector<Rm1Site> sites;
  for (Position p = 0; p < code.length(); ++p) {
    if (code[p] == -code[code.next(p)]) sites.push_back({p});
  }
  return sites;
}

std::vector<Rm2Site> find_rm2(const GaussCode& code) {
  std::vector<Rm2Site> sites;
  const std::size_t len = code.length();
  if (len < 4) return sites;
  const auto partner = partner_positions(code);
  for (Position p = 0; p < len; ++p) {
    const Position q = code.next(p);
    if (!same_sign(code[p], code[q])) continue;
    const Position start = adjacent_pair_start(code, partner[p], partner[q]);
    if (start == len) continue;
    Rm2Site site{p, start};
    const auto ps = sorted_positions(code, site.pair_pos, site.partner_pos);
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) continue;
    sites.push_back(site);
  }
  return sites;
}

GaussCode erase_positions(const GaussCode& code, const std::vector<Position>& positions) {
  std::vector<bool> drop(code.length(), false);
  for (Position p : positions) drop[p] = true;
  std::vector<Entry> out;
  out.reserve(code.length());
  for (Position p = 0; p < code.length(); ++p) {
    if (!drop[p]) out.push_back(code[p]);
  }
  return relabel_sequential(GaussCode(std::move(out)));
}

GaussCode apply_rm1(const GaussCode& code, const Rm1Site& site) {
  if (!is_rm1_site(code, site)) throw StaleSiteError("RM1 site no longer matches the code");
  return erase_positions(code, {site.pos, code.next(site.pos)});
}

GaussCode apply_rm2(const GaussCode& code, const Rm2Site& site) {
  if (!is_rm2_site(code, site)) throw StaleSiteError("RM2 site no longer matches the code");
  return erase_positions(code, sorted_positions(code, site.pair_pos, site.partner_pos));
}

bool has_reduction(const GaussCode& code) {
  const std::size_t len = code.length();
  for (Position p = 0; p < len; ++p) {
    if (code[p] == -code[code.next(p)]) return true;
  }
  if (len < 4) return false;
  const auto partner = partner_positions(code);
  for (Position p = 0; p < len; ++p) {
    const Position q = code.next(p);
    if (same_sign(code[p], code[q]) && adjacent_pair_start(code, partner[p], partner[q]) != len) return true;
  }
  return false;
}

}  // namespace gaussknot
