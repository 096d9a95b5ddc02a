#include "ghol/germ.hpp"

#include <algorithm>

namespace ghol {

Germ germ_at(const FiniteSite& site, int x, int open_index, Subgroupoid h) {
  const FiniteSite::Mask& u = site.open(open_index);
  if (!site.mask_contains(u, x))
    throw PointOutside("germ point not in the representative open");
  std::vector<int> expected = site.open_vertices(open_index);
  if (h.objects != expected)
    throw NotWide("representative is not wide over its open");
  h.check_closed();
  return {x, open_index, std::move(h)};
}

bool germ_equal(const FiniteSite& site, const Germ& a, const Germ& b) {
  if (a.point != b.point) return false;
  if (a.rep.parent.get() != b.rep.parent.get() &&
      !(*a.rep.parent == *b.rep.parent))
    return false;
  const FiniteSite::Mask& ua = site.open(a.open);
  const FiniteSite::Mask& ub = site.open(b.open);
  for (int w = 0; w < site.num_opens(); ++w) {
    const FiniteSite::Mask& mask = site.open(w);
    if (!site.mask_contains(mask, a.point)) continue;
    if (!site.mask_subset(mask, ua) || !site.mask_subset(mask, ub)) continue;
    std::vector<int> verts = site.open_vertices(w);
    if (a.rep.restrict_to(verts) == b.rep.restrict_to(verts)) return true;
  }
  return false;
}

}  // namespace ghol
