#pragma once

#include "ghol/groupoid.hpp"
#include "ghol/site.hpp"

namespace ghol {

// Germ of a wide subgroupoid at a point: a representative (U, H) with H
// wide in G|U. Equality is decided by scanning the finite topology for a
// witness open W with x in W, W in U1 and U2, and H1|W = H2|W.
struct Germ {
  int point = -1;
  int open = -1;  // index into the site
  Subgroupoid rep;
};

// Validates x in U and wideness of H in G|U.
Germ germ_at(const FiniteSite& site, int x, int open_index, Subgroupoid h);

bool germ_equal(const FiniteSite& site, const Germ& a, const Germ& b);

}  // namespace ghol
