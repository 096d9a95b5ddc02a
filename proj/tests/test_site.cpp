#include "doctest.h"

#include <random>

#include "ghol/germ.hpp"
#include "ghol/local_subgroupoid.hpp"

using namespace ghol;

namespace {

// overlapping intervals on a 12-point base
FiniteSite interval_site() {
  std::vector<std::vector<int>> cover;
  for (int i = 0; i + 3 < 12; ++i) cover.push_back({i, i + 1, i + 2, i + 3});
  return FiniteSite::from_cover(12, cover);
}

}  // namespace

TEST_CASE("site closure under union and intersection") {
  FiniteSite site = interval_site();
  CHECK(site.num_opens() > 12);
  CHECK(site.num_opens() <= 1 << 10);
  // empty and full present
  CHECK(site.find_open({}) >= 0);
  std::vector<int> all;
  for (int i = 0; i < 12; ++i) all.push_back(i);
  CHECK(site.find_open(all) >= 0);
  // pairwise closure spot check
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, site.num_opens() - 1);
  for (int t = 0; t < 200; ++t) {
    auto a = site.open(pick(rng));
    auto b = site.open(pick(rng));
    FiniteSite::Mask u = a, n = a;
    for (std::size_t w = 0; w < a.size(); ++w) {
      u[w] |= b[w];
      n[w] &= b[w];
    }
    std::vector<int> uv, nv;
    for (int x = 0; x < 12; ++x) {
      if (site.mask_contains(u, x)) uv.push_back(x);
      if (site.mask_contains(n, x)) nv.push_back(x);
    }
    CHECK(site.find_open(uv) >= 0);
    CHECK(site.find_open(nv) >= 0);
  }
}

TEST_CASE("site cap is enforced") {
  std::vector<std::vector<int>> cover;
  for (int i = 0; i < 20; ++i) cover.push_back({i});
  CHECK_THROWS(FiniteSite::from_cover(20, cover, 1000));
}

TEST_CASE("germs: restriction compares equal, localization works") {
  FiniteSite site = interval_site();
  auto g = share(FiniteGroupoid::pair_groupoid(
      {"v00", "v01", "v02", "v03", "v04", "v05", "v06", "v07", "v08", "v09",
       "v10", "v11"}));
  // base points of the site correspond to groupoid objects 0..11

  int u_big = site.find_open({0, 1, 2, 3});
  int u_small = site.find_open({1, 2, 3});
  REQUIRE(u_big >= 0);
  REQUIRE(u_small >= 0);

  Subgroupoid h = full_subgroupoid(g, {0, 1, 2, 3});
  Germ g1 = germ_at(site, 2, u_big, h);
  Germ g2 = germ_at(site, 2, u_small, h.restrict_to({1, 2, 3}));
  CHECK(germ_equal(site, g1, g2));
  CHECK(germ_equal(site, g1, g1));

  // discrete vs full differ at every point of a 2+ object open
  Subgroupoid disc = h.restrict_to({0, 1, 2, 3});
  disc.arrows.clear();
  for (int x : disc.objects) disc.arrows.push_back(g->identity(x));
  std::sort(disc.arrows.begin(), disc.arrows.end());
  Germ g3 = germ_at(site, 2, u_big, disc);
  CHECK_FALSE(germ_equal(site, g1, g3));

  CHECK_THROWS_AS(germ_at(site, 7, u_big, h), PointOutside);
  Subgroupoid narrow = h.restrict_to({0, 1, 2});
  CHECK_THROWS_AS(germ_at(site, 2, u_big, narrow), NotWide);
}

TEST_CASE("germs agreeing on an overlap but not beyond") {
  FiniteSite site = interval_site();
  auto g = share(FiniteGroupoid::pair_groupoid(
      {"v00", "v01", "v02", "v03", "v04", "v05", "v06", "v07", "v08", "v09",
       "v10", "v11"}));
  int u1 = site.find_open({0, 1, 2, 3});
  int u2 = site.find_open({2, 3, 4, 5});
  // piece on u1: full; piece on u2: full on the overlap {2,3} but discrete
  // beyond it
  Subgroupoid h1 = full_subgroupoid(g, {0, 1, 2, 3});
  Subgroupoid h2 = full_subgroupoid(g, {2, 3});
  h2.objects = {2, 3, 4, 5};
  h2.arrows.push_back(g->identity(4));
  h2.arrows.push_back(g->identity(5));
  std::sort(h2.objects.begin(), h2.objects.end());
  std::sort(h2.arrows.begin(), h2.arrows.end());
  h2.check_closed();

  Germ a = germ_at(site, 2, u1, h1);
  Germ b = germ_at(site, 2, u2, h2);
  CHECK(germ_equal(site, a, b));  // witnessed by W = {2,3}

  Germ a3 = germ_at(site, 3, u1, h1);
  Germ b3 = germ_at(site, 3, u2, h2);
  CHECK(germ_equal(site, a3, b3));
}

TEST_CASE("germ equality is an equivalence relation on random data") {
  FiniteSite site = interval_site();
  auto g = share(FiniteGroupoid::pair_groupoid(
      {"v00", "v01", "v02", "v03", "v04", "v05", "v06", "v07", "v08", "v09",
       "v10", "v11"}));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick_open(0, site.num_opens() - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  auto random_wide = [&](int open_index) {
    std::vector<int> objs = site.open_vertices(open_index);
    // random generators among pair arrows within the open
    std::vector<int> gens;
    for (int x : objs)
      for (int y : objs)
        if (x < y && coin(rng))
          gens.push_back(g->arrow_index(g->object(x) + ">" + g->object(y)));
    return generated_on(g, objs, gens);
  };

  int trials = 0;
  while (trials < 300) {
    int u = pick_open(rng);
    auto verts = site.open_vertices(u);
    if (verts.empty()) continue;
    ++trials;
    std::uniform_int_distribution<int> pick_pt(0, static_cast<int>(verts.size()) - 1);
    int x = verts[pick_pt(rng)];
    Germ a = germ_at(site, x, u, random_wide(u));
    Germ b = germ_at(site, x, u, random_wide(u));
    Germ c = germ_at(site, x, u, random_wide(u));
    // reflexive, symmetric, and transitive on this triple
    CHECK(germ_equal(site, a, a));
    bool ab = germ_equal(site, a, b);
    CHECK(germ_equal(site, b, a) == ab);
    bool bc = germ_equal(site, b, c);
    bool ac = germ_equal(site, a, c);
    if (ab && bc) CHECK(ac);
  }
}
