#include "doctest.h"

#include <memory>

#include "ghol/crossed_module.hpp"

using namespace ghol;

namespace {

std::vector<std::vector<int>> trivial_action(int p_order, int m_order) {
  std::vector<int> id(m_order);
  for (int i = 0; i < m_order; ++i) id[i] = i;
  return std::vector<std::vector<int>>(p_order, id);
}

std::shared_ptr<const CrossedModule> cm_c2_id() {
  GroupTable c2 = GroupTable::cyclic(2);
  return std::make_shared<const CrossedModule>(
      CrossedModule::over_group(c2, c2, {0, 1}, trivial_action(2, 2)));
}

std::shared_ptr<const CrossedModule> cm_c2_trivial_mu() {
  GroupTable c2 = GroupTable::cyclic(2);
  return std::make_shared<const CrossedModule>(
      CrossedModule::over_group(c2, c2, {0, 0}, trivial_action(2, 2)));
}

}  // namespace

TEST_CASE("invalid crossed module: Peiffer failure is rejected") {
  // M = Klein four, P = Z2, mu(a,b) = a + b, action of 1 = coordinate
  // swap. Equivariance holds (P abelian, mu swap-invariant), but Peiffer
  // m^{mu(n)} = n^-1 m n fails: swap moves (1,0) while conjugation cannot.
  GroupTable v4 = GroupTable::klein4();
  GroupTable z2 = GroupTable::cyclic(2);
  std::vector<int> mu = {0, 1, 1, 0};
  std::vector<std::vector<int>> action = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  try {
    CrossedModule::over_group(v4, z2, mu, action);
    FAIL("expected InvalidCrossedModule");
  } catch (const InvalidCrossedModule& err) {
    CHECK(std::string(err.what()).find("Peiffer") != std::string::npos);
  }
}

TEST_CASE("trivial mu gives two squares per commuting boundary") {
  auto cm = cm_c2_trivial_mu();
  auto [dg, cp] = double_from_crossed_module(cm);
  // base C2: 16 boundary quadruples, 8 commute, each carries |M| = 2
  CHECK(dg.squares().size() == 16);
  int commuting = 0;
  for (const Square& s : dg.squares())
    if (dg.horiz().compose(
            dg.horiz().compose(
                dg.horiz().compose(dg.horiz().inverse(s.down),
                                   dg.horiz().inverse(s.left)),
                s.up),
            s.right) == dg.horiz().identity(0))
      ++commuting;
  CHECK(commuting == 16);  // mu trivial: every square's boundary commutes
  CHECK(dg.check_laws().pass);
  CHECK(check_transport_law(cp, dg).pass);
}

TEST_CASE("identity mu: enumerable, associative, round trip isomorphic") {
  auto cm = cm_c2_id();
  auto [dg, cp] = double_from_crossed_module(cm);
  CHECK(dg.squares().size() == 16);  // one element above each boundary word
  CHECK(dg.check_laws().pass);
  CrossedModule back = crossed_module_from_double(dg, cp);
  auto iso = find_crossed_module_iso(*cm, back);
  REQUIRE(iso.has_value());
  CHECK(verify_crossed_module_iso(*cm, back, *iso));
}

TEST_CASE("trivial crossed module round trips to itself") {
  GroupTable one = GroupTable::trivial();
  GroupTable p = GroupTable::cyclic(3);
  auto cm = std::make_shared<const CrossedModule>(
      CrossedModule::over_group(one, p, {0}, trivial_action(3, 1)));
  auto [dg, cp] = double_from_crossed_module(cm);
  // squares = commuting boundary quadruples only
  for (const Square& s : dg.squares()) {
    int word = dg.horiz().compose(
        dg.horiz().compose(dg.horiz().compose(dg.horiz().inverse(s.down),
                                              dg.horiz().inverse(s.left)),
                           s.up),
        s.right);
    CHECK(word == dg.horiz().identity(0));
  }
  CrossedModule back = crossed_module_from_double(dg, cp);
  auto iso = find_crossed_module_iso(*cm, back);
  REQUIRE(iso.has_value());
}

TEST_CASE("non-abelian action: C3 -> S3 by conjugation") {
  // M = C3 as the rotation subgroup of S3 = D3, mu = inclusion,
  // action of S3 on C3 by conjugation
  GroupTable s3 = GroupTable::dihedral(3);
  GroupTable c3 = GroupTable::cyclic(3);
  // rotation elements r0,r1,r2 of dihedral(3) are indices 0,1,2
  std::vector<int> mu = {0, 1, 2};
  std::vector<std::vector<int>> action;
  for (int g = 0; g < 6; ++g) {
    std::vector<int> perm(3);
    for (int m = 0; m < 3; ++m) perm[m] = s3.mul(s3.mul(s3.inv(g), m), g);
    action.push_back(perm);
  }
  auto cm = std::make_shared<const CrossedModule>(
      CrossedModule::over_group(c3, s3, mu, action));
  auto [dg, cp] = double_from_crossed_module(cm);
  CHECK(dg.check_laws().pass);
  CHECK(check_transport_law(cp, dg).pass);
  CrossedModule back = crossed_module_from_double(dg, cp);
  auto iso = find_crossed_module_iso(*cm, back);
  REQUIRE(iso.has_value());
  CHECK(verify_crossed_module_iso(*cm, back, *iso));
}

TEST_CASE("multi-object base: pair groupoid with Klein four fibers") {
  auto base = share(FiniteGroupoid::pair_groupoid({"a", "b"}));
  GroupTable v4 = GroupTable::klein4();
  std::vector<GroupTable> fibers = {v4, v4};
  // mu trivial (vertex groups of a pair groupoid are trivial)
  std::vector<std::vector<int>> mu = {{base->identity(0), base->identity(0),
                                       base->identity(0), base->identity(0)},
                                      {base->identity(1), base->identity(1),
                                       base->identity(1), base->identity(1)}};
  std::map<int, std::vector<int>> action;
  for (int g = 0; g < base->num_arrows(); ++g) action[g] = {0, 1, 2, 3};
  auto cm = std::make_shared<const CrossedModule>(base, fibers, mu, action);
  auto [dg, cp] = double_from_crossed_module(cm);
  CHECK(dg.check_laws().pass);
  CHECK(check_transport_law(cp, dg).pass);
  CrossedModule back = crossed_module_from_double(dg, cp);
  auto iso = find_crossed_module_iso(*cm, back);
  REQUIRE(iso.has_value());
}

TEST_CASE("crossed_module_from_double requires edge symmetry") {
  auto h = share(FiniteGroupoid::pair_groupoid({"x", "y"}));
  // identities only, same objects, different arrow set
  std::vector<Arrow> idents = {{"", 0, 0, {}}, {"", 1, 1, {}}};
  auto v = share(FiniteGroupoid::from_arrows({"x", "y"}, idents, true));
  DoubleGroupoid dg(h, v, {});
  ConnectionPair cp;
  CHECK_THROWS_AS(crossed_module_from_double(dg, cp), NotEdgeSymmetric);
}
