#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ghol/double_groupoid.hpp"
#include "ghol/group_table.hpp"
#include "ghol/groupoid.hpp"

namespace ghol {

// Crossed module of groupoids: a totally disconnected groupoid M over the
// objects of a base groupoid P, a morphism mu into the vertex groups, and
// an action of P arrows on the fibers of M.
class CrossedModule {
 public:
  // single-object constructor: groups M -> P
  static CrossedModule over_group(GroupTable m, GroupTable p,
                                  std::vector<int> mu,
                                  std::vector<std::vector<int>> action_by_p);

  // general constructor over a base groupoid
  CrossedModule(std::shared_ptr<const FiniteGroupoid> base,
                std::vector<GroupTable> fibers,
                std::vector<std::vector<int>> mu,
                std::map<int, std::vector<int>> action);

  const FiniteGroupoid& base() const { return *base_; }
  std::shared_ptr<const FiniteGroupoid> base_ptr() const { return base_; }
  const GroupTable& fiber(int obj) const { return fibers_[obj]; }
  int mu(int obj, int elt) const { return mu_[obj][elt]; }          // loop arrow
  int act(int p_arrow, int elt) const;  // M(src p) -> M(tgt p)

  // equivariance, Peiffer, action functoriality; throws InvalidCrossedModule
  void check() const;

  friend bool operator==(const CrossedModule& a, const CrossedModule& b);

 private:
  std::shared_ptr<const FiniteGroupoid> base_;
  std::vector<GroupTable> fibers_;           // per object
  std::vector<std::vector<int>> mu_;         // per object: elt -> arrow idx
  std::map<int, std::vector<int>> action_;   // P arrow -> fiber map
};

// Theorem-level constructions between crossed modules and edge symmetric
// double groupoids with special connection.
struct DoubleWithConnection {
  DoubleGroupoid dg;
  ConnectionPair cp;
};

DoubleWithConnection double_from_crossed_module(
    std::shared_ptr<const CrossedModule> cm);

CrossedModule crossed_module_from_double(const DoubleGroupoid& dg,
                                         const ConnectionPair& cp);

// Per-object element bijections M1(x) -> M2(x) over a shared base.
struct CrossedModuleIso {
  std::vector<std::vector<int>> elt_map;
};

bool verify_crossed_module_iso(const CrossedModule& a, const CrossedModule& b,
                               const CrossedModuleIso& iso);

// Search for an isomorphism over the identity map of a shared base.
std::optional<CrossedModuleIso> find_crossed_module_iso(const CrossedModule& a,
                                                        const CrossedModule& b);

}  // namespace ghol
