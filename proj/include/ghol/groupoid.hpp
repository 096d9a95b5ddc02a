#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghol/errors.hpp"
#include "ghol/group_table.hpp"
#include "ghol/phase.hpp"

namespace ghol {

struct Arrow {
  std::string id;  // canonical: "src>tgt" or "src>tgt|phase"
  int src = -1;
  int tgt = -1;
  std::optional<Phase> phase;

  static std::string canonical_id(const std::string& src, const std::string& tgt,
                                  const std::optional<Phase>& phase);
};

// Finite groupoid with an explicit (precomputed) composition table.
// Immutable after construction; all laws are checkable exhaustively.
class FiniteGroupoid {
 public:
  // Arrows may omit ids (canonical ids are derived). Composition is given
  // either explicitly (id pairs -> id) or derived from endpoint matching
  // plus abelian phase addition when `derive_by_phase` is set.
  static FiniteGroupoid from_arrows(std::vector<std::string> objects,
                                    std::vector<Arrow> arrows,
                                    bool derive_by_phase);
  static FiniteGroupoid from_table(
      std::vector<std::string> objects, std::vector<Arrow> arrows,
      const std::map<std::pair<std::string, std::string>, std::string>& table);

  static FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects);

  // Finite model of the symmetry groupoid of a principal U(1)-bundle over
  // n discrete points, fiber discretized to the order-q cyclic phase group.
  // `offsets` optionally twists arrows between point pairs by a cocycle of
  // phases (offsets[i][j] with offset(i,i)=0, offset(j,i)=-offset(i,j)).
  static FiniteGroupoid gauge_groupoid(
      int n_points, int fiber_order,
      const std::map<std::pair<int, int>, Phase>& offsets = {});

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int idx) const { return arrows_[idx]; }
  const std::string& object(int idx) const { return objects_[idx]; }

  int object_index(const std::string& name) const;
  int arrow_index(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;

  int identity(int obj) const { return identity_[obj]; }
  int inverse(int arrow) const { return inverse_[arrow]; }

  bool composable(int g, int h) const { return arrows_[g].tgt == arrows_[h].src; }
  // g then h: source(g) -> target(h). Throws NonComposable.
  int compose(int g, int h) const;

  std::vector<int> arrows_from(int obj) const;
  std::vector<int> arrows_between(int src, int tgt) const;

  // Exhaustive identity/inverse/associativity check. Throws on failure.
  void check_laws(std::size_t max_triples = 50'000'000) const;

  // Vertex group at an object, as a multiplication table over its loops.
  std::pair<std::vector<int>, GroupTable> vertex_group(int obj) const;

  // Normalized comparison (objects, arrow ids, composition table).
  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b);

  // obj_map: a.objects -> b.objects, arrow_map: a.arrows -> b.arrows.
  static bool is_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b,
                             const std::vector<int>& obj_map,
                             const std::vector<int>& arrow_map);

 private:
  void build_indexes();
  void derive_structure();

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> arrow_index_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::unordered_map<std::uint64_t, int> comp_;
};

// A subgroupoid is a subset of a parent groupoid, closed under the
// structure maps. The parent is held by value semantics (shared immutable).
struct Subgroupoid {
  std::shared_ptr<const FiniteGroupoid> parent;
  std::vector<int> objects;  // sorted object indices
  std::vector<int> arrows;   // sorted arrow indices

  bool contains_object(int obj) const;
  bool contains_arrow(int arrow) const;
  void check_closed() const;  // throws Error if not closed

  bool is_wide() const;
  bool is_full() const;

  // Restriction H|W: arrows of H with both endpoints in W.
  Subgroupoid restrict_to(const std::vector<int>& object_subset) const;

  std::pair<std::vector<int>, GroupTable> vertex_group(int obj) const;

  friend bool operator==(const Subgroupoid& a, const Subgroupoid& b) {
    return a.objects == b.objects && a.arrows == b.arrows;
  }
};

std::shared_ptr<const FiniteGroupoid> share(FiniteGroupoid g);

// Smallest wide subgroupoid of `parent` containing `generators`.
Subgroupoid generated_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent,
                                  const std::vector<int>& generators);

// Full subgroupoid on an object subset (all parent arrows between them).
Subgroupoid full_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent,
                             const std::vector<int>& object_subset);

// Discrete wide subgroupoid (identities only).
Subgroupoid discrete_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent);

}  // namespace ghol
