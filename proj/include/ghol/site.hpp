#pragma once

#include <cstdint>
#include <vector>

#include "ghol/errors.hpp"

namespace ghol {

// Finite topology on a base set: all unions and intersections generated by
// declared cover sets, plus the empty set and the whole base. Opens are
// stored as bitmasks in canonical order.
class FiniteSite {
 public:
  using Mask = std::vector<std::uint64_t>;

  static FiniteSite from_cover(int base_size,
                               const std::vector<std::vector<int>>& cover_sets,
                               std::size_t cap = 1u << 16);

  int base_size() const { return base_size_; }
  int num_opens() const { return static_cast<int>(opens_.size()); }
  const Mask& open(int i) const { return opens_[i]; }
  std::vector<int> open_vertices(int i) const;

  bool mask_contains(const Mask& m, int x) const;
  bool mask_subset(const Mask& a, const Mask& b) const;
  int find_open(const std::vector<int>& vertices) const;  // -1 if absent

  Mask make_mask(const std::vector<int>& vertices) const;

 private:
  int base_size_ = 0;
  int words_ = 0;
  std::vector<Mask> opens_;
};

}  // namespace ghol
