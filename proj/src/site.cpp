#include "ghol/site.hpp"

#include <algorithm>
#include <set>

namespace ghol {

FiniteSite FiniteSite::from_cover(int base_size,
                                  const std::vector<std::vector<int>>& cover_sets,
                                  std::size_t cap) {
  FiniteSite site;
  site.base_size_ = base_size;
  site.words_ = (base_size + 63) / 64;
  std::set<Mask> opens;
  Mask empty(site.words_, 0);
  opens.insert(empty);
  Mask all(site.words_, 0);
  std::vector<Mask> gens;
  for (const auto& set : cover_sets) {
    Mask m = site.make_mask(set);
    for (int w = 0; w < site.words_; ++w) all[w] |= m[w];
    gens.push_back(m);
    opens.insert(m);
  }
  opens.insert(all);

  // close under union and intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(opens.begin(), opens.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Mask u(site.words_), n(site.words_);
        for (int w = 0; w < site.words_; ++w) {
          u[w] = cur[i][w] | cur[j][w];
          n[w] = cur[i][w] & cur[j][w];
        }
        if (opens.insert(u).second) grew = true;
        if (opens.insert(n).second) grew = true;
        if (opens.size() > cap)
          throw Error("site closure exceeds the documented cap of " +
                      std::to_string(cap) + " opens");
      }
  }
  site.opens_.assign(opens.begin(), opens.end());
  return site;
}

std::vector<int> FiniteSite::open_vertices(int i) const {
  std::vector<int> out;
  for (int x = 0; x < base_size_; ++x)
    if (mask_contains(opens_[i], x)) out.push_back(x);
  return out;
}

bool FiniteSite::mask_contains(const Mask& m, int x) const {
  return (m[x / 64] >> (x % 64)) & 1u;
}

bool FiniteSite::mask_subset(const Mask& a, const Mask& b) const {
  for (int w = 0; w < words_; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

int FiniteSite::find_open(const std::vector<int>& vertices) const {
  Mask m = make_mask(vertices);
  auto it = std::lower_bound(opens_.begin(), opens_.end(), m);
  if (it != opens_.end() && *it == m)
    return static_cast<int>(it - opens_.begin());
  return -1;
}

FiniteSite::Mask FiniteSite::make_mask(const std::vector<int>& vertices) const {
  Mask m(words_, 0);
  for (int x : vertices) {
    if (x < 0 || x >= base_size_) throw Error("site vertex out of range");
    m[x / 64] |= std::uint64_t(1) << (x % 64);
  }
  return m;
}

}  // namespace ghol
