#include "ghol/group_table.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ghol {

GroupTable::GroupTable(std::vector<std::string> names,
                       std::vector<std::vector<int>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  const int n = order();
  if (static_cast<int>(names_.size()) != n)
    throw std::invalid_argument("GroupTable: name/table size mismatch");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == 0) inv_[a] = b;
  check_laws();
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names[a] = n == 1 ? "1" : ("r" + std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(names), std::move(mul));
}

GroupTable GroupTable::klein4() {
  return direct_product(cyclic(2), cyclic(2));
}

GroupTable GroupTable::dihedral(int n) {
  // elements (i, s): rotation i composed with s reflections
  const int m = 2 * n;
  auto idx = [n](int i, int s) { return s * n + ((i % n) + n) % n; };
  std::vector<std::string> names(m);
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 2; ++s)
      names[idx(i, s)] = (s ? "s" : "r") + std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < 2; ++t) {
          int k = s ? idx(i - j, (s + t) % 2) : idx(i + j, t);
          mul[idx(i, s)][idx(j, t)] = k;
        }
  return GroupTable(std::move(names), std::move(mul));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order(), m = b.order();
  std::vector<std::string> names(n * m);
  std::vector<std::vector<int>> mul(n * m, std::vector<int>(n * m));
  auto idx = [m](int x, int y) { return x * m + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y) {
      names[idx(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v)
          mul[idx(x, y)][idx(u, v)] = idx(a.mul(x, u), b.mul(y, v));
    }
  return GroupTable(std::move(names), std::move(mul));
}

bool GroupTable::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

void GroupTable::check_laws() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul_[a].size()) != n)
      throw std::invalid_argument("GroupTable: ragged table");
    if (mul_[0][a] != a || mul_[a][0] != a)
      throw std::invalid_argument("GroupTable: element 0 is not a unit");
    if (inv_[a] < 0 || mul_[inv_[a]][a] != 0)
      throw std::invalid_argument("GroupTable: missing inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument("GroupTable: associativity fails");
}

bool GroupTable::is_homomorphism(const GroupTable& g, const GroupTable& h,
                                 const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != g.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (m[g.mul(a, b)] != h.mul(m[a], m[b])) return false;
  return true;
}

namespace {

int element_order(const GroupTable& g, int a) {
  int k = 1, x = a;
  while (x != 0) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace

std::optional<std::vector<int>> GroupTable::isomorphism(const GroupTable& g,
                                                        const GroupTable& h) {
  const int n = g.order();
  if (n != h.order()) return std::nullopt;

  std::vector<int> og(n), oh(n);
  for (int a = 0; a < n; ++a) og[a] = element_order(g, a);
  for (int a = 0; a < n; ++a) oh[a] = element_order(h, a);
  {
    auto sg = og, sh = oh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  img[0] = 0;
  used[0] = 1;

  // Extend the partial map one element at a time, closing under products
  // where both factors are mapped already.
  std::function<bool(int)> extend = [&](int a) -> bool {
    while (a < n && img[a] != -1) ++a;
    if (a == n) return is_homomorphism(g, h, img);
    for (int b = 1; b < n; ++b) {
      if (used[b] || oh[b] != og[a]) continue;
      std::vector<int> save = img;
      std::vector<char> usave = used;
      img[a] = b;
      used[b] = 1;
      bool ok = true;
      // close: products with previously mapped elements must stay consistent
      for (int x = 0; x < n && ok; ++x) {
        if (img[x] == -1) continue;
        for (int y = 0; y < n && ok; ++y) {
          if (img[y] == -1) continue;
          int p = g.mul(x, y);
          int q = h.mul(img[x], img[y]);
          if (img[p] == -1) {
            if (used[q]) {
              ok = false;
              break;
            }
            img[p] = q;
            used[q] = 1;
          } else if (img[p] != q) {
            ok = false;
          }
        }
      }
      if (ok && extend(a + 1)) return true;
      img = save;
      used = usave;
    }
    return false;
  };

  if (extend(1)) return img;
  return std::nullopt;
}

}  // namespace ghol
