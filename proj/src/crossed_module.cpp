#include "ghol/crossed_module.hpp"

#include <algorithm>
#include <functional>

namespace ghol {

CrossedModule CrossedModule::over_group(GroupTable m, GroupTable p,
                                        std::vector<int> mu,
                                        std::vector<std::vector<int>> action_by_p) {
  // base: one object, arrows = elements of p
  std::vector<Arrow> arrows;
  for (int i = 0; i < p.order(); ++i)
    arrows.push_back({"g" + std::to_string(i), 0, 0, {}});
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (int i = 0; i < p.order(); ++i)
    for (int j = 0; j < p.order(); ++j)
      table[{"g" + std::to_string(i), "g" + std::to_string(j)}] =
          "g" + std::to_string(p.mul(i, j));
  auto base = share(FiniteGroupoid::from_table({"*"}, arrows, table));

  // arrow indices follow sorted ids; map element k -> arrow index
  std::vector<int> arrow_of(p.order());
  for (int i = 0; i < p.order(); ++i)
    arrow_of[i] = base->arrow_index("g" + std::to_string(i));
  std::vector<int> mu_arrows(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) mu_arrows[k] = arrow_of[mu[k]];
  std::map<int, std::vector<int>> action;
  for (int i = 0; i < p.order(); ++i) action[arrow_of[i]] = action_by_p[i];
  return CrossedModule(base, {std::move(m)}, {std::move(mu_arrows)},
                       std::move(action));
}

CrossedModule::CrossedModule(std::shared_ptr<const FiniteGroupoid> base,
                             std::vector<GroupTable> fibers,
                             std::vector<std::vector<int>> mu,
                             std::map<int, std::vector<int>> action)
    : base_(std::move(base)),
      fibers_(std::move(fibers)),
      mu_(std::move(mu)),
      action_(std::move(action)) {
  if (static_cast<int>(fibers_.size()) != base_->num_objects() ||
      static_cast<int>(mu_.size()) != base_->num_objects())
    throw InvalidCrossedModule("fiber count != object count");
  check();
}

int CrossedModule::act(int p_arrow, int elt) const {
  auto it = action_.find(p_arrow);
  if (it == action_.end())
    throw InvalidCrossedModule("no action for arrow " +
                               base_->arrow(p_arrow).id);
  return it->second.at(elt);
}

void CrossedModule::check() const {
  const FiniteGroupoid& p = *base_;
  for (int x = 0; x < p.num_objects(); ++x) {
    const GroupTable& m = fibers_[x];
    if (static_cast<int>(mu_[x].size()) != m.order())
      throw InvalidCrossedModule("mu size mismatch at object " + p.object(x));
    // mu lands in the vertex group and is a homomorphism
    for (int a = 0; a < m.order(); ++a) {
      const Arrow& arr = p.arrow(mu_[x][a]);
      if (arr.src != x || arr.tgt != x)
        throw InvalidCrossedModule("mu image not a loop at " + p.object(x));
    }
    if (mu_[x][0] != p.identity(x))
      throw InvalidCrossedModule("mu(unit) != identity at " + p.object(x));
    for (int a = 0; a < m.order(); ++a)
      for (int b = 0; b < m.order(); ++b)
        if (p.compose(mu_[x][a], mu_[x][b]) != mu_[x][m.mul(a, b)])
          throw InvalidCrossedModule("mu not a homomorphism at " + p.object(x));
  }
  // action: bijective fiber homomorphisms, functorial, unit-trivial
  for (int g = 0; g < p.num_arrows(); ++g) {
    const Arrow& arr = p.arrow(g);
    auto it = action_.find(g);
    if (it == action_.end())
      throw InvalidCrossedModule("missing action for arrow " + arr.id);
    const std::vector<int>& f = it->second;
    const GroupTable& src = fibers_[arr.src];
    const GroupTable& dst = fibers_[arr.tgt];
    if (static_cast<int>(f.size()) != src.order())
      throw InvalidCrossedModule("action domain mismatch at " + arr.id);
    std::vector<char> seen(dst.order(), 0);
    for (int v : f) {
      if (v < 0 || v >= dst.order() || seen[v])
        throw InvalidCrossedModule("action not bijective at " + arr.id);
      seen[v] = 1;
    }
    for (int a = 0; a < src.order(); ++a)
      for (int b = 0; b < src.order(); ++b)
        if (f[src.mul(a, b)] != dst.mul(f[a], f[b]))
          throw InvalidCrossedModule("action not a homomorphism at " + arr.id);
  }
  for (int x = 0; x < p.num_objects(); ++x) {
    const std::vector<int>& f = action_.at(p.identity(x));
    for (int a = 0; a < fibers_[x].order(); ++a)
      if (f[a] != a)
        throw InvalidCrossedModule("identity arrow acts nontrivially at " +
                                   p.object(x));
  }
  for (int g = 0; g < p.num_arrows(); ++g)
    for (int h = 0; h < p.num_arrows(); ++h) {
      if (!p.composable(g, h)) continue;
      int gh = p.compose(g, h);
      const Arrow& ga = p.arrow(g);
      for (int a = 0; a < fibers_[ga.src].order(); ++a)
        if (act(gh, a) != act(h, act(g, a)))
          throw InvalidCrossedModule("action not functorial on " + ga.id);
    }
  // equivariance: mu(m^g) = g^-1 mu(m) g
  for (int g = 0; g < p.num_arrows(); ++g) {
    const Arrow& ga = p.arrow(g);
    for (int a = 0; a < fibers_[ga.src].order(); ++a) {
      int lhs = mu_[ga.tgt][act(g, a)];
      int rhs = p.compose(p.compose(p.inverse(g), mu_[ga.src][a]), g);
      if (lhs != rhs)
        throw InvalidCrossedModule("equivariance fails at arrow " + ga.id +
                                   ", element " + std::to_string(a));
    }
  }
  // Peiffer: m^{mu(n)} = n^-1 m n
  for (int x = 0; x < p.num_objects(); ++x) {
    const GroupTable& m = fibers_[x];
    for (int n = 0; n < m.order(); ++n)
      for (int a = 0; a < m.order(); ++a) {
        int lhs = act(mu_[x][n], a);
        int rhs = m.mul(m.mul(m.inv(n), a), n);
        if (lhs != rhs)
          throw InvalidCrossedModule("Peiffer identity fails at object " +
                                     p.object(x) + ", elements (" +
                                     std::to_string(n) + "," +
                                     std::to_string(a) + ")");
      }
  }
}

bool operator==(const CrossedModule& a, const CrossedModule& b) {
  return *a.base_ == *b.base_ && a.mu_ == b.mu_ && a.action_ == b.action_ &&
         a.fibers_.size() == b.fibers_.size();
}

DoubleWithConnection double_from_crossed_module(
    std::shared_ptr<const CrossedModule> cm) {
  const FiniteGroupoid& p = cm->base();
  auto base = cm->base_ptr();
  std::vector<Square> squares;
  const int n = p.num_arrows();
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l) {
      if (p.arrow(u).src != p.arrow(l).src) continue;
      for (int r = 0; r < n; ++r) {
        if (p.arrow(r).src != p.arrow(u).tgt) continue;
        for (int d = 0; d < n; ++d) {
          if (p.arrow(d).src != p.arrow(l).tgt ||
              p.arrow(d).tgt != p.arrow(r).tgt)
            continue;
          int w = p.arrow(d).tgt;
          int word = p.compose(
              p.compose(p.compose(p.inverse(d), p.inverse(l)), u), r);
          for (int m = 0; m < cm->fiber(w).order(); ++m) {
            if (cm->mu(w, m) != word) continue;
            Square s;
            s.up = u;
            s.down = d;
            s.left = l;
            s.right = r;
            s.payload = SquarePayload::from_element(w, m);
            squares.push_back(s);
          }
        }
      }
    }
  DoubleGroupoid dg(base, base, std::move(squares), cm);
  ConnectionPair cp = special_connection(dg);
  return {std::move(dg), std::move(cp)};
}

CrossedModule crossed_module_from_double(const DoubleGroupoid& dg,
                                         const ConnectionPair& cp) {
  if (!dg.edge_symmetric())
    throw NotEdgeSymmetric("crossed_module_from_double needs H = V");
  const FiniteGroupoid& p = dg.horiz();
  auto base = dg.horiz_ptr();

  // fiber at y: squares with degenerate left/right/down boundaries
  std::vector<std::vector<Square>> fiber_squares(p.num_objects());
  for (const Square& s : dg.squares()) {
    const Arrow& d = p.arrow(s.down);
    int y = d.tgt;
    if (s.left == dg.vert().identity(p.arrow(s.up).src) &&
        s.right == dg.vert().identity(y) && s.down == p.identity(y) &&
        p.arrow(s.up).src == y)
      fiber_squares[y].push_back(s);
  }
  std::vector<GroupTable> fibers;
  std::vector<std::vector<int>> mu;
  std::vector<std::map<std::string, int>> pos(p.num_objects());
  for (int y = 0; y < p.num_objects(); ++y) {
    auto& elems = fiber_squares[y];
    // unit (fully degenerate square) first
    Square unit = dg.eps1(p.identity(y));
    std::sort(elems.begin(), elems.end(),
              [&](const Square& a, const Square& b) { return a.key() < b.key(); });
    auto it = std::find_if(elems.begin(), elems.end(), [&](const Square& s) {
      return s.key() == unit.key();
    });
    if (it == elems.end())
      throw Error("square set lacks the degenerate unit at " + p.object(y));
    std::iter_swap(elems.begin(), it);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos[y][elems[i].key()] = static_cast<int>(i);
      names.push_back(elems[i].payload.str());
    }
    std::vector<std::vector<int>> mul(elems.size(),
                                      std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        Square prod = dg.compose2(elems[i], elems[j]);
        auto at = pos[y].find(prod.key());
        if (at == pos[y].end())
          throw Error("fiber not closed under composition at " + p.object(y));
        mul[i][j] = at->second;
      }
    fibers.push_back(GroupTable(names, mul));
    std::vector<int> mu_y(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) mu_y[i] = elems[i].up;
    mu.push_back(std::move(mu_y));
  }

  // action via the connection: m^g = inv2(Ups(g)) o2 (m o1 eps2(g)) o2 Ups(g)
  std::map<int, std::vector<int>> action;
  for (int g = 0; g < p.num_arrows(); ++g) {
    const Arrow& ga = p.arrow(g);
    std::vector<int> f(fiber_squares[ga.src].size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Square moved = dg.compose2(
          dg.compose2(dg.inverse2(cp.ups(g)),
                      dg.compose1(fiber_squares[ga.src][i], dg.eps2(g))),
          cp.ups(g));
      auto at = pos[ga.tgt].find(moved.key());
      if (at == pos[ga.tgt].end())
        throw Error("action image missing from fiber at " + p.object(ga.tgt));
      f[i] = at->second;
    }
    action[g] = std::move(f);
  }
  return CrossedModule(base, std::move(fibers), std::move(mu),
                       std::move(action));
}

bool verify_crossed_module_iso(const CrossedModule& a, const CrossedModule& b,
                               const CrossedModuleIso& iso) {
  if (!(a.base() == b.base())) return false;
  const FiniteGroupoid& p = a.base();
  for (int x = 0; x < p.num_objects(); ++x) {
    const GroupTable& ma = a.fiber(x);
    const GroupTable& mb = b.fiber(x);
    if (ma.order() != mb.order()) return false;
    const std::vector<int>& f = iso.elt_map[x];
    std::vector<char> seen(mb.order(), 0);
    for (int v : f) {
      if (v < 0 || v >= mb.order() || seen[v]) return false;
      seen[v] = 1;
    }
    for (int i = 0; i < ma.order(); ++i) {
      if (b.mu(x, f[i]) != a.mu(x, i)) return false;
      for (int j = 0; j < ma.order(); ++j)
        if (f[ma.mul(i, j)] != mb.mul(f[i], f[j])) return false;
    }
  }
  for (int g = 0; g < p.num_arrows(); ++g) {
    const Arrow& ga = p.arrow(g);
    for (int i = 0; i < a.fiber(ga.src).order(); ++i)
      if (iso.elt_map[ga.tgt][a.act(g, i)] != b.act(g, iso.elt_map[ga.src][i]))
        return false;
  }
  return true;
}

std::optional<CrossedModuleIso> find_crossed_module_iso(
    const CrossedModule& a, const CrossedModule& b) {
  if (!(a.base() == b.base())) return std::nullopt;
  const FiniteGroupoid& p = a.base();
  CrossedModuleIso iso;
  iso.elt_map.assign(p.num_objects(), {});

  std::function<bool(int)> solve_object = [&](int x) -> bool {
    if (x == p.num_objects()) return verify_crossed_module_iso(a, b, iso);
    const GroupTable& ma = a.fiber(x);
    const GroupTable& mb = b.fiber(x);
    if (ma.order() != mb.order()) return false;
    std::vector<int>& f = iso.elt_map[x];
    f.assign(ma.order(), -1);
    f[0] = 0;
    std::vector<char> used(mb.order(), 0);
    used[0] = 1;
    std::function<bool(int)> assign = [&](int i) -> bool {
      while (i < ma.order() && f[i] != -1) ++i;
      if (i == ma.order()) {
        // local structure: group hom + mu preserved
        for (int u = 0; u < ma.order(); ++u) {
          if (b.mu(x, f[u]) != a.mu(x, u)) return false;
          for (int v = 0; v < ma.order(); ++v)
            if (f[ma.mul(u, v)] != mb.mul(f[u], f[v])) return false;
        }
        return solve_object(x + 1);
      }
      for (int img = 0; img < mb.order(); ++img) {
        if (used[img]) continue;
        if (b.mu(x, img) != a.mu(x, i)) continue;
        f[i] = img;
        used[img] = 1;
        bool bad = false;
        for (int u = 0; u < ma.order() && !bad; ++u) {
          if (f[u] == -1) continue;
          for (int v = 0; v < ma.order() && !bad; ++v) {
            if (f[v] == -1) continue;
            int pr = ma.mul(u, v);
            if (f[pr] != -1 && f[pr] != mb.mul(f[u], f[v])) bad = true;
          }
        }
        if (!bad && assign(i + 1)) return true;
        f[i] = -1;
        used[img] = 0;
      }
      return false;
    };
    return assign(1);
  };
  if (solve_object(0)) return iso;
  return std::nullopt;
}

}  // namespace ghol
