#include "ghol/groupoid.hpp"

#include <algorithm>
#include <set>

namespace ghol {

std::string Arrow::canonical_id(const std::string& src, const std::string& tgt,
                                const std::optional<Phase>& phase) {
  std::string id = src + ">" + tgt;
  if (phase) id += "|" + phase->str();
  return id;
}

namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

int FiniteGroupoid::object_index(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw UnknownObject(name);
  return it->second;
}

int FiniteGroupoid::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) throw Error("unknown arrow: " + id);
  return it->second;
}

std::optional<int> FiniteGroupoid::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroupoid::build_indexes() {
  std::sort(objects_.begin(), objects_.end());
  objects_.erase(std::unique(objects_.begin(), objects_.end()), objects_.end());
  obj_index_.clear();
  for (int i = 0; i < num_objects(); ++i) obj_index_[objects_[i]] = i;
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  arrow_index_.clear();
  for (int i = 0; i < num_arrows(); ++i) {
    if (arrow_index_.count(arrows_[i].id))
      throw Error("duplicate arrow id: " + arrows_[i].id);
    arrow_index_[arrows_[i].id] = i;
  }
}

void FiniteGroupoid::derive_structure() {
  identity_.assign(num_objects(), -1);
  inverse_.assign(num_arrows(), -1);
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.src == a.tgt && (!a.phase || a.phase->is_zero()) &&
        comp_.count(pair_key(i, i)) && comp_.at(pair_key(i, i)) == i)
      identity_[a.src] = i;
  }
  for (int x = 0; x < num_objects(); ++x)
    if (identity_[x] < 0)
      throw Error("no identity arrow at object " + objects_[x]);
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[i];
    for (int j : arrows_between(a.tgt, a.src)) {
      auto it = comp_.find(pair_key(i, j));
      if (it != comp_.end() && it->second == identity_[a.src]) {
        inverse_[i] = j;
        break;
      }
    }
    if (inverse_[i] < 0) throw Error("no inverse for arrow " + a.id);
  }
}

namespace {

// Endpoint indices come in relative to the caller's object order; sorting
// the object list means they must be remapped.
void remap_endpoints(const std::vector<std::string>& original,
                     const std::vector<std::string>& sorted,
                     std::vector<Arrow>& arrows) {
  std::unordered_map<std::string, int> where;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    where[sorted[i]] = static_cast<int>(i);
  for (Arrow& a : arrows) {
    if (a.src < 0 || a.src >= static_cast<int>(original.size()) || a.tgt < 0 ||
        a.tgt >= static_cast<int>(original.size()))
      throw Error("arrow endpoint out of range");
    a.src = where.at(original[a.src]);
    a.tgt = where.at(original[a.tgt]);
  }
}

}  // namespace

FiniteGroupoid FiniteGroupoid::from_arrows(std::vector<std::string> objects,
                                           std::vector<Arrow> arrows,
                                           bool derive_by_phase) {
  FiniteGroupoid g;
  std::vector<std::string> original = objects;
  g.objects_ = std::move(objects);
  g.arrows_ = std::move(arrows);
  std::sort(g.objects_.begin(), g.objects_.end());
  g.objects_.erase(std::unique(g.objects_.begin(), g.objects_.end()),
                   g.objects_.end());
  remap_endpoints(original, g.objects_, g.arrows_);
  for (Arrow& a : g.arrows_) {
    if (a.id.empty())
      a.id = Arrow::canonical_id(g.objects_[a.src], g.objects_[a.tgt], a.phase);
  }
  g.build_indexes();
  if (!derive_by_phase)
    throw Error("from_arrows requires derive_by_phase; use from_table otherwise");
  // composite: endpoints chain, phases add; the set must be closed
  std::map<std::tuple<int, int, std::string>, int> locate;
  auto phase_key = [](const std::optional<Phase>& p) {
    return p ? p->str() : std::string();
  };
  for (int i = 0; i < g.num_arrows(); ++i) {
    const Arrow& a = g.arrows_[i];
    locate[{a.src, a.tgt, phase_key(a.phase)}] = i;
  }
  for (int i = 0; i < g.num_arrows(); ++i)
    for (int j = 0; j < g.num_arrows(); ++j) {
      const Arrow& a = g.arrows_[i];
      const Arrow& b = g.arrows_[j];
      if (a.tgt != b.src) continue;
      std::optional<Phase> p;
      if (a.phase || b.phase)
        p = (a.phase ? *a.phase : Phase()) + (b.phase ? *b.phase : Phase());
      auto it = locate.find({a.src, b.tgt, phase_key(p)});
      if (it == locate.end())
        throw Error("arrow set not closed under composition: " + a.id + " * " +
                    b.id);
      g.comp_[pair_key(i, j)] = it->second;
    }
  g.derive_structure();
  return g;
}

FiniteGroupoid FiniteGroupoid::from_table(
    std::vector<std::string> objects, std::vector<Arrow> arrows,
    const std::map<std::pair<std::string, std::string>, std::string>& table) {
  FiniteGroupoid g;
  std::vector<std::string> original = objects;
  g.objects_ = std::move(objects);
  g.arrows_ = std::move(arrows);
  std::sort(g.objects_.begin(), g.objects_.end());
  g.objects_.erase(std::unique(g.objects_.begin(), g.objects_.end()),
                   g.objects_.end());
  remap_endpoints(original, g.objects_, g.arrows_);
  for (Arrow& a : g.arrows_) {
    if (a.id.empty())
      a.id = Arrow::canonical_id(g.objects_[a.src], g.objects_[a.tgt], a.phase);
  }
  g.build_indexes();
  for (const auto& [key, value] : table) {
    int i = g.arrow_index(key.first);
    int j = g.arrow_index(key.second);
    if (g.arrows_[i].tgt != g.arrows_[j].src)
      throw Error("table entry for non-composable pair " + key.first + ", " +
                  key.second);
    g.comp_[pair_key(i, j)] = g.arrow_index(value);
  }
  for (int i = 0; i < g.num_arrows(); ++i)
    for (int j = 0; j < g.num_arrows(); ++j)
      if (g.arrows_[i].tgt == g.arrows_[j].src && !g.comp_.count(pair_key(i, j)))
        throw Error("composition table incomplete at " + g.arrows_[i].id + ", " +
                    g.arrows_[j].id);
  g.derive_structure();
  return g;
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(
    const std::vector<std::string>& objects) {
  std::vector<std::string> objs = objects;
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  std::vector<Arrow> arrows;
  const int n = static_cast<int>(objs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      arrows.push_back({Arrow::canonical_id(objs[i], objs[j], {}), i, j, {}});
  return from_arrows(std::move(objs), std::move(arrows), true);
}

FiniteGroupoid FiniteGroupoid::gauge_groupoid(
    int n_points, int fiber_order,
    const std::map<std::pair<int, int>, Phase>& offsets) {
  if (n_points < 1) throw Error("gauge_groupoid: need at least one point");
  if (fiber_order < 1) throw Error("gauge_groupoid: fiber order must be >= 1");
  std::vector<std::string> objs(n_points);
  for (int i = 0; i < n_points; ++i) objs[i] = "p" + std::to_string(i);
  auto offset = [&](int i, int j) -> Phase {
    auto it = offsets.find({i, j});
    if (it != offsets.end()) return it->second;
    it = offsets.find({j, i});
    if (it != offsets.end()) return -it->second;
    return Phase();
  };
  std::vector<Arrow> arrows;
  for (int i = 0; i < n_points; ++i)
    for (int j = 0; j < n_points; ++j)
      for (int k = 0; k < fiber_order; ++k) {
        Phase p = offset(i, j) + Phase::turns(Rat(k, fiber_order));
        arrows.push_back({"", i, j, p});
      }
  return from_arrows(std::move(objs), std::move(arrows), true);
}

int FiniteGroupoid::compose(int g, int h) const {
  auto it = comp_.find(pair_key(g, h));
  if (it == comp_.end())
    throw NonComposable(arrows_[g].id + " then " + arrows_[h].id);
  return it->second;
}

std::vector<int> FiniteGroupoid::arrows_from(int obj) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].src == obj) out.push_back(i);
  return out;
}

std::vector<int> FiniteGroupoid::arrows_between(int src, int tgt) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].src == src && arrows_[i].tgt == tgt) out.push_back(i);
  return out;
}

void FiniteGroupoid::check_laws(std::size_t max_triples) const {
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[i];
    int e = identity_[a.src];
    int f = identity_[a.tgt];
    if (compose(e, i) != i || compose(i, f) != i)
      throw Error("identity law fails at " + a.id);
    int inv = inverse_[i];
    if (compose(i, inv) != identity_[a.src] || compose(inv, i) != f)
      throw Error("inverse law fails at " + a.id);
  }
  // associativity over all composable triples
  std::vector<std::vector<int>> out(num_objects());
  for (int i = 0; i < num_arrows(); ++i) out[arrows_[i].src].push_back(i);
  std::size_t count = 0;
  for (int a = 0; a < num_arrows(); ++a)
    for (int b : out[arrows_[a].tgt]) {
      int ab = compose(a, b);
      for (int c : out[arrows_[b].tgt]) {
        if (++count > max_triples)
          throw Error("check_laws: triple budget exceeded");
        if (compose(ab, c) != compose(a, compose(b, c)))
          throw Error("associativity fails at " + arrows_[a].id + ", " +
                      arrows_[b].id + ", " + arrows_[c].id);
      }
    }
}

std::pair<std::vector<int>, GroupTable> FiniteGroupoid::vertex_group(
    int obj) const {
  std::vector<int> loops = arrows_between(obj, obj);
  std::vector<std::string> names;
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    pos[loops[i]] = static_cast<int>(i);
    names.push_back(arrows_[loops[i]].id);
  }
  // unit must be element 0
  int e = identity_[obj];
  std::swap(loops[pos[e]], loops[0]);
  std::swap(names[pos[e]], names[0]);
  pos.clear();
  for (std::size_t i = 0; i < loops.size(); ++i) pos[loops[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> mul(loops.size(), std::vector<int>(loops.size()));
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = 0; j < loops.size(); ++j)
      mul[i][j] = pos.at(compose(loops[i], loops[j]));
  return {loops, GroupTable(names, mul)};
}

bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.objects_ != b.objects_) return false;
  if (a.num_arrows() != b.num_arrows()) return false;
  for (int i = 0; i < a.num_arrows(); ++i)
    if (a.arrows_[i].id != b.arrows_[i].id) return false;
  for (const auto& [key, val] : a.comp_) {
    int i = static_cast<int>(key >> 32);
    int j = static_cast<int>(key & 0xffffffffu);
    int bi = b.arrow_index(a.arrows_[i].id);
    int bj = b.arrow_index(a.arrows_[j].id);
    auto it = b.comp_.find(pair_key(bi, bj));
    if (it == b.comp_.end()) return false;
    if (b.arrows_[it->second].id != a.arrows_[val].id) return false;
  }
  return true;
}

bool FiniteGroupoid::is_isomorphism(const FiniteGroupoid& a,
                                    const FiniteGroupoid& b,
                                    const std::vector<int>& obj_map,
                                    const std::vector<int>& arrow_map) {
  if (static_cast<int>(obj_map.size()) != a.num_objects()) return false;
  if (static_cast<int>(arrow_map.size()) != a.num_arrows()) return false;
  if (a.num_objects() != b.num_objects() || a.num_arrows() != b.num_arrows())
    return false;
  std::vector<char> oseen(b.num_objects(), 0), aseen(b.num_arrows(), 0);
  for (int x : obj_map) {
    if (x < 0 || x >= b.num_objects() || oseen[x]) return false;
    oseen[x] = 1;
  }
  for (int x : arrow_map) {
    if (x < 0 || x >= b.num_arrows() || aseen[x]) return false;
    aseen[x] = 1;
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ai = a.arrows_[i];
    const Arrow& bi = b.arrows_[arrow_map[i]];
    if (obj_map[ai.src] != bi.src || obj_map[ai.tgt] != bi.tgt) return false;
  }
  for (const auto& [key, val] : a.comp_) {
    int i = static_cast<int>(key >> 32);
    int j = static_cast<int>(key & 0xffffffffu);
    auto it = b.comp_.find(pair_key(arrow_map[i], arrow_map[j]));
    if (it == b.comp_.end() || it->second != arrow_map[val]) return false;
  }
  return true;
}

bool Subgroupoid::contains_object(int obj) const {
  return std::binary_search(objects.begin(), objects.end(), obj);
}

bool Subgroupoid::contains_arrow(int arrow) const {
  return std::binary_search(arrows.begin(), arrows.end(), arrow);
}

void Subgroupoid::check_closed() const {
  const FiniteGroupoid& g = *parent;
  for (int a : arrows) {
    if (!contains_object(g.arrow(a).src) || !contains_object(g.arrow(a).tgt))
      throw Error("subgroupoid arrow endpoint outside object set");
    if (!contains_arrow(g.inverse(a)))
      throw Error("subgroupoid not closed under inverse");
  }
  for (int x : objects)
    if (!contains_arrow(g.identity(x)))
      throw Error("subgroupoid missing identity");
  for (int a : arrows)
    for (int b : arrows)
      if (g.composable(a, b) && !contains_arrow(g.compose(a, b)))
        throw Error("subgroupoid not closed under composition");
}

bool Subgroupoid::is_wide() const {
  return static_cast<int>(objects.size()) == parent->num_objects();
}

bool Subgroupoid::is_full() const {
  std::set<int> have(arrows.begin(), arrows.end());
  for (int x : objects)
    for (int y : objects)
      for (int a : parent->arrows_between(x, y))
        if (!have.count(a)) return false;
  return true;
}

Subgroupoid Subgroupoid::restrict_to(const std::vector<int>& object_subset) const {
  Subgroupoid r;
  r.parent = parent;
  r.objects = object_subset;
  std::sort(r.objects.begin(), r.objects.end());
  r.objects.erase(std::unique(r.objects.begin(), r.objects.end()),
                  r.objects.end());
  for (int a : arrows) {
    const Arrow& arr = parent->arrow(a);
    if (r.contains_object(arr.src) && r.contains_object(arr.tgt))
      r.arrows.push_back(a);
  }
  return r;
}

std::pair<std::vector<int>, GroupTable> Subgroupoid::vertex_group(int obj) const {
  if (!contains_object(obj))
    throw UnknownObject(parent->object(obj) + " not in subgroupoid");
  std::vector<int> loops;
  for (int a : arrows)
    if (parent->arrow(a).src == obj && parent->arrow(a).tgt == obj)
      loops.push_back(a);
  std::vector<std::string> names;
  std::unordered_map<int, int> pos;
  int e = parent->identity(obj);
  std::sort(loops.begin(), loops.end());
  auto eit = std::find(loops.begin(), loops.end(), e);
  std::iter_swap(loops.begin(), eit);
  for (std::size_t i = 0; i < loops.size(); ++i) {
    pos[loops[i]] = static_cast<int>(i);
    names.push_back(parent->arrow(loops[i]).id);
  }
  std::vector<std::vector<int>> mul(loops.size(), std::vector<int>(loops.size()));
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = 0; j < loops.size(); ++j)
      mul[i][j] = pos.at(parent->compose(loops[i], loops[j]));
  return {loops, GroupTable(names, mul)};
}

std::shared_ptr<const FiniteGroupoid> share(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

Subgroupoid generated_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent,
                                  const std::vector<int>& generators) {
  const FiniteGroupoid& g = *parent;
  std::set<int> arrows;
  for (int x = 0; x < g.num_objects(); ++x) arrows.insert(g.identity(x));
  for (int a : generators) {
    if (a < 0 || a >= g.num_arrows()) throw Error("generator index out of range");
    arrows.insert(a);
    arrows.insert(g.inverse(a));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur(arrows.begin(), arrows.end());
    for (int a : cur)
      for (int b : cur)
        if (g.composable(a, b) && arrows.insert(g.compose(a, b)).second)
          changed = true;
  }
  Subgroupoid s;
  s.parent = std::move(parent);
  for (int x = 0; x < g.num_objects(); ++x) s.objects.push_back(x);
  s.arrows.assign(arrows.begin(), arrows.end());
  return s;
}

Subgroupoid full_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent,
                             const std::vector<int>& object_subset) {
  Subgroupoid s;
  s.parent = std::move(parent);
  s.objects = object_subset;
  std::sort(s.objects.begin(), s.objects.end());
  s.objects.erase(std::unique(s.objects.begin(), s.objects.end()),
                  s.objects.end());
  for (int a = 0; a < s.parent->num_arrows(); ++a) {
    const Arrow& arr = s.parent->arrow(a);
    if (s.contains_object(arr.src) && s.contains_object(arr.tgt))
      s.arrows.push_back(a);
  }
  return s;
}

Subgroupoid discrete_subgroupoid(std::shared_ptr<const FiniteGroupoid> parent) {
  Subgroupoid s;
  s.parent = std::move(parent);
  for (int x = 0; x < s.parent->num_objects(); ++x) {
    s.objects.push_back(x);
    s.arrows.push_back(s.parent->identity(x));
  }
  std::sort(s.arrows.begin(), s.arrows.end());
  return s;
}

}  // namespace ghol
