#include "ghol/double_groupoid.hpp"

#include <algorithm>

#include "ghol/crossed_module.hpp"

namespace ghol {

bool SquarePayload::equals(const SquarePayload& o) const {
  if (is_phase != o.is_phase) return false;
  if (is_phase) return phase == o.phase;
  return obj == o.obj && elt == o.elt;
}

std::string SquarePayload::str() const {
  if (is_phase) return phase.str();
  return "m" + std::to_string(obj) + ":" + std::to_string(elt);
}

std::string Square::key() const {
  return std::to_string(up) + "/" + std::to_string(down) + "/" +
         std::to_string(left) + "/" + std::to_string(right) + "/" +
         payload.str();
}

DoubleGroupoid::DoubleGroupoid(std::shared_ptr<const FiniteGroupoid> horiz,
                               std::shared_ptr<const FiniteGroupoid> vert,
                               std::vector<Square> squares,
                               std::shared_ptr<const CrossedModule> payload_cm)
    : horiz_(std::move(horiz)),
      vert_(std::move(vert)),
      squares_(std::move(squares)),
      payload_cm_(std::move(payload_cm)) {
  if (horiz_->objects() != vert_->objects())
    throw Error("double groupoid: edge groupoids over different points");
  for (const Square& s : squares_) check_square_boundary(s);
  std::sort(squares_.begin(), squares_.end(),
            [](const Square& a, const Square& b) { return a.key() < b.key(); });
  squares_.erase(std::unique(squares_.begin(), squares_.end(),
                             [](const Square& a, const Square& b) {
                               return a.key() == b.key();
                             }),
                 squares_.end());
  for (std::size_t i = 0; i < squares_.size(); ++i)
    index_[squares_[i].key()] = static_cast<int>(i);
}

void DoubleGroupoid::check_square_boundary(const Square& s) const {
  const Arrow& u = horiz_->arrow(s.up);
  const Arrow& d = horiz_->arrow(s.down);
  const Arrow& l = vert_->arrow(s.left);
  const Arrow& r = vert_->arrow(s.right);
  if (u.src != l.src || u.tgt != r.src || l.tgt != d.src || r.tgt != d.tgt)
    throw Error("square corners do not match: " + s.key());
  if (!s.payload.is_phase) {
    if (!payload_cm_) throw Error("crossed-module payload without module");
    if (s.payload.obj != d.tgt)
      throw Error("payload based at wrong corner: " + s.key());
    // boundary word d^-1 l^-1 u r must equal mu(payload)
    int word = horiz_->compose(
        horiz_->compose(horiz_->compose(horiz_->inverse(s.down),
                                        vert_->inverse(s.left)),
                        s.up),
        s.right);
    if (payload_cm_->mu(s.payload.obj, s.payload.elt) != word)
      throw Error("payload does not match boundary word: " + s.key());
  }
}

bool DoubleGroupoid::composable1(const Square& s, const Square& t) const {
  return s.down == t.up;
}
bool DoubleGroupoid::composable2(const Square& s, const Square& t) const {
  return s.right == t.left;
}

SquarePayload DoubleGroupoid::compose_payload1(const Square& s,
                                               const Square& t) const {
  if (s.payload.is_phase)
    return SquarePayload::from_phase(s.payload.phase + t.payload.phase);
  // n * m^{right(t)}
  const CrossedModule& cm = *payload_cm_;
  int moved = cm.act(t.right, s.payload.elt);
  int obj = vert_->arrow(t.right).tgt;
  return SquarePayload::from_element(
      obj, cm.fiber(obj).mul(t.payload.elt, moved));
}

SquarePayload DoubleGroupoid::compose_payload2(const Square& s,
                                               const Square& t) const {
  if (s.payload.is_phase)
    return SquarePayload::from_phase(s.payload.phase + t.payload.phase);
  // m^{down(t)} * m'
  const CrossedModule& cm = *payload_cm_;
  int moved = cm.act(t.down, s.payload.elt);
  int obj = horiz_->arrow(t.down).tgt;
  return SquarePayload::from_element(
      obj, cm.fiber(obj).mul(moved, t.payload.elt));
}

Square DoubleGroupoid::compose1(const Square& s, const Square& t) const {
  if (!composable1(s, t)) throw NonComposable("compose1 of " + s.key() + ", " + t.key());
  Square out;
  out.up = s.up;
  out.down = t.down;
  out.left = vert_->compose(s.left, t.left);
  out.right = vert_->compose(s.right, t.right);
  out.payload = compose_payload1(s, t);
  return out;
}

Square DoubleGroupoid::compose2(const Square& s, const Square& t) const {
  if (!composable2(s, t)) throw NonComposable("compose2 of " + s.key() + ", " + t.key());
  Square out;
  out.left = s.left;
  out.right = t.right;
  out.up = horiz_->compose(s.up, t.up);
  out.down = horiz_->compose(s.down, t.down);
  out.payload = compose_payload2(s, t);
  return out;
}

Square DoubleGroupoid::inverse1(const Square& s) const {
  Square out;
  out.up = s.down;
  out.down = s.up;
  out.left = vert_->inverse(s.left);
  out.right = vert_->inverse(s.right);
  if (s.payload.is_phase) {
    out.payload = SquarePayload::from_phase(-s.payload.phase);
  } else {
    const CrossedModule& cm = *payload_cm_;
    int moved = cm.act(out.right, s.payload.elt);  // m^{r^-1}
    int obj = vert_->arrow(out.right).tgt;
    out.payload = SquarePayload::from_element(obj, cm.fiber(obj).inv(moved));
  }
  return out;
}

Square DoubleGroupoid::inverse2(const Square& s) const {
  Square out;
  out.up = horiz_->inverse(s.up);
  out.down = horiz_->inverse(s.down);
  out.left = s.right;
  out.right = s.left;
  if (s.payload.is_phase) {
    out.payload = SquarePayload::from_phase(-s.payload.phase);
  } else {
    const CrossedModule& cm = *payload_cm_;
    int moved = cm.act(out.down, s.payload.elt);  // m^{d^-1}
    int obj = horiz_->arrow(out.down).tgt;
    out.payload = SquarePayload::from_element(obj, cm.fiber(obj).inv(moved));
  }
  return out;
}

Square DoubleGroupoid::eps1(int h_arrow) const {
  const Arrow& h = horiz_->arrow(h_arrow);
  Square s;
  s.up = h_arrow;
  s.down = h_arrow;
  s.left = vert_->identity(h.src);
  s.right = vert_->identity(h.tgt);
  s.payload = trivial_payload_at(h.tgt);
  return s;
}

Square DoubleGroupoid::eps2(int v_arrow) const {
  const Arrow& v = vert_->arrow(v_arrow);
  Square s;
  s.left = v_arrow;
  s.right = v_arrow;
  s.up = horiz_->identity(v.src);
  s.down = horiz_->identity(v.tgt);
  s.payload = trivial_payload_at(v.tgt);
  return s;
}

std::optional<int> DoubleGroupoid::find_square(const Square& s) const {
  auto it = index_.find(s.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SquarePayload DoubleGroupoid::trivial_payload_at(int obj) const {
  if (payload_cm_) return SquarePayload::from_element(obj, 0);
  return SquarePayload::from_phase(Phase());
}

DoubleGroupoid::LawReport DoubleGroupoid::check_laws(long long budget) const {
  LawReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_failure = what;
    }
  };
  const int n = static_cast<int>(squares_.size());

  // identities and inverses
  for (const Square& s : squares_) {
    if (!compose1(eps1(s.up), s).same_as(s))
      fail("eps1 left unit fails at " + s.key());
    if (!compose2(eps2(s.left), s).same_as(s))
      fail("eps2 left unit fails at " + s.key());
    if (!compose1(s, inverse1(s)).same_as(eps1(s.up)))
      fail("inverse1 fails at " + s.key());
    if (!compose2(s, inverse2(s)).same_as(eps2(s.left)))
      fail("inverse2 fails at " + s.key());
  }

  // associativity on listed composable triples
  std::map<int, std::vector<int>> by_up, by_left;
  for (int i = 0; i < n; ++i) {
    by_up[squares_[i].up].push_back(i);
    by_left[squares_[i].left].push_back(i);
  }
  static const std::vector<int> kNone;
  auto at_or_empty = [](const std::map<int, std::vector<int>>& m,
                        int key) -> const std::vector<int>& {
    auto it = m.find(key);
    return it == m.end() ? kNone : it->second;
  };
  for (int a = 0; a < n && rep.checked_pairs < budget; ++a) {
    for (int b : at_or_empty(by_up, squares_[a].down)) {
      Square ab = compose1(squares_[a], squares_[b]);
      ++rep.checked_pairs;
      for (int c : at_or_empty(by_up, squares_[b].down)) {
        Square lhs = compose1(ab, squares_[c]);
        Square rhs = compose1(squares_[a], compose1(squares_[b], squares_[c]));
        if (!lhs.same_as(rhs)) fail("assoc1 fails");
      }
    }
    for (int b : at_or_empty(by_left, squares_[a].right)) {
      Square ab = compose2(squares_[a], squares_[b]);
      ++rep.checked_pairs;
      for (int c : at_or_empty(by_left, squares_[b].right)) {
        Square lhs = compose2(ab, squares_[c]);
        Square rhs = compose2(squares_[a], compose2(squares_[b], squares_[c]));
        if (!lhs.same_as(rhs)) fail("assoc2 fails");
      }
    }
  }

  // interchange on 2x2 grids: (a o2 b) o1 (c o2 d) = (a o1 c) o2 (b o1 d)
  for (int a = 0; a < n && rep.checked_interchange < budget; ++a)
    for (int b : at_or_empty(by_left, squares_[a].right))
      for (int c : at_or_empty(by_up, squares_[a].down))
        for (int d : at_or_empty(by_up, squares_[b].down)) {
          if (squares_[c].right != squares_[d].left) continue;
          ++rep.checked_interchange;
          if (rep.checked_interchange > budget) break;
          Square top = compose2(squares_[a], squares_[b]);
          Square bottom = compose2(squares_[c], squares_[d]);
          Square lhs = compose1(top, bottom);
          Square rhs = compose2(compose1(squares_[a], squares_[c]),
                                compose1(squares_[b], squares_[d]));
          if (!lhs.same_as(rhs))
            fail("interchange fails at " + squares_[a].key());
        }
  return rep;
}

const Square& ConnectionPair::ups(int v_arrow) const {
  auto it = upsilon.find(v_arrow);
  if (it == upsilon.end())
    throw Error("connection pair: no transport square for arrow " +
                std::to_string(v_arrow));
  return it->second;
}

int ConnectionPair::hol_of(int v_arrow) const {
  auto it = hol.find(v_arrow);
  if (it == hol.end())
    throw Error("connection pair: no holonomy for arrow " +
                std::to_string(v_arrow));
  return it->second;
}

TransportLawReport check_transport_law(const ConnectionPair& cp,
                                       const DoubleGroupoid& dg) {
  TransportLawReport rep;
  const FiniteGroupoid& v = dg.vert();
  const FiniteGroupoid& h = dg.horiz();
  auto fail = [&](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_failure = what;
    }
  };

  // boundary conditions of each transport square
  for (int a = 0; a < v.num_arrows(); ++a) {
    const Arrow& arr = v.arrow(a);
    const Square& ups = cp.ups(a);
    ++rep.boundary_checked;
    if (ups.up != cp.hol_of(a))
      fail("Upsilon(" + arr.id + ") has up edge != Hol");
    if (ups.left != a) fail("Upsilon(" + arr.id + ") has left edge != a");
    if (ups.right != v.identity(arr.tgt))
      fail("Upsilon(" + arr.id + ") right edge not the V identity");
    if (ups.down != h.identity(arr.tgt))
      fail("Upsilon(" + arr.id + ") down edge not the H identity");
    const Arrow& ha = h.arrow(cp.hol_of(a));
    if (ha.src != arr.src || ha.tgt != arr.tgt)
      fail("Hol(" + arr.id + ") endpoints disagree");
  }

  // Hol functoriality and the transport law on all composable pairs
  for (int a = 0; a < v.num_arrows(); ++a)
    for (int b = 0; b < v.num_arrows(); ++b) {
      if (!v.composable(a, b)) continue;
      ++rep.pairs_checked;
      int ab = v.compose(a, b);
      if (cp.hol_of(ab) != h.compose(cp.hol_of(a), cp.hol_of(b)))
        fail("Hol not functorial on " + v.arrow(a).id + ", " + v.arrow(b).id);
      Square row1 = dg.compose2(cp.ups(a), dg.eps1(cp.hol_of(b)));
      Square row2 = dg.compose2(dg.eps2(b), cp.ups(b));
      Square rhs = dg.compose1(row1, row2);
      if (!cp.ups(ab).same_as(rhs))
        fail("transport law fails on pair (" + v.arrow(a).id + ", " +
             v.arrow(b).id + ")");
    }
  return rep;
}

ConnectionPair special_connection(const DoubleGroupoid& dg) {
  if (!dg.edge_symmetric())
    throw NotEdgeSymmetric("special connection needs H = V");
  ConnectionPair cp;
  const FiniteGroupoid& v = dg.vert();
  for (int a = 0; a < v.num_arrows(); ++a) {
    // H and V are equal groupoids; arrow indices align after sorting
    cp.hol[a] = a;
    Square s;
    s.up = a;
    s.left = a;
    s.right = v.identity(v.arrow(a).tgt);
    s.down = v.identity(v.arrow(a).tgt);
    s.payload = dg.trivial_payload_at(v.arrow(a).tgt);
    cp.upsilon[a] = s;
  }
  return cp;
}

}  // namespace ghol

namespace ghol {

AssembledConnection assemble_connection_double(
    const std::vector<TransportClassEntry>& entries,
    const std::function<std::string(const std::string&, const std::string&)>&
        compose_class_key,
    std::size_t budget) {
  std::map<std::string, TransportClassEntry> by_key;
  for (const TransportClassEntry& e : entries) {
    auto [it, fresh] = by_key.emplace(e.class_key, e);
    (void)it;
    if (!fresh) throw Error("duplicate transport class " + e.class_key);
  }

  std::vector<std::string> objects;
  for (const TransportClassEntry& e : entries) {
    objects.push_back(e.src);
    objects.push_back(e.tgt);
  }
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  auto obj_idx = [&](const std::string& name) {
    return static_cast<int>(
        std::lower_bound(objects.begin(), objects.end(), name) -
        objects.begin());
  };

  std::vector<Arrow> v_arrows;
  for (const TransportClassEntry& e : entries)
    v_arrows.push_back(
        {"c[" + e.class_key + "]", obj_idx(e.src), obj_idx(e.tgt), {}});
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const TransportClassEntry& a : entries)
    for (const TransportClassEntry& b : entries) {
      if (a.tgt != b.src) continue;
      std::string key = compose_class_key(a.class_key, b.class_key);
      if (!by_key.count(key))
        throw BudgetExceeded("class family not closed under composition");
      table[{"c[" + a.class_key + "]", "c[" + b.class_key + "]"}] =
          "c[" + key + "]";
    }
  auto vert = share(FiniteGroupoid::from_table(objects, v_arrows, table));

  std::vector<Arrow> h_arrows;
  std::map<std::string, char> seen;
  for (const TransportClassEntry& e : entries) {
    std::string id = Arrow::canonical_id(e.src, e.tgt, e.hol);
    if (seen.count(id)) continue;
    seen[id] = 1;
    h_arrows.push_back({id, obj_idx(e.src), obj_idx(e.tgt), e.hol});
  }
  auto horiz = share(FiniteGroupoid::from_arrows(objects, h_arrows, true));

  ConnectionPair cp;
  std::map<std::string, int> v_of_class;
  std::vector<Square> squares;
  DoubleGroupoid pre(horiz, vert, {});
  for (const TransportClassEntry& e : entries) {
    int va = vert->arrow_index("c[" + e.class_key + "]");
    int ha = horiz->arrow_index(Arrow::canonical_id(e.src, e.tgt, e.hol));
    v_of_class[e.class_key] = va;
    cp.hol[va] = ha;
    Square s;
    s.up = ha;
    s.left = va;
    s.right = vert->identity(vert->arrow(va).tgt);
    s.down = horiz->identity(vert->arrow(va).tgt);
    s.payload = SquarePayload::from_phase(Phase());
    cp.upsilon[va] = s;
    squares.push_back(s);
  }
  for (int h = 0; h < horiz->num_arrows(); ++h) squares.push_back(pre.eps1(h));
  for (int v = 0; v < vert->num_arrows(); ++v) squares.push_back(pre.eps2(v));

  // partial closure for the law sweeps; compositions themselves are
  // rule-based, so the sweep set may stop growing at the cap
  std::size_t square_cap = std::min<std::size_t>(budget, 1024);
  bool grew = true;
  int guard = 0;
  while (grew && squares.size() < square_cap && guard++ < 8) {
    grew = false;
    DoubleGroupoid cur(horiz, vert, squares);
    std::map<std::string, char> have;
    for (const Square& s : cur.squares()) have[s.key()] = 1;
    std::vector<Square> next(cur.squares().begin(), cur.squares().end());
    for (const Square& s : cur.squares()) {
      if (next.size() >= square_cap) break;
      for (const Square& t : cur.squares()) {
        if (next.size() >= square_cap) break;
        if (cur.composable1(s, t)) {
          Square c = cur.compose1(s, t);
          if (!have.count(c.key())) {
            have[c.key()] = 1;
            next.push_back(c);
            grew = true;
          }
        }
        if (cur.composable2(s, t)) {
          Square c = cur.compose2(s, t);
          if (!have.count(c.key())) {
            have[c.key()] = 1;
            next.push_back(c);
            grew = true;
          }
        }
      }
    }
    squares = std::move(next);
  }

  DoubleGroupoid dg(horiz, vert, std::move(squares));
  return {std::move(dg), std::move(cp), std::move(v_of_class)};
}

}  // namespace ghol
