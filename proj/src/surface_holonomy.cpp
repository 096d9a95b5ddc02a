#include "ghol/surface_holonomy.hpp"

#include <algorithm>
#include <set>

namespace ghol {

namespace {

struct Corner {
  int e_in = -1;   // boundary side of the face ending at the vertex
  int e_out = -1;  // boundary side of the face starting at the vertex
};

// corner data of a face set: (face, vertex) -> in/out sides
std::map<std::pair<int, int>, Corner> corner_map(const CellComplex& cx,
                                                 const std::vector<int>& faces) {
  std::map<std::pair<int, int>, Corner> corners;
  for (int f : faces) {
    const auto& sides = cx.face(f).sides;
    for (std::size_t k = 0; k < sides.size(); ++k) {
      int cur = sides[k];
      int nxt = sides[(k + 1) % sides.size()];
      int v = cx.side_head(cur);
      auto key = std::make_pair(f, v);
      if (corners.count(key))
        throw InvalidAssignment("face visits a vertex twice");
      corners[key] = {cur, nxt};
    }
  }
  return corners;
}

// Precomputed combinatorics of a face set (edge pairings, vertex fans,
// chart validity masks), so assignment sweeps evaluate quickly.
class SheetEvaluator {
 public:
  SheetEvaluator(const GerbeData& gerbe, std::vector<int> faces,
                 const std::map<int, int>* collar)
      : gerbe_(gerbe), faces_(std::move(faces)) {
    const CoveredSpace& space = *gerbe.space;
    const CellComplex& cx = space.complex();
    std::sort(faces_.begin(), faces_.end());

    for (int f : faces_) {
      unsigned mask = 0;
      for (int c = 0; c < space.num_charts(); ++c) {
        const Chart& chart = space.chart(c);
        if (!chart.has_face(f)) continue;
        bool ok = true;
        for (int side : cx.face(f).sides) {
          int e = CellComplex::side_edge(side);
          if (!chart.has_edge(e) || !chart.has_vertex(cx.edge(e).tail) ||
              !chart.has_vertex(cx.edge(e).head))
            ok = false;
        }
        if (ok) mask |= 1u << c;
      }
      face_mask_[f] = mask;
    }

    auto corners = corner_map(cx, faces_);
    std::map<int, std::vector<std::pair<int, int>>> edge_faces;
    for (int f : faces_)
      for (int side : cx.face(f).sides)
        edge_faces[CellComplex::side_edge(side)].push_back(
            {f, CellComplex::side_forward(side) ? 1 : -1});

    for (const auto& [e, incident] : edge_faces) {
      EdgeTerm term;
      term.edge = e;
      if (incident.size() == 2) {
        for (auto [f, sign] : incident)
          (sign > 0 ? term.plus_face : term.minus_face) = f;
        if (term.plus_face < 0 || term.minus_face < 0)
          throw NotClosed("edge appears twice with the same sign");
      } else if (incident.size() == 1) {
        if (!collar)
          throw NotClosed("open boundary without collar charts at edge " +
                          std::to_string(e));
        auto it = collar->find(e);
        if (it == collar->end())
          throw InvalidAssignment("boundary edge without a collar chart");
        if (incident[0].second > 0) {
          term.plus_face = incident[0].first;
          term.minus_collar = it->second;
        } else {
          term.minus_face = incident[0].first;
          term.plus_collar = it->second;
        }
      } else {
        throw NotClosed("edge shared by more than two faces");
      }
      edges_.push_back(term);
    }

    // vertex fans: the successor of a face is the face across its out-edge
    auto across = [&](int f, int side) -> int {
      int e = CellComplex::side_edge(side);
      for (auto [g, sign] : edge_faces[e]) {
        (void)sign;
        if (g != f) return g;
      }
      return -1;
    };
    std::set<int> vertices;
    for (const auto& [key, cnr] : corners) {
      (void)cnr;
      vertices.insert(key.second);
    }
    for (int v : vertices) {
      std::set<int> pending;
      for (int f : faces_)
        if (corners.count({f, v})) pending.insert(f);
      while (!pending.empty()) {
        int start = -1;
        for (int f : pending)
          if (across(f, corners.at({f, v}).e_in) == -1) {
            start = f;
            break;
          }
        bool open_chain = start != -1;
        if (!open_chain) start = *pending.begin();
        FanTerm fan;
        fan.vertex = v;
        fan.open = open_chain;
        int cur = start;
        while (true) {
          fan.chain.push_back(cur);
          pending.erase(cur);
          int nxt = across(cur, corners.at({cur, v}).e_out);
          if (nxt == -1 || nxt == start) break;
          if (!pending.count(nxt)) throw Error("malformed vertex fan");
          cur = nxt;
        }
        if (open_chain) {
          if (!collar)
            throw InvalidAssignment("open fan without collar charts");
          // boundary vertices are frame data: the reference chart comes
          // from the loop's own tags, not from the free assignment
          fan.virt_in = collar->at(CellComplex::side_edge(
              corners.at({fan.chain.front(), v}).e_in));
          fan.virt_out = collar->at(CellComplex::side_edge(
              corners.at({fan.chain.back(), v}).e_out));
        }
        fans_.push_back(std::move(fan));
      }
      unsigned mask = 0;
      for (int c = 0; c < space.num_charts(); ++c)
        if (space.chart(c).has_vertex(v)) mask |= 1u << c;
      vertex_mask_[v] = mask;
    }
  }

  Phase eval(const SurfaceAssignment& asg) const {
    Phase total;
    for (int f : faces_) {
      int chart = face_chart(asg, f);
      if (!(face_mask_.at(f) & (1u << chart)))
        throw InvalidAssignment(
            "assigned chart does not contain the closed face");
      total += Phase::turns(gerbe_.f_at(chart, f));
    }
    for (const EdgeTerm& term : edges_) {
      int plus = term.plus_face >= 0 ? face_chart(asg, term.plus_face)
                                     : term.plus_collar;
      int minus = term.minus_face >= 0 ? face_chart(asg, term.minus_face)
                                       : term.minus_collar;
      total += Phase::turns(gerbe_.a_along(minus, plus, term.edge));
    }
    for (const FanTerm& fan : fans_) {
      int frame;
      if (fan.open) {
        frame = fan.virt_in;
      } else {
        auto it = asg.vertex_chart.find(fan.vertex);
        if (it == asg.vertex_chart.end())
          throw InvalidAssignment("no chart assigned to vertex " +
                                  std::to_string(fan.vertex));
        frame = it->second;
        if (!(vertex_mask_.at(fan.vertex) & (1u << frame)))
          throw InvalidAssignment("vertex outside its assigned chart");
      }
      if (fan.open) {
        total += gerbe_.theta_vertex(
            fan.virt_in, face_chart(asg, fan.chain.front()), frame, fan.vertex);
        for (std::size_t k = 0; k + 1 < fan.chain.size(); ++k)
          total += gerbe_.theta_vertex(face_chart(asg, fan.chain[k]),
                                       face_chart(asg, fan.chain[k + 1]), frame,
                                       fan.vertex);
        total += gerbe_.theta_vertex(face_chart(asg, fan.chain.back()),
                                     fan.virt_out, frame, fan.vertex);
      } else {
        for (std::size_t k = 0; k < fan.chain.size(); ++k)
          total += gerbe_.theta_vertex(
              face_chart(asg, fan.chain[k]),
              face_chart(asg, fan.chain[(k + 1) % fan.chain.size()]), frame,
              fan.vertex);
      }
    }
    return total;
  }

 private:
  struct EdgeTerm {
    int edge = -1;
    int plus_face = -1;
    int minus_face = -1;
    int plus_collar = -1;
    int minus_collar = -1;
  };
  struct FanTerm {
    int vertex = -1;
    std::vector<int> chain;
    bool open = false;
    int virt_in = -1;
    int virt_out = -1;
  };

  static int face_chart(const SurfaceAssignment& asg, int f) {
    auto it = asg.face_chart.find(f);
    if (it == asg.face_chart.end())
      throw InvalidAssignment("no chart assigned to face " + std::to_string(f));
    return it->second;
  }

  const GerbeData& gerbe_;
  std::vector<int> faces_;
  std::map<int, unsigned> face_mask_;
  std::map<int, unsigned> vertex_mask_;
  std::vector<EdgeTerm> edges_;
  std::vector<FanTerm> fans_;
};

}  // namespace

Phase sheet_holonomy(const GerbeData& gerbe, const Sheet& sheet,
                     const SurfaceAssignment& asg) {
  SheetEvaluator evaluator(gerbe, sheet.faces, nullptr);
  Phase value = evaluator.eval(asg);
  return sheet.orient >= 0 ? value : -value;
}

Phase surface_holonomy(const GerbeData& gerbe, const TwoLoop& s,
                       const SurfaceAssignment& asg) {
  Phase total;
  for (const Sheet& sheet : s.sheets()) total += sheet_holonomy(gerbe, sheet, asg);
  return total;
}

Phase surface_holonomy(const GerbeData& gerbe, const TwoLoop& s) {
  std::vector<int> all_faces;
  for (const Sheet& sheet : s.sheets())
    all_faces.insert(all_faces.end(), sheet.faces.begin(), sheet.faces.end());
  std::sort(all_faces.begin(), all_faces.end());
  all_faces.erase(std::unique(all_faces.begin(), all_faces.end()),
                  all_faces.end());
  return surface_holonomy(gerbe, s,
                          SurfaceAssignment::canonical(*gerbe.space, all_faces));
}

std::vector<Phase> sweep_assignments(
    const GerbeData& gerbe, const std::vector<int>& faces,
    const std::vector<SurfaceAssignment>& assignments) {
  SheetEvaluator evaluator(gerbe, faces, nullptr);
  std::vector<Phase> out;
  out.reserve(assignments.size());
  for (const SurfaceAssignment& asg : assignments)
    out.push_back(evaluator.eval(asg));
  return out;
}

std::vector<SurfaceAssignment> enumerate_assignments(const CoveredSpace& space,
                                                     const std::vector<int>& faces,
                                                     std::size_t cap) {
  const CellComplex& cx = space.complex();
  std::vector<int> verts;
  for (int f : faces)
    for (int side : cx.face(f).sides) verts.push_back(cx.side_tail(side));
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  auto face_options = [&](int f) {
    std::vector<int> opts;
    for (int c = 0; c < space.num_charts(); ++c) {
      const Chart& chart = space.chart(c);
      if (!chart.has_face(f)) continue;
      bool ok = true;
      for (int side : cx.face(f).sides) {
        int e = CellComplex::side_edge(side);
        if (!chart.has_edge(e) || !chart.has_vertex(cx.edge(e).tail) ||
            !chart.has_vertex(cx.edge(e).head))
          ok = false;
      }
      if (ok) opts.push_back(c);
    }
    return opts;
  };
  auto vertex_options = [&](int v) {
    std::vector<int> opts;
    for (int c = 0; c < space.num_charts(); ++c)
      if (space.chart(c).has_vertex(v)) opts.push_back(c);
    return opts;
  };

  std::vector<SurfaceAssignment> out = {SurfaceAssignment{}};
  auto extend = [&](auto&& options, auto&& assign) {
    std::vector<SurfaceAssignment> next;
    for (const SurfaceAssignment& base : out)
      for (int opt : options) {
        SurfaceAssignment a = base;
        assign(a, opt);
        next.push_back(std::move(a));
        if (next.size() > cap)
          throw BudgetExceeded("assignment enumeration exceeds cap");
      }
    out = std::move(next);
  };
  for (int f : faces)
    extend(face_options(f),
           [f](SurfaceAssignment& a, int c) { a.face_chart[f] = c; });
  for (int v : verts)
    extend(vertex_options(v),
           [v](SurfaceAssignment& a, int c) { a.vertex_chart[v] = c; });
  return out;
}

TwoHolonomyReport two_holonomy(
    const GerbeData& gerbe,
    const std::vector<std::pair<std::string, TwoLoop>>& family) {
  TwoHolonomyReport rep;
  for (const auto& [name, loop] : family)
    rep.table.push_back({name, surface_holonomy(gerbe, loop)});
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      ++rep.pairs_checked;
      Phase lhs = surface_holonomy(gerbe, concat(family[i].second,
                                                 family[j].second));
      Phase rhs = rep.table[i].value + rep.table[j].value;
      if (!(lhs == rhs)) {
        rep.homomorphism_ok = false;
        if (rep.first_failure.empty())
          rep.first_failure = "Hol(" + family[i].first + " * " +
                              family[j].first + ") != product";
      }
    }
  for (std::size_t i = 0; i < family.size(); ++i) {
    Phase cancel =
        surface_holonomy(gerbe, concat(family[i].second,
                                       reverse(family[i].second)));
    if (!cancel.is_zero()) {
      rep.homomorphism_ok = false;
      if (rep.first_failure.empty())
        rep.first_failure = "Hol(" + family[i].first + " * inverse) != 1";
    }
  }
  return rep;
}

namespace {

std::map<int, int> collar_from_loops(const HomotopyCell& c) {
  std::map<int, int> collar;
  for (const Step& s : c.from.steps())
    collar[CellComplex::side_edge(s.side)] = s.chart;
  for (const Step& s : c.to.steps())
    collar[CellComplex::side_edge(s.side)] = s.chart;
  return collar;
}

}  // namespace

Phase loop_transport_phase(const GerbeData& gerbe, const Homotopy& h,
                           const SurfaceAssignment& asg) {
  Phase total;
  for (const HomotopyCell& cell : h.cells) {
    if (cell.faces.empty()) continue;
    std::map<int, int> collar = collar_from_loops(cell);
    SheetEvaluator evaluator(gerbe, cell.faces, &collar);
    Phase value = evaluator.eval(asg);
    total += cell.orient >= 0 ? value : -value;
  }
  return total;
}

Phase loop_transport_phase(const GerbeData& gerbe, const Homotopy& h) {
  std::vector<int> all;
  for (const HomotopyCell& cell : h.cells)
    all.insert(all.end(), cell.faces.begin(), cell.faces.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return loop_transport_phase(gerbe, h,
                              SurfaceAssignment::canonical(*gerbe.space, all));
}

}  // namespace ghol
