#include "ghol/two_loop.hpp"

#include <algorithm>

namespace ghol {

namespace {

// boundary of a face set as edge -> multiplicity
std::map<int, int> face_set_boundary(const CellComplex& cx,
                                     const std::vector<int>& faces) {
  std::map<int, int> mult;
  for (int f : faces)
    for (int side : cx.face(f).sides)
      mult[CellComplex::side_edge(side)] +=
          CellComplex::side_forward(side) ? 1 : -1;
  for (auto it = mult.begin(); it != mult.end();)
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  return mult;
}

}  // namespace

TwoLoop TwoLoop::closed(std::shared_ptr<const CoveredSpace> space,
                        std::vector<Sheet> sheets) {
  if (!space->is_combinatorial())
    throw KindMismatch("two-loops are combinatorial");
  const CellComplex& cx = space->complex();
  for (Sheet& sheet : sheets) {
    std::sort(sheet.faces.begin(), sheet.faces.end());
    if (std::adjacent_find(sheet.faces.begin(), sheet.faces.end()) !=
        sheet.faces.end())
      throw NotClosed("sheet lists a face twice");
    if (!face_set_boundary(cx, sheet.faces).empty())
      throw NotClosed("sheet boundary does not cancel");
    if (sheet.orient != 1 && sheet.orient != -1)
      throw Error("sheet orientation must be +1 or -1");
  }
  TwoLoop out;
  out.space_ = std::move(space);
  out.sheets_ = std::move(sheets);
  return out;
}

TwoLoop concat(const TwoLoop& a, const TwoLoop& b) {
  if (a.space_.get() != b.space_.get())
    throw Error("concat of 2-loops on different spaces");
  TwoLoop out;
  out.space_ = a.space_;
  out.sheets_ = a.sheets_;
  out.sheets_.insert(out.sheets_.end(), b.sheets_.begin(), b.sheets_.end());
  return out;
}

TwoLoop reverse(const TwoLoop& s) {
  TwoLoop out;
  out.space_ = s.space_;
  for (Sheet sheet : s.sheets_) {
    sheet.orient = -sheet.orient;
    out.sheets_.push_back(std::move(sheet));
  }
  std::reverse(out.sheets_.begin(), out.sheets_.end());
  return out;
}

const ThinPath& Homotopy::from() const {
  if (cells.empty()) throw Error("empty homotopy");
  return cells.front().from;
}

const ThinPath& Homotopy::to() const {
  if (cells.empty()) throw Error("empty homotopy");
  return cells.back().to;
}

Homotopy Homotopy::between(std::shared_ptr<const CoveredSpace> space,
                           std::vector<int> faces, ThinPath from, ThinPath to) {
  const CellComplex& cx = space->complex();
  std::sort(faces.begin(), faces.end());
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
    throw NotClosed("homotopy cell lists a face twice");
  std::map<int, int> boundary = face_set_boundary(cx, faces);
  std::map<int, int> expected;
  for (const Step& s : from.steps())
    expected[CellComplex::side_edge(s.side)] +=
        CellComplex::side_forward(s.side) ? 1 : -1;
  for (const Step& s : to.steps())
    expected[CellComplex::side_edge(s.side)] -=
        CellComplex::side_forward(s.side) ? 1 : -1;
  for (auto it = expected.begin(); it != expected.end();)
    it = it->second == 0 ? expected.erase(it) : std::next(it);
  if (boundary != expected)
    throw NotClosed("homotopy boundary does not match its loops");
  Homotopy h;
  h.space = std::move(space);
  h.cells.push_back({std::move(faces), 1, std::move(from), std::move(to)});
  return h;
}

Homotopy Homotopy::identity(std::shared_ptr<const CoveredSpace> space,
                            ThinPath loop) {
  Homotopy h;
  h.space = std::move(space);
  h.cells.push_back({{}, 1, loop, loop});
  return h;
}

namespace {

std::string cell_key(const HomotopyCell& c) {
  std::string key = c.orient > 0 ? "+" : "-";
  key += "{";
  for (int f : c.faces) key += std::to_string(f) + ",";
  key += "}";
  return key;
}

bool cells_cancel(const HomotopyCell& a, const HomotopyCell& b) {
  return a.faces == b.faces && a.orient == -b.orient &&
         thin_equal(a.from, b.to) && thin_equal(a.to, b.from);
}

}  // namespace

Homotopy stack(const Homotopy& a, const Homotopy& b) {
  if (a.space.get() != b.space.get())
    throw Error("stacking homotopies on different spaces");
  if (!thin_equal(a.to(), b.from()))
    throw EndpointMismatch("stacked homotopies do not share a loop");
  Homotopy out;
  out.space = a.space;
  out.cells = a.cells;
  for (const HomotopyCell& c : b.cells) {
    if (!out.cells.empty() && cells_cancel(out.cells.back(), c) &&
        !c.faces.empty())
      out.cells.pop_back();
    else
      out.cells.push_back(c);
  }
  if (out.cells.empty()) out.cells.push_back({{}, 1, a.from(), a.from()});
  return out;
}

Homotopy reverse(const Homotopy& h) {
  Homotopy out;
  out.space = h.space;
  for (auto it = h.cells.rbegin(); it != h.cells.rend(); ++it) {
    HomotopyCell c = *it;
    std::swap(c.from, c.to);
    c.orient = -c.orient;
    out.cells.push_back(std::move(c));
  }
  return out;
}

std::string Homotopy::word_key() const {
  std::string key = from().normal_form_key() + "=>";
  for (const HomotopyCell& c : cells)
    if (!c.faces.empty()) key += cell_key(c);
  key += "=>" + to().normal_form_key();
  return key;
}

SurfaceAssignment SurfaceAssignment::canonical(const CoveredSpace& space,
                                               const std::vector<int>& faces) {
  SurfaceAssignment asg;
  const CellComplex& cx = space.complex();
  for (int f : faces) {
    int chart = -1;
    for (int c = 0; c < space.num_charts() && chart < 0; ++c) {
      if (!space.chart(c).has_face(f)) continue;
      bool closed_ok = true;
      for (int side : cx.face(f).sides) {
        int e = CellComplex::side_edge(side);
        if (!space.chart(c).has_edge(e) ||
            !space.chart(c).has_vertex(cx.edge(e).tail) ||
            !space.chart(c).has_vertex(cx.edge(e).head))
          closed_ok = false;
      }
      if (closed_ok) chart = c;
    }
    if (chart < 0) throw InvalidAssignment("no chart contains a closed face");
    asg.face_chart[f] = chart;
    for (int side : cx.face(f).sides) {
      int v = cx.side_tail(side);
      if (!asg.vertex_chart.count(v)) {
        for (int c = 0; c < space.num_charts(); ++c)
          if (space.chart(c).has_vertex(v)) {
            asg.vertex_chart[v] = c;
            break;
          }
      }
    }
  }
  return asg;
}

}  // namespace ghol
