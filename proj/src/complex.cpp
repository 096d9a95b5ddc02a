#include "ghol/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ghol {

CellComplex::CellComplex(std::vector<std::string> vertices,
                         std::vector<Edge> edges, std::vector<Face> faces)
    : vertex_names_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)) {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertex_index_.count(vertex_names_[i]))
      throw Error("duplicate vertex name: " + vertex_names_[i]);
    vertex_index_[vertex_names_[i]] = i;
  }
  for (const Edge& e : edges_)
    if (e.tail < 0 || e.tail >= num_vertices() || e.head < 0 ||
        e.head >= num_vertices())
      throw Error("edge endpoint out of range");
  for (const Face& f : faces_) {
    if (f.sides.empty()) throw Error("face with empty boundary");
    for (std::size_t k = 0; k < f.sides.size(); ++k) {
      int cur = f.sides[k];
      int nxt = f.sides[(k + 1) % f.sides.size()];
      if (side_edge(cur) >= num_edges() || side_edge(nxt) >= num_edges())
        throw Error("face side out of range");
      if (side_head(cur) != side_tail(nxt))
        throw Error("face boundary does not close");
    }
  }
}

int CellComplex::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw Error("unknown vertex: " + name);
  return it->second;
}

int CellComplex::side_tail(int side) const {
  const Edge& e = edges_[side_edge(side)];
  return side_forward(side) ? e.tail : e.head;
}

int CellComplex::side_head(int side) const {
  const Edge& e = edges_[side_edge(side)];
  return side_forward(side) ? e.head : e.tail;
}

std::vector<int> CellComplex::edges_at(int v) const {
  std::vector<int> out;
  for (int e = 0; e < num_edges(); ++e)
    if (edges_[e].tail == v || edges_[e].head == v) out.push_back(e);
  return out;
}

std::vector<std::pair<int, int>> CellComplex::faces_of_edge(int e) const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < num_faces(); ++f)
    for (int side : faces_[f].sides)
      if (side_edge(side) == e) out.push_back({f, side_forward(side) ? 1 : -1});
  return out;
}

std::vector<std::vector<int>> CellComplex::components(
    const std::vector<int>& verts) const {
  std::set<int> inside(verts.begin(), verts.end());
  std::map<int, int> comp;
  std::vector<std::vector<int>> out;
  for (int v : verts) {
    if (comp.count(v)) continue;
    std::vector<int> stack = {v}, members;
    comp[v] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int e : edges_at(x)) {
        int y = edges_[e].tail == x ? edges_[e].head : edges_[e].tail;
        if (inside.count(y) && !comp.count(y)) {
          comp[y] = comp[v];
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool CellComplex::collapses_to_point(const std::vector<int>& verts,
                                     const std::vector<int>& edges,
                                     const std::vector<int>& faces) const {
  std::set<int> V(verts.begin(), verts.end());
  std::set<int> E(edges.begin(), edges.end());
  std::set<int> F(faces.begin(), faces.end());
  bool progressed = true;
  while (progressed) {
    progressed = false;
    // free edge: lies in exactly one remaining face
    for (int e : std::vector<int>(E.begin(), E.end())) {
      std::vector<int> in_faces;
      for (int f : F)
        for (int side : faces_[f].sides)
          if (side_edge(side) == e) {
            in_faces.push_back(f);
            break;
          }
      if (in_faces.size() == 1) {
        E.erase(e);
        F.erase(in_faces[0]);
        progressed = true;
      }
    }
    // free vertex: endpoint of exactly one remaining edge
    for (int v : std::vector<int>(V.begin(), V.end())) {
      std::vector<int> in_edges;
      for (int e : E)
        if (edges_[e].tail == v || edges_[e].head == v) in_edges.push_back(e);
      if (in_edges.size() == 1) {
        int e = in_edges[0];
        if (edges_[e].tail == edges_[e].head) continue;  // loop edge
        V.erase(v);
        E.erase(e);
        progressed = true;
      }
    }
  }
  return F.empty() && E.empty() && V.size() == 1;
}

CellComplex make_cycle_graph(int n) {
  std::vector<std::string> verts(n);
  std::vector<CellComplex::Edge> edges(n);
  for (int i = 0; i < n; ++i) {
    verts[i] = "v" + std::to_string(i);
    edges[i] = {i, (i + 1) % n};
  }
  return CellComplex(std::move(verts), std::move(edges), {});
}

CellComplex make_path_graph(int n) {
  std::vector<std::string> verts(n);
  std::vector<CellComplex::Edge> edges(n - 1);
  for (int i = 0; i < n; ++i) verts[i] = "v" + std::to_string(i);
  for (int i = 0; i + 1 < n; ++i) edges[i] = {i, i + 1};
  return CellComplex(std::move(verts), std::move(edges), {});
}

CellComplex make_torus_grid(int nx, int ny) {
  // vertices (i,j), horizontal edges h(i,j): (i,j)->(i+1,j),
  // vertical edges v(i,j): (i,j)->(i,j+1); faces counterclockwise.
  auto vid = [&](int i, int j) { return ((i % nx + nx) % nx) * ny + ((j % ny + ny) % ny); };
  std::vector<std::string> verts(nx * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      verts[vid(i, j)] = "v" + std::to_string(i) + "_" + std::to_string(j);
  std::vector<CellComplex::Edge> edges;
  auto h = [&](int i, int j) { return 2 * vid(i, j); };
  auto v = [&](int i, int j) { return 2 * vid(i, j) + 1; };
  edges.resize(2 * nx * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      edges[h(i, j)] = {vid(i, j), vid(i + 1, j)};
      edges[v(i, j)] = {vid(i, j), vid(i, j + 1)};
    }
  std::vector<CellComplex::Face> faces;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      // boundary: h(i,j), v(i+1,j), -h(i,j+1), -v(i,j)
      faces.push_back({{h(i, j), v((i + 1) % nx, j), ~h(i, (j + 1) % ny), ~v(i, j)}});
    }
  return CellComplex(std::move(verts), std::move(edges), std::move(faces));
}

CellComplex make_octahedron() {
  // poles n (north), s (south); equator ring e0..e3
  std::vector<std::string> verts = {"n", "e0", "e1", "e2", "e3", "s"};
  const int N = 0, S = 5;
  auto E = [](int k) { return 1 + (k % 4 + 4) % 4; };
  std::vector<CellComplex::Edge> edges;
  // 0..3: n->ek, 4..7: ek->e(k+1) equator, 8..11: ek->s
  for (int k = 0; k < 4; ++k) edges.push_back({N, E(k)});
  for (int k = 0; k < 4; ++k) edges.push_back({E(k), E(k + 1)});
  for (int k = 0; k < 4; ++k) edges.push_back({E(k), S});
  std::vector<CellComplex::Face> faces;
  // north faces, outward orientation: n->ek->e(k+1)->n
  for (int k = 0; k < 4; ++k)
    faces.push_back({{k, 4 + k, ~((k + 1) % 4)}});
  // south faces, outward orientation: ek+1 -> ek -> s -> ek+1
  for (int k = 0; k < 4; ++k)
    faces.push_back({{~(4 + k), 8 + k, ~(8 + (k + 1) % 4)}});
  return CellComplex(std::move(verts), std::move(edges), std::move(faces));
}

}  // namespace ghol
