#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghol/errors.hpp"

namespace ghol {

// Oriented 2-dimensional cell complex. Faces are closed cycles of signed
// edge references (+ / - for edge direction as stored).
class CellComplex {
 public:
  struct Edge {
    int tail = -1;
    int head = -1;
  };
  struct Face {
    // signed edge refs: value e>=0 means edge e forward, ~e means reversed
    std::vector<int> sides;
  };

  CellComplex() = default;
  CellComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
              std::vector<Face> faces);

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  int vertex_index(const std::string& name) const;
  const Edge& edge(int e) const { return edges_[e]; }
  const Face& face(int f) const { return faces_[f]; }

  static int side_edge(int side) { return side >= 0 ? side : ~side; }
  static bool side_forward(int side) { return side >= 0; }

  // tail/head of a signed side as traversed
  int side_tail(int side) const;
  int side_head(int side) const;

  std::vector<int> edges_at(int v) const;  // incident edge indices
  // faces containing edge e, as (face, sign of e in its boundary)
  std::vector<std::pair<int, int>> faces_of_edge(int e) const;

  // connected components over a vertex subset, via edges inside the subset
  std::vector<std::vector<int>> components(const std::vector<int>& verts) const;

  // greedy free-pair collapse; true if the subcomplex collapses to a point
  bool collapses_to_point(const std::vector<int>& verts,
                          const std::vector<int>& edges,
                          const std::vector<int>& faces) const;

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, int> vertex_index_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

// Convenience builders used by scenarios and tests.
CellComplex make_cycle_graph(int n);                    // circle as n-gon graph
CellComplex make_path_graph(int n);                     // interval as path graph
CellComplex make_torus_grid(int nx, int ny);            // quad grid on T^2
CellComplex make_octahedron();                          // combinatorial sphere

}  // namespace ghol
