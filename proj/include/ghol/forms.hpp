#pragma once

#include <map>

#include "ghol/complex.hpp"
#include "ghol/rational.hpp"

namespace ghol {

// Discrete differential form on (part of) a cell complex. Degree 0 values
// sit on vertices, degree 1 on oriented edges (as stored), degree 2 on
// oriented faces. Values are exact rationals, interpreted in turns.
struct DiscreteForm {
  int degree = 0;
  int chart = -1;  // owner chart index; -1 when chart-agnostic
  std::map<int, Rat> values;

  Rat at(int cell) const {
    auto it = values.find(cell);
    return it == values.end() ? Rat(0) : it->second;
  }
  // value along a signed side (degree 1)
  Rat along(int side) const {
    Rat v = at(CellComplex::side_edge(side));
    return CellComplex::side_forward(side) ? v : -v;
  }

  DiscreteForm operator+(const DiscreteForm& o) const;
  DiscreteForm operator-() const;
};

// Simplicial coboundary. Degree 0 -> 1 and 1 -> 2; throws DegreeOverflow.
DiscreteForm d(const CellComplex& cx, const DiscreteForm& form);

}  // namespace ghol
