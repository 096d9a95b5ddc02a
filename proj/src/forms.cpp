#include "ghol/forms.hpp"

#include "ghol/errors.hpp"

namespace ghol {

DiscreteForm DiscreteForm::operator+(const DiscreteForm& o) const {
  if (degree != o.degree) throw Error("form degree mismatch in +");
  DiscreteForm out = *this;
  for (const auto& [cell, v] : o.values) {
    Rat s = out.at(cell) + v;
    if (s.is_zero())
      out.values.erase(cell);
    else
      out.values[cell] = s;
  }
  return out;
}

DiscreteForm DiscreteForm::operator-() const {
  DiscreteForm out = *this;
  for (auto& [cell, v] : out.values) v = -v;
  return out;
}

DiscreteForm d(const CellComplex& cx, const DiscreteForm& form) {
  if (form.degree >= 2) throw DegreeOverflow("d of a 2-form");
  DiscreteForm out;
  out.degree = form.degree + 1;
  out.chart = form.chart;
  if (form.degree == 0) {
    for (int e = 0; e < cx.num_edges(); ++e) {
      Rat v = form.at(cx.edge(e).head) - form.at(cx.edge(e).tail);
      if (!v.is_zero()) out.values[e] = v;
    }
  } else {
    for (int f = 0; f < cx.num_faces(); ++f) {
      Rat v(0);
      for (int side : cx.face(f).sides) v += form.along(side);
      if (!v.is_zero()) out.values[f] = v;
    }
  }
  return out;
}

}  // namespace ghol
