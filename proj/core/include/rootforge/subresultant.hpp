#pragma once

#include <vector>

#include "rootforge/int_poly2.hpp"

namespace rootforge {

// One entry of the subresultant sequence of (f, g) with respect to y.
struct SubresultantEntry {
  int index = 0;  // j
  IntPoly2 sres;  // Sres_j, of y-degree <= j
  IntPoly sr;     // coefficient of y^j in Sres_j
  IntPoly2 u;     // u_j f + v_j g = Sres_j
  IntPoly2 v;
};

// Determinantal subresultants for j = 0 .. deg_y g (the top index only when
// deg_y f > deg_y g). Requires deg_y f >= deg_y g and g != 0.
std::vector<SubresultantEntry> subresultant_sequence(const IntPoly2& f, const IntPoly2& g);

// Principal subresultant coefficients sr_0 .. sr_top without the cofactors.
std::vector<IntPoly> principal_subresultants(const IntPoly2& f, const IntPoly2& g);

// Sylvester resultant with respect to y (f rows first). Both nonzero.
IntPoly resultant_y(const IntPoly2& f, const IntPoly2& g);

// Determinant over Z[x] by fraction-free elimination.
IntPoly determinant(std::vector<std::vector<IntPoly>> m);

}  // namespace rootforge
