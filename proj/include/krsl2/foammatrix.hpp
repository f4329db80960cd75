#pragma once

#include "krsl2/statespace.hpp"

namespace krsl2 {

// Foam words between disjoint unions of thin circles, read slice by slice:
// cup {n} appends circle n; cap {i} removes circle i; saddle {i, j} merges j
// into i; saddle {i} splits i, the new circle going last; a decoration on
// facet i multiplies by the symmetric function in x_i (or in the
// complementary alphabet), on facet -1 by the E_k; isotopy permutes.
// At N = 2, zip and unzip act as saddles and digon cups and caps as cups
// and caps of the erased circle.
struct CircleFoam {
    StateSpace src, tgt;
    GradedMap map;
};

CircleFoam foam_matrix(const FoamWord& W, int circles, const Sl2Params& P);
CircleFoam foam_matrix(const FoamLinComb& W, int circles, const Sl2Params& P);

// Value of a decoration on circle i of V.
Poly decoration_value(const StateSpace& V, const Decoration& d);

}  // namespace krsl2
