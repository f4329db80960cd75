#pragma once

#include "krsl2/poly.hpp"
#include "krsl2/symfunc.hpp"

namespace krsl2 {

enum class Sl2Gen { e, f, h };

// e and f act on a polynomial ring as derivations, fixed by their values on
// the variables; h acts by minus the q-degree.
struct Sl2Derivation {
    std::vector<Poly> e_img;
    std::vector<Poly> f_img;
    std::vector<int> weight;  // half q-degree per variable; empty means all 1
};

Poly apply_sl2(Sl2Gen g, const Poly& P, const Sl2Derivation& D);

// Variables x_1..x_a with e = -sum d/dx_i, f = sum x_i^2 d/dx_i.
Sl2Derivation alphabet_derivation(Field F, int a);

// Ring k[E_1..E_N, y_1..y_m]: E_k are the elementary symmetric functions
// of N hidden variables, the y_j are edge variables.
Sl2Derivation equivariant_derivation(Field F, int N, int m);

// Action on the explicit alphabet x_1..x_a (a = R.nvars()).
Poly sl2_on_poly(Sl2Gen g, const Poly& R);

// Action on a symmetric function of alphabet size a through its expansion
// into the e basis, returned in the e basis.
SymFunc sl2_on_sym(Sl2Gen g, const SymFunc& f);

}  // namespace krsl2
