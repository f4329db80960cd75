#include "krsl2/sl2poly.hpp"

namespace krsl2 {

Poly apply_sl2(Sl2Gen g, const Poly& P, const Sl2Derivation& D) {
    Poly r(P.field(), P.nvars());
    if (g == Sl2Gen::h) {
        for (const auto& [e, c] : P.terms()) r.add_term(e, -c * (2 * weighted_degree(e, D.weight)));
        return r;
    }
    const auto& img = g == Sl2Gen::e ? D.e_img : D.f_img;
    for (int i = 0; i < P.nvars(); ++i) {
        if (img[i].is_zero()) continue;
        Poly d = P.derivative(i);
        if (!d.is_zero()) r += d * img[i];
    }
    return r;
}

Sl2Derivation alphabet_derivation(Field F, int a) {
    Sl2Derivation D;
    for (int i = 0; i < a; ++i) {
        Poly x = Poly::variable(F, a, i);
        D.e_img.push_back(Poly::constant(F, a, -1));
        D.f_img.push_back(x * x);
    }
    return D;
}

Sl2Derivation equivariant_derivation(Field F, int N, int m) {
    int n = N + m;
    Sl2Derivation D;
    auto E = [&](int k) {
        if (k == 0) return Poly::constant(F, n, 1);
        if (k > N) return Poly(F, n);
        return Poly::variable(F, n, k - 1);
    };
    for (int k = 1; k <= N; ++k) {
        // e(E_k) = -(N-k+1) E_{k-1};  f(E_k) = E_1 E_k - (k+1) E_{k+1}
        D.e_img.push_back(E(k - 1).scaled(-(N - k + 1)));
        D.f_img.push_back(E(1) * E(k) - E(k + 1).scaled(k + 1));
        D.weight.push_back(k);
    }
    for (int j = 0; j < m; ++j) {
        Poly y = Poly::variable(F, n, N + j);
        D.e_img.push_back(Poly::constant(F, n, -1));
        D.f_img.push_back(y * y);
        D.weight.push_back(1);
    }
    return D;
}

Poly sl2_on_poly(Sl2Gen g, const Poly& R) { return apply_sl2(g, R, alphabet_derivation(R.field(), R.nvars())); }

SymFunc sl2_on_sym(Sl2Gen g, const SymFunc& f) {
    SymFunc fe = newton_convert(f, SymBasis::e);
    Sl2Derivation D = equivariant_derivation(f.field(), f.alphabet(), 0);
    return SymFunc::from_poly(f.alphabet(), SymBasis::e, apply_sl2(g, fe.poly(), D));
}

}  // namespace krsl2
