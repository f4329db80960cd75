#include "krsl2/foammatrix.hpp"

#include <stdexcept>

namespace krsl2 {

namespace {

Poly elementary_value(const StateSpace& V, const Decoration& d, int k) {
    if (d.facet < 0) return V.E(k);
    Poly x = V.var(d.facet);
    if (!d.complement) return k == 0 ? V.constant(1) : k == 1 ? x : V.zero();
    // e_k of the other N - 1 roots: sum_j (-x)^j E_{k-j}
    Poly r = V.zero();
    for (int j = 0; j <= k; ++j) r += (-x).pow(static_cast<unsigned>(j)) * V.E(k - j);
    return r;
}

}  // namespace

Poly decoration_value(const StateSpace& V, const Decoration& d) {
    SymFunc e = newton_convert(d.sym, SymBasis::e);
    std::vector<Poly> vals;
    for (int k = 1; k <= e.alphabet(); ++k) vals.push_back(elementary_value(V, d, k));
    return V.nf(e.alphabet() == 0 ? V.constant(e.poly().constant_term()) : e.poly().substitute(vals));
}

namespace {

struct Step {
    StateSpace tgt;
    RMatrix M;
};

std::vector<Poly> identity_images(const StateSpace& src, const StateSpace& tgt) {
    std::vector<Poly> img;
    for (int i = 0; i < src.nvars(); ++i) img.push_back(tgt.var(i));
    return img;
}

Step cap_step(const StateSpace& src, int i, const Sl2Params& P) {
    StateSpace tgt = StateSpace::circles(src.nvars() - 1, src.N(), P);
    RMatrix M(tgt.rank(), src.rank());
    const int top = src.N() - 1;
    for (int b = 0; b < src.rank(); ++b) {
        const Exps& a = src.basis()[b];
        if (a[i] != top) continue;
        Exps rest;
        for (int k = 0; k < src.nvars(); ++k)
            if (k != i) rest.push_back(a[k]);
        for (int r = 0; r < tgt.rank(); ++r)
            if (tgt.basis()[r] == rest) M.col[b].emplace(r, Poly::constant(src.field(), src.N(), 1));
    }
    return {tgt, M};
}

Step apply_slice(const StateSpace& src, const BasicFoam& s, const Sl2Params& P) {
    const int n = src.nvars(), N = src.N();
    auto loc = [&](std::size_t k) {
        if (k >= s.location.size() || s.location[k] < 0 || s.location[k] >= n)
            throw std::invalid_argument("foam_matrix: bad slice location");
        return s.location[k];
    };
    FoamKind kind = s.kind;
    if (N == 2 && (kind == FoamKind::zip || kind == FoamKind::unzip)) kind = FoamKind::saddle;
    if (N == 2 && kind == FoamKind::digon_cup) kind = FoamKind::cup;
    if (N == 2 && kind == FoamKind::digon_cap) kind = FoamKind::cap;
    if (kind != FoamKind::decoration && kind != FoamKind::isotopy && s.a != 1)
        throw std::invalid_argument("foam_matrix: circles are thin");
    switch (kind) {
        case FoamKind::cup: {
            if (!s.location.empty() && s.location[0] != n) throw std::invalid_argument("foam_matrix: a cup appends a circle");
            StateSpace tgt = StateSpace::circles(n + 1, N, P);
            return {tgt, ring_map_matrix(src, tgt, identity_images(src, tgt), tgt.constant(1))};
        }
        case FoamKind::cap: return cap_step(src, loc(0), P);
        case FoamKind::saddle: {
            if (s.location.size() >= 2) {
                int i = loc(0), j = loc(1);
                if (i == j) throw std::invalid_argument("foam_matrix: merge needs two circles");
                StateSpace tgt = StateSpace::circles(n - 1, N, P);
                std::vector<Poly> img;
                int keep = std::min(i, j), gone = std::max(i, j);
                for (int k = 0; k < n; ++k) {
                    int t = k == gone ? keep : (k > gone ? k - 1 : k);
                    img.push_back(tgt.var(t));
                }
                return {tgt, ring_map_matrix(src, tgt, img, tgt.constant(1))};
            }
            int i = loc(0);
            StateSpace tgt = StateSpace::circles(n + 1, N, P);
            Poly u = divided_difference(tgt, tgt.var(i), tgt.var(n));
            return {tgt, ring_map_matrix(src, tgt, identity_images(src, tgt), u)};
        }
        case FoamKind::decoration: {
            Poly u = decoration_value(src, s.deco.value());
            return {src, ring_map_matrix(src, src, identity_images(src, src), u)};
        }
        case FoamKind::isotopy: {
            if (static_cast<int>(s.permutation.size()) != n) throw std::invalid_argument("foam_matrix: bad permutation");
            std::vector<Poly> img(n);
            for (int k = 0; k < n; ++k) img[s.permutation[k]] = src.var(k);
            return {src, ring_map_matrix(src, src, img, src.constant(1))};
        }
        default: throw std::invalid_argument(std::string("foam_matrix: no circle model for ") + foam_kind_name(s.kind));
    }
}

}  // namespace

CircleFoam foam_matrix(const FoamWord& W, int circles, const Sl2Params& P) {
    StateSpace src = StateSpace::circles(circles, P.N, P);
    StateSpace cur = src;
    RMatrix M = r_identity(P.F, P.N, src.rank());
    for (const auto& s : W.slices) {
        Step st = apply_slice(cur, s, P);
        M = st.M * M;
        cur = st.tgt;
    }
    return {src, cur, GradedMap{foam_degree(W, P.N), M}};
}

CircleFoam foam_matrix(const FoamLinComb& W, int circles, const Sl2Params& P) {
    if (W.is_zero()) throw std::invalid_argument("foam_matrix: empty combination has no target");
    CircleFoam out;
    bool first = true;
    for (const auto& [c, w] : W.terms()) {
        CircleFoam one = foam_matrix(w, circles, P);
        if (first) {
            out = one;
            out.map.matrix = one.map.matrix.scaled(c);
            first = false;
        } else {
            if (one.tgt.nvars() != out.tgt.nvars()) throw std::invalid_argument("foam_matrix: targets differ");
            out.map.matrix = out.map.matrix + one.map.matrix.scaled(c);
        }
    }
    return out;
}

}  // namespace krsl2
