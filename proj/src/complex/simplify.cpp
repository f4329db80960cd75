#include "krsl2/complex.hpp"

#include <set>
#include <tuple>

namespace krsl2 {

namespace {

struct Eliminator {
    const BaseRing& R;
    std::vector<ComplexGen> gens;
    std::vector<RCol> col;            // d by columns
    std::vector<std::set<int>> row;   // nonzero columns of each row
    RMatrix e, f;
    std::vector<bool> alive;

    bool record = false;
    RMatrix incl, proj, homotopy;      // indexed by big generators throughout

    void set_entry(int i, int j, const Poly& p) {
        if (p.is_zero()) {
            col[j].erase(i);
            row[i].erase(j);
        } else {
            col[j][i] = p;
            row[i].insert(j);
        }
    }

    std::optional<std::pair<int, int>> pick() const {
        std::optional<std::tuple<int, int, int, int>> best;
        for (std::size_t a = 0; a < col.size(); ++a) {
            if (!alive[a]) continue;
            for (const auto& [b, p] : col[a]) {
                if (!p.is_constant()) continue;
                auto key = std::make_tuple(gens[a].q, gens[a].t, b, static_cast<int>(a));
                if (!best || key < *best) best = key;
            }
        }
        if (!best) return std::nullopt;
        return std::make_pair(std::get<3>(*best), std::get<2>(*best));
    }

    // pi at the pivot: drop a, replace b by -sum gamma_y c y.
    void project(RCol& v, int a, int b, const mpq_class& c, const std::vector<std::pair<int, Poly>>& gamma) const {
        v.erase(a);
        auto it = v.find(b);
        if (it == v.end()) return;
        Poly beta = it->second.scaled(-c);
        v.erase(it);
        for (const auto& [y, g] : gamma) rcol_add(v, y, g * beta);
    }

    void eliminate(int a, int b) {
        const mpq_class c = 1 / col[a].at(b).constant_term();
        std::vector<std::pair<int, Poly>> delta, gamma;
        for (int x : row[b])
            if (x != a) delta.emplace_back(x, col[x].at(b));
        for (const auto& [y, g] : col[a])
            if (y != b) gamma.emplace_back(y, g);

        for (const auto& [x, dx] : delta) {
            Poly s = dx.scaled(-c);
            for (const auto& [y, g] : gamma) {
                auto it = col[x].find(y);
                Poly cur = it == col[x].end() ? R.zero() : it->second;
                set_entry(y, x, cur + g * s);
            }
        }

        // Transport e and f: g -> pi(A(iota g)), iota(x) = x - c delta_x a.
        std::map<int, Poly> dmap(delta.begin(), delta.end());
        for (Sl2Gen s : {Sl2Gen::e, Sl2Gen::f}) {
            RMatrix& A = s == Sl2Gen::e ? e : f;
            std::vector<RCol> next(A.col.size());
            for (std::size_t g = 0; g < A.col.size(); ++g) {
                if (!alive[g] || static_cast<int>(g) == a || static_cast<int>(g) == b) continue;
                RCol img = A.col[g];
                if (auto it = dmap.find(static_cast<int>(g)); it != dmap.end()) {
                    RCol corr = act(R, s, RCol{{a, it->second.scaled(-c)}}, A);
                    img = rcol_combine(img, corr);
                }
                project(img, a, b, c, gamma);
                next[g] = std::move(img);
            }
            A.col = std::move(next);
        }

        if (record) {
            for (int z = 0; z < proj.cols; ++z) {
                auto it = proj.col[z].find(b);
                if (it != proj.col[z].end())
                    homotopy.col[z] = rcol_combine(homotopy.col[z], rcol_scaled(incl.col[a], it->second.scaled(c)));
                project(proj.col[z], a, b, c, gamma);
            }
            for (const auto& [x, dx] : delta) incl.col[x] = rcol_combine(incl.col[x], rcol_scaled(incl.col[a], dx.scaled(-c)));
            incl.col[a].clear();
            incl.col[b].clear();
        }

        for (int g : {a, b}) {
            for (const auto& [i, p] : col[g]) row[i].erase(g);
            col[g].clear();
            for (int j : row[g]) col[j].erase(g);
            row[g].clear();
            alive[g] = false;
        }
    }
};

}  // namespace

Reduction simplify(const RComplex& C, bool record) {
    const int n = C.size();
    Eliminator el{C.R, C.gens, C.d.col, std::vector<std::set<int>>(n), C.e, C.f, std::vector<bool>(n, true)};
    for (int j = 0; j < n; ++j)
        for (const auto& [i, p] : C.d.col[j]) el.row[i].insert(j);
    el.record = record;
    if (record) {
        el.incl = r_identity(C.R.F, C.R.N, n);
        el.proj = r_identity(C.R.F, C.R.N, n);
        el.homotopy = RMatrix(n, n);
    }
    Reduction out;
    while (auto p = el.pick()) {
        el.eliminate(p->first, p->second);
        ++out.steps;
    }

    std::vector<int> to_small(n, -1);
    for (int g = 0; g < n; ++g)
        if (el.alive[g]) {
            to_small[g] = static_cast<int>(out.kept.size());
            out.kept.push_back(g);
        }
    const int m = static_cast<int>(out.kept.size());
    auto compact = [&](const RCol& v) {
        RCol r;
        for (const auto& [i, p] : v) r.emplace(to_small.at(i), p);
        return r;
    };
    RComplex& S = out.small;
    S.R = C.R;
    S.d = RMatrix(m, m);
    S.e = RMatrix(m, m);
    S.f = RMatrix(m, m);
    for (int k = 0; k < m; ++k) {
        int g = out.kept[k];
        S.gens.push_back(C.gens[g]);
        S.d.col[k] = compact(el.col[g]);
        S.e.col[k] = compact(el.e.col[g]);
        S.f.col[k] = compact(el.f.col[g]);
    }
    if (record) {
        out.recorded = true;
        out.incl = RMatrix(n, m);
        for (int k = 0; k < m; ++k) out.incl.col[k] = el.incl.col[out.kept[k]];
        out.proj = RMatrix(m, n);
        for (int z = 0; z < n; ++z) out.proj.col[z] = compact(el.proj.col[z]);
        out.homotopy = el.homotopy;
    }
    return out;
}

}  // namespace krsl2
