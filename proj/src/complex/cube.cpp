#include "krsl2/complex.hpp"

#include <algorithm>
#include <sstream>

namespace krsl2 {

std::vector<int> RComplex::gens_in(int t) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g)
        if (gens[g].t == t) out.push_back(g);
    return out;
}

int RComplex::tmin() const {
    int m = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) m = g ? std::min(m, gens[g].t) : gens[g].t;
    return m;
}

int RComplex::tmax() const {
    int m = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) m = g ? std::max(m, gens[g].t) : gens[g].t;
    return m;
}

Sl2FreeModule RComplex::module() const {
    Sl2FreeModule M;
    for (const auto& g : gens) {
        M.q.push_back(g.q);
        M.h_const.push_back(g.h);
    }
    M.e = e;
    M.f = f;
    return M;
}

bool RComplex::d_squared_zero() const { return (d * d).is_zero(); }

std::string RComplex::check_equivariance() const {
    for (Sl2Gen g : {Sl2Gen::e, Sl2Gen::f}) {
        const RMatrix& A = g == Sl2Gen::e ? e : f;
        for (int j = 0; j < size(); ++j) {
            RCol lhs = act(R, g, d.col[j], A);
            RCol rhs = d.apply(A.col[j]);
            if (rcol_combine(lhs, rcol_scaled(rhs, Poly::constant(R.F, R.N, -1))).empty()) continue;
            std::ostringstream os;
            os << (g == Sl2Gen::e ? "e" : "f") << " does not commute with d on generator " << gens[j].label;
            return os.str();
        }
    }
    return {};
}

std::vector<GreenDot> framing_dots(int N, int amount, int label) {
    if (amount == 0) return {};
    // f gains amount/2 * (E1 + (N-2) p1) at the base point, minus amount
    // times the twist of an undotted circle.
    mpq_class hollow(amount * (N - 2), 2), solid(amount, 2);
    hollow.canonicalize();
    solid.canonicalize();
    return {GreenDot{label, DotType::hollow, hollow}, GreenDot{-1, DotType::solid, solid}};
}

int Cube::vertex_of(int gen) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), gen);
    return static_cast<int>(it - offset.begin()) - 1;
}

namespace {

int web_edge_of(const Web& w, int label, int free_loops) {
    if (label < w.num_labels()) return w.edge_of_label(label);
    return static_cast<int>(w.edges().size()) - free_loops + (label - w.num_labels());
}

std::string bits(int v, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (v >> i & 1) ? '1' : '0';
    return s;
}

struct Gf2System {
    int nvars;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> rhs;

    void add(const std::vector<int>& vars, int b) {
        std::vector<std::uint64_t> r((nvars + 63) / 64, 0);
        for (int v : vars) r[v / 64] ^= std::uint64_t{1} << (v % 64);
        rows.push_back(r);
        rhs.push_back(b);
    }

    std::optional<std::vector<int>> solve() {
        std::vector<int> pivot_col;
        std::size_t rank = 0;
        for (int c = 0; c < nvars && rank < rows.size(); ++c) {
            std::size_t p = rank;
            auto bit = [&](std::size_t r) { return rows[r][c / 64] >> (c % 64) & 1; };
            while (p < rows.size() && !bit(p)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            std::swap(rhs[p], rhs[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || !bit(r)) continue;
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
                rhs[r] ^= rhs[rank];
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rhs[r]) return std::nullopt;
        std::vector<int> x(nvars, 0);
        for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
        return x;
    }
};

}  // namespace

Cube build_cube(const LinkDiagram& D, const CubeOptions& opt) {
    Cube C;
    C.diagram = D;
    C.options = opt;
    const int n = D.num_crossings();
    const int N = opt.P.N;
    if (n > 20) throw CubeError("too many crossings");
    const int nv = 1 << n;
    const auto xs = D.all_edges();

    std::vector<GreenDot> label_dots = opt.dots;
    int total_framing = 0;
    if (opt.unframed) {
        std::vector<int> fr = opt.framing.empty() ? D.self_writhe() : opt.framing;
        if (static_cast<int>(fr.size()) != D.num_components()) throw CubeError("framing needs one entry per component");
        for (int c = 0; c < D.num_components(); ++c) {
            total_framing += fr[c];
            for (const auto& g : framing_dots(N, fr[c], D.base_point(c))) label_dots.push_back(g);
        }
        C.t_shift = -total_framing;
        C.q_shift = N * total_framing;
    }

    std::vector<Web> webs;
    for (int v = 0; v < nv; ++v) {
        std::vector<bool> dumbbell(n);
        int t = 0, q = 0;
        for (int i = 0; i < n; ++i) {
            int b = v >> i & 1;
            if (D.sign(i) > 0) {
                dumbbell[i] = b == 0;
                t += b;
                q -= b;
            } else {
                dumbbell[i] = b == 1;
                t += b - 1;
                q += 1 - b;
            }
        }
        Web w = Web::from_resolution(D.num_labels(), xs, dumbbell, D.free_loops());
        std::vector<GreenDot> dots;
        for (const auto& bell : w.dumbbells()) {
            if (bell.crossing == opt.omit_dots_at) continue;
            if (D.sign(bell.crossing) > 0) {
                dots.push_back({bell.a, DotType::hollow, opt.P.t1});
                dots.push_back({bell.b, DotType::hollow, opt.P.t2});
            } else {
                dots.push_back({bell.a, DotType::hollow, -opt.P.tbar1()});
                dots.push_back({bell.b, DotType::hollow, -opt.P.tbar2()});
            }
        }
        for (auto g : label_dots) {
            if (g.host >= 0) g.host = web_edge_of(w, g.host, D.free_loops());
            dots.push_back(g);
        }
        try {
            C.spaces.push_back(StateSpace::build(w, N, opt.P, dots));
        } catch (const StateSpaceError& e) {
            throw CubeError(std::string("vertex ") + bits(v, n) + ": " + e.what());
        }
        C.t_of.push_back(t + C.t_shift);
        C.qshift_of.push_back(q + C.q_shift);
    }

    RComplex& K = C.complex;
    K.R = BaseRing(opt.P.F, N);
    int total = 0;
    for (int v = 0; v < nv; ++v) {
        C.offset.push_back(total);
        const auto& V = C.spaces[v];
        const mpq_class hc = V.twist().h + V.shift() + C.qshift_of[v];
        for (int j = 0; j < V.rank(); ++j) {
            ComplexGen g;
            g.t = C.t_of[v];
            g.q = V.basis_q(j) + C.qshift_of[v];
            g.h = hc - g.q;
            std::ostringstream os;
            os << (n ? bits(v, n) : "-") << ":";
            for (int k = 0; k < V.nvars(); ++k) os << V.basis()[j][k];
            g.label = os.str();
            K.gens.push_back(g);
        }
        total += V.rank();
    }
    K.d = RMatrix(total, total);
    K.e = RMatrix(total, total);
    K.f = RMatrix(total, total);
    for (int v = 0; v < nv; ++v) {
        auto M = C.spaces[v].sl2_module();
        for (int j = 0; j < C.spaces[v].rank(); ++j) {
            for (const auto& [i, p] : M.e.col[j]) K.e.col[C.offset[v] + j][C.offset[v] + i] = p;
            for (const auto& [i, p] : M.f.col[j]) K.f.col[C.offset[v] + j][C.offset[v] + i] = p;
        }
    }

    // Raw edge maps.
    std::map<std::pair<int, int>, RMatrix> edge;
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < n; ++i) {
            if (v >> i & 1) continue;
            const int w = v | (1 << i);
            const auto& S = C.spaces[v];
            const auto& T = C.spaces[w];
            const int du = 1 + S.shift() - T.shift();
            Poly u = T.constant(1);
            const auto& x = xs[i];
            if (du == 2) {
                // unzip (target parallel) or zip (target dumbbell)
                u = D.sign(i) > 0 ? T.label_expr(x.bl) - T.label_expr(x.br) : T.label_expr(x.bl) - T.label_expr(x.tr);
            } else if (du != 0) {
                throw CubeError("edge " + bits(v, n) + " -> " + bits(w, n) + ": unexpected degree");
            }
            auto img = label_images(S, T);
            std::string err = check_ring_map(S, T, img, u, D.num_labels() + D.free_loops());
            if (!err.empty()) throw CubeError("edge " + bits(v, n) + " -> " + bits(w, n) + ": " + err);
            edge[{v, i}] = ring_map_matrix(S, T, img, u);
        }

    // Faces must commute for the standard signs; flip edges where they
    // anticommute.
    std::vector<int> flip(static_cast<std::size_t>(nv) * std::max(n, 1), 0);
    {
        Gf2System sys{nv * std::max(n, 1), {}, {}};
        bool any = false;
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if ((v >> i & 1) || (v >> j & 1)) continue;
                    const int vi = v | 1 << i, vj = v | 1 << j;
                    RMatrix A = edge.at({vi, j}) * edge.at({v, i});
                    RMatrix B = edge.at({vj, i}) * edge.at({v, j});
                    int c;
                    if (A == B)
                        c = 0;
                    else if (A == B.scaled(-1))
                        c = 1;
                    else
                        throw CubeError("face at " + bits(v, n) + " does not commute up to sign");
                    any = any || c;
                    sys.add({v * n + i, vi * n + j, v * n + j, vj * n + i}, c);
                }
        if (any) {
            auto sol = sys.solve();
            if (!sol) throw CubeError("no sign assignment makes all faces anticommute");
            flip = *sol;
        }
    }
    for (auto& [key, M] : edge) {
        auto [v, i] = key;
        int s = 0;
        for (int j = 0; j < i; ++j) s += v >> j & 1;
        s += flip[v * n + i];
        C.sign_fixes += flip[v * n + i];
        const int w = v | 1 << i;
        for (int c = 0; c < M.cols; ++c)
            for (const auto& [r, p] : M.col[c]) K.d.col[C.offset[v] + c][C.offset[w] + r] = s % 2 ? -p : p;
    }
    if (!K.d_squared_zero()) throw CubeError("d^2 != 0");
    return C;
}

RMatrix label_multiplication(const Cube& C, int label) {
    const int total = C.complex.size();
    RMatrix M(total, total);
    for (std::size_t v = 0; v < C.spaces.size(); ++v) {
        const auto& V = C.spaces[v];
        Poly x = V.label_expr(label);
        for (int j = 0; j < V.rank(); ++j)
            for (const auto& [i, p] : V.coords(V.basis_element(j) * x)) M.col[C.offset[v] + j][C.offset[v] + i] = p;
    }
    return M;
}

}  // namespace krsl2
