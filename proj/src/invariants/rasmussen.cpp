#include "krsl2/invariants.hpp"

#include <algorithm>

namespace krsl2 {

namespace {

int to_int(const mpq_class& x) {
    if (x.get_den() != 1) throw InvariantError("non-integral weight");
    return static_cast<int>(x.get_num().get_si());
}

Cube knot_cube(const LinkDiagram& K, const mpq_class& t1, const mpq_class& t2) {
    if (K.num_components() != 1) throw InvariantError("the s-invariant needs a knot");
    CubeOptions o;
    o.P.N = 2;
    o.P.t1 = t1;
    o.P.t2 = t2;
    return build_cube(K, o);
}

// Value at E_1 = 0, E_2 = -1.
mpq_class lee_value(const Poly& p) {
    mpq_class v = 0;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) continue;
        v += e[1] % 2 == 0 ? c : mpq_class(-c);
    }
    return v;
}

}  // namespace

RasmussenResult rasmussen_s(const LinkDiagram& K, const mpq_class& t1, const mpq_class& t2, int extra_window) {
    if (t1 + t2 != 1) throw InvariantError("the s-invariant needs t1 + t2 = 1");
    Cube C = knot_cube(K, t1, t2);
    const RMatrix x = label_multiplication(C, K.base_point(0));
    const Reduction red = simplify(C.complex, true);
    const RMatrix xs = red.proj * x * red.incl;

    RComplex Q = red.small;
    Q.R = Q.R.quotient(1u);
    Window w = default_window(Q);
    w.qmax += extra_window;
    const HomologyModule H(Q, w);
    const Window& cw = H.certified();

    RasmussenResult r;
    std::map<std::pair<int, int>, KMatrix> step;
    auto x_at = [&](int t, int q) -> const KMatrix& {
        auto it = step.find({t, q});
        if (it == step.end()) it = step.emplace(std::make_pair(t, q), H.induced(xs, 2, t, q)).first;
        return it->second;
    };
    bool found = false;
    for (int t : H.degrees()) {
        // stable rank of x^m out of each degree; generators sit where it grows
        std::map<int, int> stable;
        for (int q = cw.qmin; q <= cw.qmax; ++q) {
            const int n = H.dim(t, q);
            if (n == 0) {
                stable[q] = 0;
                continue;
            }
            const int steps = (cw.qmax - q) / 2;
            if (steps < 2) break;
            KMatrix P = KMatrix::identity(H.field(), n);
            int prev = -1, rank = n;
            for (int m = 1; m <= steps; ++m) {
                P = x_at(t, q + 2 * (m - 1)) * P;
                prev = rank;
                rank = P.rank();
            }
            if (rank != prev && rank > 0) {
                r.error = "window too small to certify stabilization";
                return r;
            }
            stable[q] = rank;
            const int below = stable.count(q - 2) ? stable[q - 2] : 0;
            if (rank > below) {
                r.free_rank += rank - below;
                if (!found || q < r.generator_q) {
                    r.generator_q = q;
                    r.generator_t = t;
                }
                found = true;
            }
        }
    }
    if (!found) {
        r.error = "no free part inside the window";
        return r;
    }
    if (r.free_rank != 1) {
        r.error = "free part of rank " + std::to_string(r.free_rank) + " inside the window";
        return r;
    }
    r.mu = to_int(H.h_scalar(r.generator_t, r.generator_q));
    // positive knots have their free generator in positive q-degree here
    r.s = r.generator_q + 1;
    return r;
}

LeeResult lee_s(const LinkDiagram& K) {
    Cube C = knot_cube(K, mpq_class(1, 2), mpq_class(1, 2));
    const RComplex S = simplify(C.complex).small;
    const Field F = Field::rationals();
    LeeResult out;
    auto dense = [&](const std::vector<int>& src, const std::vector<int>& tgt) {
        KMatrix M(F, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < tgt.size(); ++i)
                if (const Poly* p = S.d.entry(tgt[i], src[j])) M.set(static_cast<int>(i), static_cast<int>(j), lee_value(*p));
        return M;
    };
    for (int t = S.tmin(); t <= S.tmax(); ++t) {
        const auto gens = S.gens_in(t);
        if (gens.empty()) continue;
        const KMatrix d_out = dense(gens, S.gens_in(t + 1));
        const KMatrix d_in = dense(S.gens_in(t - 1), gens);
        std::vector<int> qs;
        for (int g : gens) qs.push_back(S.gens[g].q);
        std::vector<int> levels = qs;
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

        Span B(F, static_cast<int>(gens.size()));
        for (int j = 0; j < d_in.cols(); ++j) B.insert(d_in.column(j));
        const int boundary_rank = B.rank();
        int reached = 0;
        for (int p : levels) {
            // cycles supported on generators of q-degree at most p
            std::vector<int> cols;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (qs[j] <= p) cols.push_back(static_cast<int>(j));
            KMatrix sub(F, d_out.rows(), static_cast<int>(cols.size()));
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (int i = 0; i < d_out.rows(); ++i) sub.set(i, static_cast<int>(j), d_out.at(i, cols[j]));
            Span Z = B;
            for (const auto& k : sub.kernel()) {
                KVec v(gens.size(), mpq_class(0));
                for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
                Z.insert(v);
            }
            const int dim = Z.rank() - boundary_rank;
            for (; reached < dim; ++reached) out.levels.push_back(p);
        }
        out.dim += reached;
    }
    std::sort(out.levels.begin(), out.levels.end());
    if (out.dim != 2) throw InvariantError("Lee homology of a knot must have dimension 2");
    out.s = (out.levels.front() + out.levels.back()) / 2;
    return out;
}

}  // namespace krsl2
