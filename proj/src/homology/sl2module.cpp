#include "krsl2/homology.hpp"

#include <algorithm>
#include <sstream>

namespace krsl2 {

const char* constituent_name(ConstituentKind k) {
    switch (k) {
        case ConstituentKind::verma: return "M";
        case ConstituentKind::dual_verma: return "M*";
        case ConstituentKind::projective: return "P";
        case ConstituentKind::simple_finite: return "L";
        case ConstituentKind::unresolved: return "?";
    }
    return "";
}

namespace {

int to_int(const mpq_class& x) {
    if (x.get_den() != 1) throw HomologyError("non-integral weight");
    return static_cast<int>(x.get_num().get_si());
}

int rank_of(const Field& F, const std::vector<KVec>& vs, int dim) {
    Span S(F, dim);
    for (const auto& v : vs) S.insert(v);
    return S.rank();
}

// Basis of the generalized eigenspace of A for eigenvalue c, grown by
// preimages: K_{k+1} = { v : (A - c) v in K_k }. One reduction of
// [A - c | I] gives both particular solutions and the solvability test.
std::vector<KVec> generalized_eigenspace(const KMatrix& A, const mpq_class& c) {
    const Field& F = A.field();
    const int n = A.rows();
    KMatrix aug(F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, i == j ? A.at(i, j) - c : A.at(i, j));
        aug.set(i, n + i, 1);
    }
    std::vector<int> piv;
    const KMatrix R = aug.rref(&piv);
    const int r = static_cast<int>(std::count_if(piv.begin(), piv.end(), [&](int p) { return p < n; }));
    if (r == n) return {};
    auto row_dot = [&](int i, const KVec& w) {
        mpq_class s = 0;
        for (int j = 0; j < n; ++j)
            if (R.at(i, n + j) != 0 && w[j] != 0) s += R.at(i, n + j) * w[j];
        return F.reduce(s);
    };
    // kernel of A - c from the pivot rows
    std::vector<KVec> base;
    std::vector<bool> is_piv(n, false);
    for (int i = 0; i < r; ++i) is_piv[piv[i]] = true;
    for (int fc = 0; fc < n; ++fc) {
        if (is_piv[fc]) continue;
        KVec v(n);
        v[fc] = 1;
        for (int i = 0; i < r; ++i) v[piv[i]] = F.neg(R.at(i, fc));
        base.push_back(std::move(v));
    }
    std::vector<KVec> K = base;
    while (true) {
        const int k = static_cast<int>(K.size());
        // combinations of K lying in the image: the left null rows vanish on them
        KMatrix test(F, n - r, k);
        for (int i = r; i < n; ++i)
            for (int j = 0; j < k; ++j) test.set(i - r, j, row_dot(i, K[j]));
        std::vector<KVec> cols = base;
        for (const auto& comb : test.kernel()) {
            KVec w(n);
            for (int j = 0; j < k; ++j)
                if (comb[j] != 0)
                    for (int x = 0; x < n; ++x) w[x] += comb[j] * K[j][x];
            for (auto& x : w) x = F.reduce(x);
            KVec v(n);
            for (int i = 0; i < r; ++i) v[piv[i]] = row_dot(i, w);
            cols.push_back(std::move(v));
        }
        // echelon basis keeps the entries small
        const KMatrix red = KMatrix::from_columns(F, n, cols).transpose().rref();
        std::vector<KVec> next;
        for (int i = 0; i < red.rows(); ++i) {
            KVec row(n);
            for (int j = 0; j < n; ++j) row[j] = red.at(i, j);
            if (!is_zero_vec(row)) next.push_back(std::move(row));
        }
        if (static_cast<int>(next.size()) == k) return K;
        K = std::move(next);
    }
}

// Cheap exact test that c is not an eigenvalue: full rank modulo a large
// prime forces full rank over Q.
bool surely_not_eigenvalue(const KMatrix& A, const mpq_class& c) {
    static const Field big = Field::prime(2147483647);
    const int n = A.rows();
    KMatrix M(big, n, n);
    try {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.set(i, j, i == j ? A.at(i, j) - c : A.at(i, j));
    } catch (const FieldError&) {
        return false;
    }
    return M.rank() == n;
}

}  // namespace

Sl2ModuleReport weight_table(const HomologyModule& H) {
    Sl2ModuleReport r;
    const Window& cw = H.certified();
    for (const auto& [key, d] : H.dims()) {
        auto [t, q] = key;
        int w = to_int(H.h_scalar(t, q));
        r.weights[{t, w}] = d;
        int k = d;
        if (H.window().contains(q - 2)) k = d - H.op(Sl2Gen::e, t, q).rank();
        if (k > 0) r.highest_weight[{t, w}] = k;
        (void)cw;
    }
    return r;
}

Sl2ModuleReport decompose(const HomologyModule& H) {
    Sl2ModuleReport r = weight_table(H);
    if (!H.field().is_rational()) {
        r.error = "constituent analysis needs characteristic zero";
        return r;
    }
    const Window& cw = H.certified();
    const Field& F = H.field();
    for (int t : H.degrees()) {
        const int C = to_int(H.h_scalar(t, cw.qmin) + cw.qmin);
        auto qw = [&](int weight) { return C - weight; };
        auto in_cert = [&](int weight) { return cw.contains(qw(weight)); };

        // Block decomposition of each certified weight space by the
        // Casimir (h + 1)^2 + 4 f e, eigenvalue (lambda + 1)^2 on block lambda.
        std::map<std::pair<int, int>, std::vector<KVec>> block;  // (weight, lambda) -> basis
        int top = INT32_MIN;
        for (int q = cw.qmin; q <= cw.qmax; ++q)
            if (H.dim(t, q) > 0) top = std::max(top, C - q);
        if (top == INT32_MIN) continue;
        for (int q = cw.qmin; q <= cw.qmax; ++q) {
            const int n = H.dim(t, q);
            if (n == 0) continue;
            const int mu = C - q;
            KMatrix hp1 = KMatrix::identity(F, n).scaled(mu + 1);
            KMatrix Om = hp1 * hp1;
            if (H.dim(t, q - 2) > 0) Om = Om + (H.op(Sl2Gen::f, t, q - 2) * H.op(Sl2Gen::e, t, q)).scaled(4);
            int found = 0;
            const int first = mu >= -1 ? mu : (mu % 2 == 0 ? 0 : -1);
            for (int lam = first; lam <= std::max(top, -mu - 2); lam += 2) {
                const mpq_class c((lam + 1) * (lam + 1));
                if (surely_not_eigenvalue(Om, c)) continue;
                auto B = generalized_eigenspace(Om, c);
                if (B.empty()) continue;
                found += static_cast<int>(B.size());
                block[{mu, lam}] = B;
            }
            if (found != n) {
                std::ostringstream os;
                os << "Casimir eigenvalues at t=" << t << " weight " << mu << " are not of the form (lambda+1)^2";
                r.error = os.str();
                return r;
            }
        }
        auto dim_of = [&](int mu, int lam) {
            auto it = block.find({mu, lam});
            return it == block.end() ? 0 : static_cast<int>(it->second.size());
        };
        // f^k or e^k applied to the block basis at weight mu.
        auto power = [&](Sl2Gen g, int mu, int k, std::vector<KVec> vs) {
            int q = qw(mu);
            for (int i = 0; i < k; ++i) {
                KMatrix M = H.op(g, t, q);
                for (auto& v : vs) v = M.apply(v);
                q += g == Sl2Gen::f ? 2 : -2;
            }
            return vs;
        };

        std::vector<int> lambdas;
        for (const auto& [key, B] : block) lambdas.push_back(key.second);
        std::sort(lambdas.begin(), lambdas.end());
        lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
        for (int lam : lambdas) {
            const int low = -lam - 2;
            auto add = [&](ConstituentKind k, int w, int m, bool cert, bool cont) {
                if (m > 0) r.constituents.push_back({k, t, w, m, cert, cont});
            };
            if (lam == -1) {
                int m = dim_of(-1, -1);
                add(ConstituentKind::verma, -1, m, true, true);
                for (int mu = -1; in_cert(mu); mu -= 2)
                    if (dim_of(mu, -1) != m) r.error = "weight profile of block -1 is not that of Vermas";
                continue;
            }
            const int top_dim = dim_of(lam, lam);
            if (!in_cert(low)) {
                add(ConstituentKind::unresolved, lam, top_dim, false, true);
                continue;
            }
            std::vector<KVec> T = block.count({lam, lam}) ? block.at({lam, lam}) : std::vector<KVec>{};
            std::vector<KVec> L = block.count({low, lam}) ? block.at({low, lam}) : std::vector<KVec>{};
            const int nlow = H.dim(t, qw(low));
            const int ntop = H.dim(t, qw(lam));
            int rf = 0, re = 0, rc = 0;
            if (ntop > 0) {
                rf = rank_of(F, power(Sl2Gen::f, lam, lam + 1, T), nlow);
                auto EL = power(Sl2Gen::e, low, lam + 1, L);
                re = rank_of(F, EL, ntop);
                rc = rank_of(F, power(Sl2Gen::f, lam, lam + 1, EL), nlow);
            }
            int p = rc, c = rf - rc, d = re - rc;
            int a = top_dim - c - d - p, b = dim_of(low, lam) - c - d - 2 * p;
            if (a < 0 || b < 0 || c < 0 || d < 0) {
                r.error = "inconsistent block data at t=" + std::to_string(t) + ", lambda=" + std::to_string(lam);
                return r;
            }
            add(ConstituentKind::projective, low, p, true, true);
            add(ConstituentKind::verma, lam, c, true, true);
            add(ConstituentKind::dual_verma, lam, d, true, true);
            add(ConstituentKind::simple_finite, lam, a, true, false);
            add(ConstituentKind::verma, low, b, true, true);
            if (a + d > 0) r.gamma_part.push_back({ConstituentKind::simple_finite, t, lam, a + d, true, false});
            if (a + c > 0) r.z_part.push_back({ConstituentKind::simple_finite, t, lam, a + c, true, false});
            // the profile must match inside the window
            for (int mu = lam; in_cert(mu); mu -= 2) {
                int want = mu >= -lam ? a + c + d + p : b + c + d + 2 * p;
                if (dim_of(mu, lam) != want) {
                    r.error = "weight profile of block " + std::to_string(lam) + " does not match its constituents";
                    return r;
                }
            }
        }
    }
    std::sort(r.constituents.begin(), r.constituents.end(), [](const Constituent& x, const Constituent& y) {
        if (x.t != y.t) return x.t < y.t;
        if (x.weight != y.weight) return x.weight > y.weight;
        return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    });
    return r;
}

}  // namespace krsl2
