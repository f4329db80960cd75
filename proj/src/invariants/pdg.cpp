#include "krsl2/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace krsl2 {

int PComplex::dim(int t, int q) const {
    auto it = dims.find({t, q});
    return it == dims.end() ? 0 : it->second;
}

KMatrix PComplex::op_at(int t, int q) const {
    auto it = op.find({t, q});
    if (it != op.end()) return it->second;
    return KMatrix(F, dim(t, q + degree), dim(t, q));
}

KMatrix PComplex::power(int t, int q, int k) const {
    KMatrix M = KMatrix::identity(F, dim(t, q));
    for (int i = 0; i < k; ++i) {
        const int at = q + i * degree;
        if (!window.contains(at + degree)) return KMatrix(F, 0, dim(t, q));
        M = op_at(t, at) * M;
    }
    return M;
}

bool PComplex::nilpotent() const {
    for (const auto& [key, n] : dims)
        if (n > 0 && !power(key.first, key.second, p).is_zero()) return false;
    return true;
}

LaurentQ PComplex::euler_characteristic() const {
    LaurentQ r;
    for (const auto& [key, n] : dims)
        if (n) r += LaurentQ::monomial(key.second, key.first % 2 == 0 ? n : -n);
    return r;
}

bool JordanBlock::operator<(const JordanBlock& o) const {
    if (t != o.t) return t < o.t;
    if (q_bottom != o.q_bottom) return q_bottom < o.q_bottom;
    if (size != o.size) return size < o.size;
    return certified > o.certified;
}

std::vector<JordanBlock> jordan_blocks(const PComplex& P) {
    if (!P.nilpotent()) throw InvariantError("the operator does not satisfy d^p = 0");
    std::vector<JordanBlock> out;
    std::map<std::tuple<int, int, int>, int> rank_cache;
    auto r = [&](int t, int q, int k) {
        if (!P.window.contains(q) || P.dim(t, q) == 0) return 0;
        auto key = std::make_tuple(t, q, k);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        int v = k == 0 ? P.dim(t, q) : P.power(t, q, k).rank();
        rank_cache.emplace(key, v);
        return v;
    };
    const int d = P.degree;
    for (const auto& [key, n] : P.dims) {
        if (n == 0) continue;
        const auto [t, s] = key;
        // strings headed at s of length at least k
        auto at_least = [&](int k) { return k > P.p ? 0 : r(t, s, k - 1) - r(t, s - d, k); };
        for (int k = 1; k <= P.p; ++k) {
            const int count = at_least(k) - at_least(k + 1);
            for (int i = 0; i < count; ++i) {
                JordanBlock b;
                b.size = k;
                b.t = t;
                b.q_head = s;
                b.q_bottom = d > 0 ? s : s + d * (k - 1);
                b.certified = P.window.contains(s - d) && (k == P.p || P.window.contains(s + k * d));
                out.push_back(b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CyclotomicValue CyclotomicValue::reduce(const LaurentQ& x, int p) {
    const int M = 2 * p;
    std::vector<mpz_class> a(M, 0);
    for (const auto& [e, v] : x.coeffs()) a[((e % M) + M) % M] += v;
    // q^{2p-2} = -(1 + q^2 + ... + q^{2p-4})
    for (int d = M - 1; d >= 2 * p - 2; --d) {
        if (a[d] == 0) continue;
        const mpz_class c = a[d];
        for (int j = 0; j <= p - 2; ++j) a[d - (2 * p - 2) + 2 * j] -= c;
        a[d] = 0;
    }
    CyclotomicValue r;
    r.p_ = p;
    r.c_.assign(a.begin(), a.begin() + (2 * p - 2));
    return r;
}

bool CyclotomicValue::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v == 0; });
}

namespace {
LaurentQ as_laurent(const std::vector<mpz_class>& c) {
    LaurentQ r;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r += LaurentQ::monomial(static_cast<int>(i), c[i]);
    return r;
}
}  // namespace

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
    return reduce(as_laurent(c_) + as_laurent(o.c_), p_);
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
    return reduce(as_laurent(c_) * as_laurent(o.c_), p_);
}

std::string CyclotomicValue::str() const { return as_laurent(c_).str(); }

SlashReport slash_classes(const PComplex& P) {
    SlashReport rep;
    rep.blocks = jordan_blocks(P);
    LaurentQ image;
    for (const auto& b : rep.blocks) {
        if (!b.certified) {
            ++rep.uncertified;
            continue;
        }
        if (b.size == P.p) continue;
        rep.stable.push_back(b);
        LaurentQ string;
        for (int i = 0; i < b.size; ++i) string += LaurentQ::monomial(b.q_bottom + 2 * i);
        image += b.t % 2 == 0 ? string : -string;
    }
    rep.image = CyclotomicValue::reduce(image, P.p);
    return rep;
}

CyclotomicValue grothendieck_image(const PComplex& P) { return slash_classes(P).image; }

PComplex pcomplex_from_homology(const HomologyModule& H, Sl2Gen g, int p) {
    if (g == Sl2Gen::h) throw InvariantError("h is not nilpotent");
    PComplex P;
    P.F = H.field();
    P.p = p;
    P.degree = g == Sl2Gen::e ? -2 : 2;
    P.window = H.window();
    for (int t : H.degrees())
        for (int q = P.window.qmin; q <= P.window.qmax; ++q) {
            const int n = H.dim(t, q);
            if (n == 0) continue;
            P.dims[{t, q}] = n;
        }
    for (const auto& [key, n] : P.dims) {
        const auto [t, q] = key;
        if (!P.window.contains(q + P.degree)) continue;
        P.op[key] = H.op(g, t, q);
    }
    return P;
}

namespace {

Reduction reduced_cube(const LinkDiagram& L, int p, int N, const mpq_class& t1, const mpq_class& t2) {
    if (p < 3 || p % 2 == 0) throw InvariantError("p must be an odd prime");
    CubeOptions o;
    o.P.N = N;
    o.P.F = Field::prime(p);
    o.P.t1 = t1;
    o.P.t2 = t2;
    return simplify(build_cube(L, o).complex);
}

}  // namespace

PComplex pdg_e_complex(const LinkDiagram& L, int p, const mpq_class& t1, const mpq_class& t2) {
    RComplex S = reduced_cube(L, p, p, t1, t2).small;
    S.R = S.R.quotient((1u << p) - 1u);
    const HomologyModule H(S, default_window(S));
    return pcomplex_from_homology(H, Sl2Gen::e, p);
}

PComplex pdg_f_complex(const LinkDiagram& L, int p, int N, std::optional<Window> window, const mpq_class& t1,
                       const mpq_class& t2) {
    const RComplex S = reduced_cube(L, p, N, t1, t2).small;
    const HomologyModule H(S, window ? *window : default_window(S));
    return pcomplex_from_homology(H, Sl2Gen::f, p);
}

}  // namespace krsl2
