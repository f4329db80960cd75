#include "krsl2/rmatrix.hpp"

#include <functional>
#include <stdexcept>

namespace krsl2 {

void rcol_add(RCol& c, int row, const Poly& p) {
    if (p.is_zero()) return;
    auto it = c.find(row);
    if (it == c.end()) {
        c.emplace(row, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
}

RCol rcol_scaled(const RCol& c, const Poly& p) {
    RCol r;
    if (p.is_zero()) return r;
    for (const auto& [i, v] : c) rcol_add(r, i, v * p);
    return r;
}

RCol rcol_combine(const RCol& a, const RCol& b) {
    RCol r = a;
    for (const auto& [i, v] : b) rcol_add(r, i, v);
    return r;
}

const Poly* RMatrix::entry(int i, int j) const {
    auto it = col[j].find(i);
    return it == col[j].end() ? nullptr : &it->second;
}

RCol RMatrix::apply(const RCol& v) const {
    RCol r;
    for (const auto& [j, c] : v)
        for (const auto& [i, m] : col[j]) rcol_add(r, i, m * c);
    return r;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("RMatrix: shape mismatch");
    RMatrix r(rows, o.cols);
    for (int j = 0; j < o.cols; ++j) r.col[j] = apply(o.col[j]);
    return r;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("RMatrix: shape mismatch");
    RMatrix r(rows, cols);
    for (int j = 0; j < cols; ++j) r.col[j] = rcol_combine(col[j], o.col[j]);
    return r;
}

RMatrix RMatrix::scaled(const mpq_class& c) const {
    RMatrix r(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) rcol_add(r.col[j], i, v.scaled(c));
    return r;
}

bool RMatrix::is_zero() const {
    for (const auto& c : col)
        if (!c.empty()) return false;
    return true;
}

bool RMatrix::operator==(const RMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (int j = 0; j < cols; ++j) {
        if (col[j].size() != o.col[j].size()) return false;
        for (const auto& [i, v] : col[j]) {
            auto it = o.col[j].find(i);
            if (it == o.col[j].end() || !(it->second == v)) return false;
        }
    }
    return true;
}

RMatrix r_identity(const Field& F, int N, int n) {
    RMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.col[i].emplace(i, Poly::constant(F, N, 1));
    return r;
}

BaseRing::BaseRing(Field F_, int N_) : F(F_), N(N_), D(equivariant_derivation(F_, N_, 0)) {}

BaseRing BaseRing::quotient(std::uint32_t mask) const {
    BaseRing r(F, N);
    r.D = D;
    r.killed = killed | mask;
    return r;
}

Poly BaseRing::E(int k) const {
    if (k == 0) return one();
    if (k < 0 || k > N) return zero();
    return Poly::variable(F, N, k - 1);
}

std::vector<int> BaseRing::weights() const {
    std::vector<int> w(N);
    for (int k = 0; k < N; ++k) w[k] = k + 1;
    return w;
}

const std::vector<Exps>& BaseRing::monomials(int q) const {
    auto it = mono_cache_.find(q);
    if (it != mono_cache_.end()) return it->second;
    std::vector<Exps> out;
    if (q >= 0 && q % 2 == 0) {
        Exps e(N, 0);
        // parts are chosen largest first so the order is deterministic
        std::function<void(int, int)> rec = [&](int part, int left) {
            if (left == 0) {
                for (int k = 0; k < N; ++k)
                    if (e[k] && (killed >> k & 1u)) return;
                out.push_back(e);
                return;
            }
            if (part == 0) return;
            for (int k = left / part; k >= 0; --k) {
                e[part - 1] = static_cast<std::uint16_t>(k);
                rec(part - 1, left - k * part);
            }
            e[part - 1] = 0;
        };
        rec(N, q / 2);
    }
    return mono_cache_.emplace(q, std::move(out)).first->second;
}

RCol act(const BaseRing& R, Sl2Gen g, const RCol& v, const RMatrix& gen_images) {
    RCol r;
    for (const auto& [j, c] : v) {
        rcol_add(r, j, apply_sl2(g, c, R.D));
        for (const auto& [i, m] : gen_images.col[j]) rcol_add(r, i, m * c);
    }
    return r;
}

GradedPiece::GradedPiece(const BaseRing& R, const std::vector<int>& gen_q, const std::vector<int>& gens, int Q)
    : F_(R.F), Q_(Q) {
    for (int g : gens) {
        int rest = Q - gen_q[g];
        if (rest < 0 || rest % 2 != 0) continue;
        for (const auto& m : R.monomials(rest)) {
            index_.emplace(std::make_pair(g, m), static_cast<int>(basis_.size()));
            basis_.emplace_back(g, m);
        }
    }
}

int GradedPiece::index(int gen, const Exps& m) const {
    auto it = index_.find({gen, m});
    return it == index_.end() ? -1 : it->second;
}

KVec GradedPiece::coords(const RCol& v) const {
    KVec x(basis_.size(), 0);
    for (const auto& [g, p] : v)
        for (const auto& [m, c] : p.terms()) {
            int i = index(g, m);
            if (i >= 0) x[i] = F_.add(x[i], c);
        }
    return x;
}

RCol GradedPiece::lift(const KVec& x, int nvars) const {
    RCol r;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Poly p(F_, nvars);
        p.add_term(basis_[i].second, x[i]);
        rcol_add(r, basis_[i].first, p);
    }
    return r;
}

namespace {

KMatrix materialize_with(const GradedPiece& src, const GradedPiece& tgt, const std::function<RCol(int, const Exps&)>& image,
                         const Field& F) {
    KMatrix M(F, tgt.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        const auto& [g, m] = src.basis()[j];
        RCol img = image(g, m);
        for (const auto& [i, p] : img)
            for (const auto& [mm, c] : p.terms()) {
                int r = tgt.index(i, mm);
                if (r >= 0) M.add_to(r, j, c);
            }
    }
    return M;
}

}  // namespace

KMatrix materialize(const RMatrix& M, const GradedPiece& src, const GradedPiece& tgt) {
    return materialize_with(
        src, tgt,
        [&](int g, const Exps& m) {
            RCol out;
            for (const auto& [i, p] : M.col[g]) rcol_add(out, i, p * Poly::monomial(p.field(), m));
            return out;
        },
        src.field());
}

KMatrix materialize_action(const BaseRing& R, Sl2Gen g, const RMatrix& gen_images, const GradedPiece& src,
                           const GradedPiece& tgt) {
    return materialize_with(
        src, tgt,
        [&](int gen, const Exps& m) {
            RCol v;
            v.emplace(gen, Poly::monomial(R.F, m));
            return act(R, g, v, gen_images);
        },
        R.F);
}

}  // namespace krsl2
