#include "krsl2/homology.hpp"

#include <algorithm>

namespace krsl2 {

namespace {

using SVec = std::map<int, mpq_class>;

void axpy(const Field& F, SVec& y, const mpq_class& a, const SVec& x) {
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, F.mul(a, v));
        } else {
            it->second = F.add(it->second, F.mul(a, v));
            if (it->second == 0) y.erase(it);
        }
    }
}

// Sparse echelon basis keyed by leading index; each stored vector carries a
// tag recording it as a combination in some auxiliary space.
struct Echelon {
    Field F;
    std::map<int, std::pair<SVec, SVec>> rows;

    void reduce(SVec& v, SVec& tag) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto r = rows.find(it->first);
            if (r == rows.end()) {
                ++it;
                continue;
            }
            const mpq_class c = F.neg(it->second);
            const int lead = it->first;
            axpy(F, v, c, r->second.first);
            axpy(F, tag, c, r->second.second);
            it = v.upper_bound(lead);
        }
    }

    // True when v was independent.
    bool insert(SVec v, SVec tag) {
        reduce(v, tag);
        if (v.empty()) return false;
        const mpq_class inv = F.inv(v.begin()->second);
        for (auto& [i, x] : v) x = F.mul(x, inv);
        for (auto& [i, x] : tag) x = F.mul(x, inv);
        const int lead = v.begin()->first;
        rows.emplace(lead, std::make_pair(std::move(v), std::move(tag)));
        return true;
    }
};

SVec sparse(const KVec& v) {
    SVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace(static_cast<int>(i), v[i]);
    return s;
}

Exps add_exps(const Exps& a, const Exps& b) {
    Exps r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
    return r;
}

// Columns of d restricted to (t, q) -> (t+1, q).
std::vector<SVec> sparse_d(const RComplex& C, const GradedPiece& src, const GradedPiece& tgt) {
    std::vector<SVec> cols(src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        const auto& [g, m] = src.basis()[j];
        for (const auto& [r, p] : C.d.col[g])
            for (const auto& [e, c] : p.terms()) {
                int i = tgt.index(r, add_exps(m, e));
                if (i < 0) continue;
                auto& slot = cols[j][i];
                slot = C.R.F.add(slot, c);
                if (slot == 0) cols[j].erase(i);
            }
    }
    return cols;
}

}  // namespace

struct HomologyModule::Piece {
    GradedPiece chains;
    std::vector<KVec> reps;
    Echelon classes;  // boundaries (empty tag) and representatives (tag = class)
};

Window default_window(const RComplex& C) {
    if (C.gens.empty()) return {-2 * C.R.N, 24};
    int lo = C.gens[0].q, hi = C.gens[0].q;
    for (const auto& g : C.gens) {
        lo = std::min(lo, g.q);
        hi = std::max(hi, g.q);
    }
    return {lo - 2 * C.R.N, hi + 24};
}

Window certified_window(const Window& w, int N) { return {w.qmin + 2 * N, w.qmax - 2 * N}; }

HomologyModule::HomologyModule(const RComplex& C, Window w, PivotOrder order)
    : C_(std::make_shared<RComplex>(C)), w_(w), cert_(certified_window(w, C.R.N)) {
    if (cert_.empty()) throw HomologyError("empty certified window");
    const RComplex& K = *C_;
    const Field& F = K.R.F;
    std::vector<int> gq;
    for (const auto& g : K.gens) gq.push_back(g.q);
    const auto ts = degrees();
    for (int t : ts) {
        auto gens = K.gens_in(t);
        for (int q = w.qmin; q <= w.qmax; ++q) {
            auto p = std::make_shared<Piece>();
            p->chains = GradedPiece(K.R, gq, gens, q);
            p->classes.F = F;
            pieces_.emplace(std::make_pair(t, q), std::move(p));
        }
    }
    for (int t : ts)
        for (int q = w.qmin; q <= w.qmax; ++q) {
            Piece& p = *pieces_.at({t, q});
            if (p.chains.dim() == 0) continue;
            // boundaries first
            if (auto prev = pieces_.find({t - 1, q}); prev != pieces_.end())
                for (auto& col : sparse_d(K, prev->second->chains, p.chains)) p.classes.insert(std::move(col), {});
            // cycles by column reduction with identity tracking
            std::vector<SVec> dcols;
            if (auto next = pieces_.find({t + 1, q}); next != pieces_.end())
                dcols = sparse_d(K, p.chains, next->second->chains);
            else
                dcols.assign(p.chains.dim(), SVec{});
            Echelon E{F, {}};
            for (int jj = 0; jj < p.chains.dim(); ++jj) {
                const int j = order == PivotOrder::forward ? jj : p.chains.dim() - 1 - jj;
                SVec v = dcols[j], tag{{j, mpq_class(1)}};
                E.reduce(v, tag);
                if (!v.empty()) {
                    E.insert(std::move(v), std::move(tag));
                    continue;
                }
                const int idx = static_cast<int>(p.reps.size());
                if (p.classes.insert(tag, SVec{{idx, mpq_class(1)}})) {
                    KVec z(p.chains.dim(), mpq_class(0));
                    for (const auto& [i, x] : tag) z[i] = x;
                    p.reps.push_back(std::move(z));
                }
            }
        }
}

std::vector<int> HomologyModule::degrees() const {
    std::vector<int> ts;
    for (const auto& g : C_->gens) ts.push_back(g.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

const HomologyModule::Piece* HomologyModule::find(int t, int q) const {
    auto it = pieces_.find({t, q});
    return it == pieces_.end() ? nullptr : it->second.get();
}

const HomologyModule::Piece& HomologyModule::piece(int t, int q) const {
    if (const Piece* p = find(t, q)) return *p;
    if (!w_.contains(q)) throw HomologyError("q-degree " + std::to_string(q) + " outside the window");
    static const Piece empty{};
    return empty;
}

int HomologyModule::dim(int t, int q) const {
    const Piece* p = find(t, q);
    return p ? static_cast<int>(p->reps.size()) : 0;
}

std::map<std::pair<int, int>, int> HomologyModule::dims() const {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [key, p] : pieces_)
        if (cert_.contains(key.second) && !p->reps.empty()) out[key] = static_cast<int>(p->reps.size());
    return out;
}

LaurentQ HomologyModule::euler_characteristic() const {
    LaurentQ r;
    for (const auto& [key, d] : dims()) r += LaurentQ::monomial(key.second, key.first % 2 == 0 ? d : -d);
    return r;
}

const GradedPiece& HomologyModule::chains(int t, int q) const { return piece(t, q).chains; }

const std::vector<KVec>& HomologyModule::representatives(int t, int q) const { return piece(t, q).reps; }

KVec HomologyModule::class_of(int t, int q, const KVec& cycle) const {
    const Piece& p = piece(t, q);
    KVec out(p.reps.size(), mpq_class(0));
    if (p.chains.dim() == 0) return out;
    RCol lifted = p.chains.lift(cycle, N());
    if (const Piece* next = find(t + 1, q); next && !is_zero_vec(next->chains.coords(C_->d.apply(lifted))))
        throw HomologyError("class_of: not a cycle");
    SVec v = sparse(cycle), tag;
    p.classes.reduce(v, tag);
    if (!v.empty()) throw HomologyError("class_of: cycle outside the span");
    for (const auto& [i, x] : tag) out[i] = field().neg(x);
    return out;
}

mpq_class HomologyModule::h_scalar(int t, int q) const {
    const Piece& p = piece(t, q);
    std::optional<mpq_class> h;
    for (const auto& [g, m] : p.chains.basis()) {
        mpq_class v = C_->gens[g].h - C_->R.qdeg(Poly::monomial(C_->R.F, m));
        if (h && *h != v) throw HomologyError("h is not scalar on a bidegree");
        h = v;
    }
    if (!h) {
        // empty piece: read the constant off any generator
        if (C_->gens.empty()) return -q;
        return C_->gens[0].h + C_->gens[0].q - q;
    }
    return *h;
}

KMatrix HomologyModule::image_matrix(const std::vector<RCol>& images, int t, int q) const {
    const GradedPiece& tgt = piece(t, q).chains;
    KMatrix M(field(), dim(t, q), static_cast<int>(images.size()));
    for (std::size_t j = 0; j < images.size(); ++j) {
        KVec c = class_of(t, q, tgt.coords(images[j]));
        for (std::size_t i = 0; i < c.size(); ++i) M.set(static_cast<int>(i), static_cast<int>(j), c[i]);
    }
    return M;
}

KMatrix HomologyModule::op(Sl2Gen g, int t, int q) const {
    const int code = g == Sl2Gen::e ? 0 : g == Sl2Gen::f ? 1 : 2;
    auto key = std::make_tuple(code, t, q);
    if (auto it = op_cache_.find(key); it != op_cache_.end()) return it->second;
    KMatrix out;
    if (g == Sl2Gen::h) {
        out = KMatrix::identity(field(), dim(t, q)).scaled(h_scalar(t, q));
    } else {
        const Piece& src = piece(t, q);
        const int q2 = g == Sl2Gen::e ? q - 2 : q + 2;
        std::vector<RCol> imgs;
        for (const auto& v : src.reps) imgs.push_back(act(C_->R, g, src.chains.lift(v, N()), g == Sl2Gen::e ? C_->e : C_->f));
        out = image_matrix(imgs, t, q2);
    }
    op_cache_.emplace(key, out);
    return out;
}

KMatrix HomologyModule::induced(const RMatrix& M, int degree, int t, int q) const {
    const Piece& src = piece(t, q);
    std::vector<RCol> imgs;
    for (const auto& v : src.reps) imgs.push_back(M.apply(src.chains.lift(v, N())));
    return image_matrix(imgs, t, q + degree);
}

KMatrix HomologyModule::multiply_E(int k, int t, int q) const {
    const Piece& src = piece(t, q);
    std::vector<RCol> imgs;
    for (const auto& v : src.reps) imgs.push_back(rcol_scaled(src.chains.lift(v, N()), C_->R.E(k)));
    return image_matrix(imgs, t, q + 2 * k);
}

}  // namespace krsl2
