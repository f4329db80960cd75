#include "krsl2/statespace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace krsl2 {

namespace {

// Sum_{k=0}^{N} (-1)^k E_k x^{N-k}.
Poly circle_polynomial(const StateSpace& V, const Poly& x) {
    const int N = V.N();
    Poly r = V.zero();
    for (int k = 0; k <= N; ++k) {
        Poly t = V.E(k) * x.pow(static_cast<unsigned>(N - k));
        r += (k % 2 == 0) ? t : -t;
    }
    return r;
}

Poly complete_two(const StateSpace& V, const Poly& a, const Poly& b, int m) {
    Poly r = V.zero();
    for (int i = 0; i <= m; ++i) r += a.pow(static_cast<unsigned>(i)) * b.pow(static_cast<unsigned>(m - i));
    return r;
}

struct UnionFind {
    std::vector<int> parent, parity;
    explicit UnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return {x, p};
    }
    void unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != rel) throw StateSpaceError("statespace: inconsistent edge parity");
            return;
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ rel;
    }
};

int edge_key(const Web& w, int e, const std::vector<int>& free_index) {
    const auto& pd = w.edges()[e].pd;
    if (!pd.empty()) return *std::min_element(pd.begin(), pd.end());
    return w.num_labels() + free_index[e];
}

}  // namespace

Poly StateSpace::E(int k) const {
    if (k == 0) return constant(1);
    if (k < 0 || k > R_.N) return zero();
    return Poly::variable(field(), ring_vars(), k - 1);
}

Poly divided_difference(const StateSpace& V, const Poly& a, const Poly& b) {
    Poly r = V.zero();
    for (int k = 0; k < V.N(); ++k) {
        Poly t = V.E(k) * complete_two(V, a, b, V.N() - 1 - k);
        r += (k % 2 == 0) ? t : -t;
    }
    return r;
}

StateSpace StateSpace::build(const Web& web, int N, const Sl2Params& P, const std::vector<GreenDot>& dots) {
    StateSpace V;
    V.R_ = BaseRing(P.F, N);
    V.web_ = web;
    const auto& edges = web.edges();
    const int ne = static_cast<int>(edges.size());
    std::vector<int> free_index(ne, -1);
    {
        int k = 0;
        for (int e = 0; e < ne; ++e)
            if (edges[e].thickness == 1 && edges[e].src < 0 && edges[e].pd.empty()) free_index[e] = k++;
    }
    const auto bells = web.dumbbells();
    const mpq_class half(1, 2);

    // Plan of variables: (degree, defining label) plus a recipe that fills
    // in tails and edge expressions once the ring size is known.
    struct Circle {
        int key;
        std::vector<std::pair<int, int>> edges;  // (web edge, parity) for N = 2
    };
    struct Ladder {
        int key;
        std::vector<int> rungs;  // indices into bells, in walking order
    };
    std::vector<Circle> circles;
    std::vector<Ladder> ladders;

    if (N == 2) {
        UnionFind uf(ne);
        for (const auto& d : bells) {
            uf.unite(d.a, d.b, 1);
            uf.unite(d.c, d.d, 1);
        }
        std::map<int, std::vector<std::pair<int, int>>> cls;
        for (int e = 0; e < ne; ++e) {
            if (edges[e].thickness != 1) continue;
            auto [r, p] = uf.find(e);
            cls[r].emplace_back(e, p);
        }
        for (auto& [r, members] : cls) {
            int key = INT32_MAX;
            for (auto [e, p] : members) key = std::min(key, edge_key(web, e, free_index));
            circles.push_back({key, members});
        }
    } else {
        std::vector<int> bell_of_merge(web.vertices().size(), -1);
        for (std::size_t i = 0; i < bells.size(); ++i) bell_of_merge[bells[i].merge] = static_cast<int>(i);
        std::vector<bool> used(bells.size(), false);
        for (int e = 0; e < ne; ++e)
            if (edges[e].thickness == 1 && edges[e].src < 0) circles.push_back({edge_key(web, e, free_index), {{e, 0}}});
        for (std::size_t start = 0; start < bells.size(); ++start) {
            if (used[start]) continue;
            std::vector<int> cyc;
            int cur = static_cast<int>(start);
            while (!used[cur]) {
                used[cur] = true;
                cyc.push_back(cur);
                const auto& d = bells[cur];
                int mc = edges[d.c].dst, md = edges[d.d].dst;
                if (mc != md) throw StateSpaceError("statespace: web component is not a ladder (unsupported for N >= 3)");
                cur = bell_of_merge[mc];
            }
            if (cur != cyc.front()) throw StateSpaceError("statespace: ladder does not close");
            // start the ladder at the rung whose inputs carry the smallest label
            int best = 0, key = INT32_MAX;
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                const auto& d = bells[cyc[j]];
                int k = std::min(edge_key(web, d.a, free_index), edge_key(web, d.b, free_index));
                if (k < key) {
                    key = k;
                    best = static_cast<int>(j);
                }
            }
            std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
            ladders.push_back({key, cyc});
        }
    }

    // Variable allocation in component order.
    struct Item {
        int key;
        bool ladder;
        int idx;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < circles.size(); ++i) items.push_back({circles[i].key, false, static_cast<int>(i)});
    for (std::size_t i = 0; i < ladders.size(); ++i) items.push_back({ladders[i].key, true, static_cast<int>(i)});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });
    int m = 0;
    for (const auto& it : items) m += it.ladder ? 1 + static_cast<int>(ladders[it.idx].rungs.size()) : 1;

    auto first_label = [&](int e) {
        const auto& pd = edges[e].pd;
        return pd.empty() ? web.num_labels() + free_index[e] : pd.front();
    };

    V.deg_.assign(m, 0);
    V.tail_.assign(m, Poly());
    V.var_label_.assign(m, -1);
    V.edge_expr_.assign(ne, Poly(P.F, N + m));
    const int n = N + m;
    auto Vvar = [&](int i) { return Poly::variable(P.F, n, N + i); };
    auto Ek = [&](int k) { return k == 0 ? Poly::constant(P.F, n, 1) : Poly::variable(P.F, n, k - 1); };
    Poly phi(P.F, n);
    int next = 0;
    for (const auto& it : items) {
        if (!it.ladder) {
            const auto& c = circles[it.idx];
            int v = next++;
            Poly x = Vvar(v);
            V.deg_[v] = N;
            V.tail_[v] = x.pow(static_cast<unsigned>(N)) - circle_polynomial(V, x);
            // the variable reads off the edge with the smallest label
            int rep = -1, rep_parity = 0;
            for (auto [e, p] : c.edges)
                if (rep < 0 || edge_key(web, e, free_index) < edge_key(web, rep, free_index)) {
                    rep = e;
                    rep_parity = p;
                }
            V.var_label_[v] = edge_key(web, rep, free_index);
            for (auto [e, p] : c.edges) V.edge_expr_[e] = (p ^ rep_parity) ? Ek(1) - x : x;
            if (N == 2)
                phi += Ek(1).scaled(-half);
            else
                phi += (Ek(1) + x.scaled(N - 2)).scaled(-half);
            continue;
        }
        const auto& L = ladders[it.idx];
        const auto& d0 = bells[L.rungs.front()];
        int va = next++, vb = next++;
        Poly a0 = Vvar(va), b0 = Vvar(vb), s = a0 + b0;
        V.deg_[va] = N;
        V.tail_[va] = a0.pow(static_cast<unsigned>(N)) - circle_polynomial(V, a0);
        V.deg_[vb] = N - 1;
        V.tail_[vb] = b0.pow(static_cast<unsigned>(N - 1)) - divided_difference(V, a0, b0);
        V.var_label_[va] = first_label(d0.a);
        V.var_label_[vb] = first_label(d0.b);
        V.edge_expr_[d0.a] = a0;
        V.edge_expr_[d0.b] = b0;
        for (std::size_t j = 1; j < L.rungs.size(); ++j) {
            const auto& d = bells[L.rungs[j]];
            int v = next++;
            Poly y = Vvar(v);
            V.deg_[v] = 2;
            V.tail_[v] = s * y - a0 * b0;
            V.var_label_[v] = first_label(d.a);
            V.edge_expr_[d.a] = y;
            V.edge_expr_[d.b] = s - y;
        }
        for (int r : L.rungs) {
            const auto& d = bells[r];
            phi -= V.edge_expr_[d.a].scaled(P.t1) + V.edge_expr_[d.b].scaled(P.t2);
        }
        phi -= ((Ek(1) - s).scaled(2) + s.scaled(N - 2)).scaled(half);
    }
    for (const auto& d : bells) {
        V.edge_expr_[d.thick] = V.edge_expr_[d.a] + V.edge_expr_[d.b];
        if (N == 2) phi += V.edge_expr_[d.a].scaled(half - P.t1) + V.edge_expr_[d.b].scaled(half - P.t2);
    }
    for (int e = 0; e < ne; ++e)
        if (free_index[e] >= 0) V.free_loop_edge_.push_back(e);

    V.finish();
    TwistMap dot_twist = twist_of(V, dots);
    V.twist_.e = V.zero();
    V.twist_.f = V.nf(phi + dot_twist.f);
    Poly eh = V.nf(apply_sl2(Sl2Gen::e, V.twist_.f, V.D_));
    if (!eh.is_constant()) throw StateSpaceError("statespace: twist is not flat");
    V.twist_.h = eh.constant_term();
    return V;
}

void StateSpace::finish() {
    const int m = nvars();
    shift_ = 0;
    for (int d : deg_) shift_ -= d - 1;
    basis_.clear();
    basis_index_.clear();
    Exps a(m, 0);
    std::vector<Exps> all;
    while (true) {
        all.push_back(a);
        int i = 0;
        while (i < m) {
            if (++a[i] < deg_[i]) break;
            a[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    std::stable_sort(all.begin(), all.end(), GrLex());
    basis_ = all;
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i]] = static_cast<int>(i);
    D_ = equivariant_derivation(field(), R_.N, m);
}

int StateSpace::basis_q(int i) const { return 2 * total_degree(basis_[i]) + shift_; }

LaurentQ StateSpace::graded_rank() const {
    LaurentQ r;
    for (int i = 0; i < rank(); ++i) r += LaurentQ::monomial(basis_q(i));
    return r;
}

Poly StateSpace::basis_element(int i) const {
    Exps e(ring_vars(), 0);
    for (int k = 0; k < nvars(); ++k) e[R_.N + k] = basis_[i][k];
    return Poly::monomial(field(), e);
}

Poly StateSpace::relation(int i) const { return var(i).pow(static_cast<unsigned>(deg_[i])) - tail_[i]; }

Poly StateSpace::nf(const Poly& p) const {
    if (p.nvars() != ring_vars()) throw std::invalid_argument("statespace: ring mismatch");
    Poly cur = p;
    for (int i = nvars() - 1; i >= 0; --i) {
        const int v = R_.N + i;
        const int d = deg_[i];
        Poly done(field(), ring_vars());
        Poly todo = cur;
        while (!todo.is_zero()) {
            Poly next(field(), ring_vars());
            for (const auto& [e, c] : todo.terms()) {
                if (e[v] < d) {
                    done.add_term(e, c);
                } else {
                    Exps r = e;
                    r[v] = static_cast<std::uint16_t>(r[v] - d);
                    next += Poly::monomial(field(), r, c) * tail_[i];
                }
            }
            todo = std::move(next);
        }
        cur = std::move(done);
    }
    return cur;
}

RCol StateSpace::coords(const Poly& p) const {
    Poly q = nf(p);
    RCol out;
    std::map<int, Poly> acc;
    for (const auto& [e, c] : q.terms()) {
        Exps tower(e.begin() + R_.N, e.end());
        Exps ep(e.begin(), e.begin() + R_.N);
        auto it = basis_index_.find(tower);
        if (it == basis_index_.end()) throw std::logic_error("statespace: normal form left the basis");
        rcol_add(out, it->second, Poly::monomial(field(), ep, c));
    }
    return out;
}

Poly StateSpace::element(const RCol& v) const {
    Poly r = zero();
    for (const auto& [i, c] : v) r += c.extended(ring_vars()) * basis_element(i);
    return r;
}

Poly StateSpace::label_expr(int label) const {
    if (label < web_.num_labels()) return edge_expr_.at(web_.edge_of_label(label));
    return edge_expr_.at(free_loop_edge_.at(label - web_.num_labels()));
}

Poly StateSpace::act(Sl2Gen g, const Poly& p) const {
    Poly r = apply_sl2(g, p, D_);
    if (g == Sl2Gen::f) r += twist_.f * p;
    if (g == Sl2Gen::h) r += p.scaled(twist_.h);
    return nf(r);
}

Sl2FreeModule StateSpace::sl2_module() const {
    Sl2FreeModule M;
    M.e = RMatrix(rank(), rank());
    M.f = RMatrix(rank(), rank());
    for (int i = 0; i < rank(); ++i) {
        M.q.push_back(basis_q(i));
        M.h_const.push_back(twist_.h - 2 * total_degree(basis_[i]));
        Poly b = basis_element(i);
        M.e.col[i] = coords(act(Sl2Gen::e, b));
        M.f.col[i] = coords(act(Sl2Gen::f, b));
    }
    return M;
}

std::string StateSpace::describe() const {
    std::ostringstream os;
    os << "rank " << rank() << " shift " << shift_ << " vars";
    for (int i = 0; i < nvars(); ++i) os << " y" << i << "^" << deg_[i] << "@" << var_label_[i];
    return os.str();
}

TwistMap twist_of(const StateSpace& V, const std::vector<GreenDot>& dots) {
    TwistMap t{V.zero(), V.zero(), 0};
    const int N = V.N();
    for (const auto& d : dots) {
        if (d.mult == 0) continue;
        if (d.host < 0) {
            if (d.type != DotType::solid) throw std::invalid_argument("twist: floating dots are solid");
            t.f += V.E(1).scaled(d.mult);
            t.h -= d.mult * N;
            continue;
        }
        const int a = V.web().edges().at(d.host).thickness;
        Poly p1 = V.edge_expr(d.host);
        if (d.type == DotType::hollow) {
            t.f += p1.scaled(d.mult);
            t.h -= d.mult * a;
        } else {
            t.f += (V.E(1) - p1).scaled(d.mult);
            t.h -= d.mult * (N - a);
        }
    }
    t.f = V.nf(t.f);
    return t;
}

bool check_flat(const StateSpace& V, const TwistMap& tau) {
    const auto& D = V.derivation();
    auto nf = [&](const Poly& p) { return V.nf(p); };
    // [e, f] = h
    if (nf(apply_sl2(Sl2Gen::e, tau.f, D) - apply_sl2(Sl2Gen::f, tau.e, D)) != V.constant(tau.h)) return false;
    // [h, e] = 2e, with h(tau(h)) = 0 and e(tau(h)) = 0 for constants
    if (nf(apply_sl2(Sl2Gen::h, tau.e, D) - tau.e.scaled(2)) != V.zero()) return false;
    // [h, f] = -2f
    if (nf(apply_sl2(Sl2Gen::h, tau.f, D) + tau.f.scaled(2)) != V.zero()) return false;
    return true;
}

bool is_homogeneous(const StateSpace& src, const StateSpace& tgt, const GradedMap& m) {
    const auto w = src.base().weights();
    for (int j = 0; j < m.matrix.cols; ++j)
        for (const auto& [i, p] : m.matrix.col[j]) {
            int want = m.degree + src.basis_q(j) - tgt.basis_q(i);
            if (!p.homogeneous(w) || p.qdeg(w) != want) return false;
        }
    return true;
}

namespace {

std::vector<Poly> full_images(const StateSpace& src, const StateSpace& tgt, const std::vector<Poly>& images) {
    std::vector<Poly> full;
    for (int k = 1; k <= src.N(); ++k) full.push_back(tgt.E(k));
    for (const auto& p : images) full.push_back(p);
    return full;
}

}  // namespace

RMatrix ring_map_matrix(const StateSpace& src, const StateSpace& tgt, const std::vector<Poly>& images, const Poly& u) {
    auto full = full_images(src, tgt, images);
    RMatrix M(tgt.rank(), src.rank());
    for (int i = 0; i < src.rank(); ++i) M.col[i] = tgt.coords(src.basis_element(i).substitute(full) * u);
    return M;
}

std::vector<Poly> label_images(const StateSpace& src, const StateSpace& tgt) {
    std::vector<Poly> img;
    for (int i = 0; i < src.nvars(); ++i) img.push_back(tgt.label_expr(src.var_label(i)));
    return img;
}

std::string check_ring_map(const StateSpace& src, const StateSpace& tgt, const std::vector<Poly>& images, const Poly& u,
                           int num_labels) {
    auto full = full_images(src, tgt, images);
    for (int i = 0; i < src.nvars(); ++i)
        if (!tgt.nf(src.relation(i).substitute(full) * u).is_zero())
            return "relation of variable " + std::to_string(i) + " is not killed";
    for (int l = 0; l < num_labels; ++l)
        if (!tgt.nf((src.label_expr(l).substitute(full) - tgt.label_expr(l)) * u).is_zero())
            return "label " + std::to_string(l) + " disagrees";
    return {};
}

}  // namespace krsl2
