#include "krsl2/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace krsl2 {

namespace {

// Corners of a crossing drawn with both strands pointing up, counterclockwise
// from the bottom-right slot: br, tr, tl, bl.
enum Corner { kRight = 0, kTop = 1, kLeft = 2, kBottom = 3 };

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

struct Planar {
    int faces = 0;
    std::vector<int> tail, head;        // crossing where a label starts / ends
    std::vector<int> tail_right;        // label leaves as tr (else tl)
    std::vector<int> head_right;        // label enters as br (else bl)
    std::vector<int> left, right;       // face on each side along the orientation
    std::vector<std::array<int, 4>> corner_face;
    std::vector<int> component_face;    // default face at infinity per component
    std::vector<int> face_component;    // projection component of each face
};

Planar planar_structure(const LinkDiagram& D) {
    const int n = D.num_crossings(), L = D.num_labels();
    Planar P;
    P.tail.assign(L, -1);
    P.head.assign(L, -1);
    P.tail_right.assign(L, 0);
    P.head_right.assign(L, 0);
    for (int c = 0; c < n; ++c) {
        const auto& x = D.edges(c);
        P.tail[x.tl] = c;
        P.tail[x.tr] = c;
        P.tail_right[x.tr] = 1;
        P.head[x.bl] = c;
        P.head[x.br] = c;
        P.head_right[x.br] = 1;
    }
    UnionFind corners(4 * n);
    std::vector<std::array<int, 2>> lr(L);
    for (int e = 0; e < L; ++e) {
        const int c = P.tail[e], d = P.head[e];
        const int ccw_out = P.tail_right[e] ? kTop : kLeft;
        const int cw_out = P.tail_right[e] ? kRight : kTop;
        const int ccw_in = P.head_right[e] ? kRight : kBottom;
        const int cw_in = P.head_right[e] ? kBottom : kLeft;
        corners.join(4 * c + ccw_out, 4 * d + cw_in);
        corners.join(4 * c + cw_out, 4 * d + ccw_in);
        lr[e] = {4 * c + ccw_out, 4 * c + cw_out};
    }
    std::map<int, int> id;
    P.corner_face.resize(n);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            int r = corners.find(4 * c + k);
            auto it = id.emplace(r, static_cast<int>(id.size())).first;
            P.corner_face[c][k] = it->second;
        }
    P.faces = static_cast<int>(id.size());
    P.left.resize(L);
    P.right.resize(L);
    for (int e = 0; e < L; ++e) {
        P.left[e] = id.at(corners.find(lr[e][0]));
        P.right[e] = id.at(corners.find(lr[e][1]));
    }
    // one face at infinity per connected component of the projection
    UnionFind comp(n);
    for (int e = 0; e < L; ++e) comp.join(P.tail[e], P.head[e]);
    std::map<int, int> comp_id;
    for (int e = 0; e < L; ++e) {
        const int r = comp.find(P.tail[e]);
        if (comp_id.emplace(r, static_cast<int>(comp_id.size())).second) P.component_face.push_back(P.left[e]);
    }
    P.face_component.assign(P.faces, 0);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) P.face_component[P.corner_face[c][k]] = comp_id.at(comp.find(c));
    return P;
}

struct Chain {
    std::vector<int> labels;
    int start = -1;  // dumbbell crossing it leaves, -1 for a closed chain
    int end = -1;    // dumbbell crossing it enters
};

LaurentQ quantum_dim(int N) { return quantum_int(N); }

}  // namespace

int num_faces(const LinkDiagram& D) { return D.num_crossings() ? planar_structure(D).faces : 0; }

LaurentQ web_evaluation(const LinkDiagram& D, const std::vector<bool>& dumbbell, int N, int outer) {
    const int n = D.num_crossings(), L = D.num_labels();
    LaurentQ loops = LaurentQ::one();
    for (int k = 0; k < D.free_loops(); ++k) loops = loops * quantum_dim(N);
    if (n == 0) return loops;
    const Planar P = planar_structure(D);

    // thin chains of the resolution
    std::vector<int> next(L, -1);
    for (int c = 0; c < n; ++c) {
        const auto& x = D.edges(c);
        if (!dumbbell[c]) {
            next[x.bl] = x.tl;
            next[x.br] = x.tr;
        }
    }
    std::vector<Chain> chains;
    std::vector<int> chain_of(L, -1);
    for (int c = 0; c < n; ++c) {
        if (!dumbbell[c]) continue;
        const auto& x = D.edges(c);
        for (int s : {x.tl, x.tr}) {
            Chain ch;
            ch.start = c;
            int cur = s;
            while (true) {
                ch.labels.push_back(cur);
                chain_of[cur] = static_cast<int>(chains.size());
                if (next[cur] < 0) break;
                cur = next[cur];
            }
            ch.end = P.head[cur];
            chains.push_back(ch);
        }
    }
    int closed = 0;
    for (int e = 0; e < L; ++e) {
        if (chain_of[e] != -1) continue;
        int cur = e;
        while (chain_of[cur] == -1) {
            chain_of[cur] = -2;
            cur = next[cur];
        }
        ++closed;
    }
    LaurentQ factor = loops;
    for (int k = 0; k < closed; ++k) factor = factor * quantum_dim(N);

    struct Bell {
        int c;
        int in[2], out[2];  // chains entering at bl, br and leaving at tl, tr
        int last;           // largest chain index involved
    };
    std::vector<Bell> bells;
    for (int c = 0; c < n; ++c) {
        if (!dumbbell[c]) continue;
        const auto& x = D.edges(c);
        auto chain_ending = [&](int label) {
            for (std::size_t k = 0; k < chains.size(); ++k)
                if (chains[k].labels.back() == label) return static_cast<int>(k);
            return -1;
        };
        Bell b{c, {chain_ending(x.bl), chain_ending(x.br)}, {chain_of[x.tl], chain_of[x.tr]}, 0};
        b.last = std::max({b.in[0], b.in[1], b.out[0], b.out[1]});
        bells.push_back(b);
    }

    const int K = static_cast<int>(chains.size());
    std::vector<int> out_at(n * 2, -1);  // chain leaving crossing c at slot k
    for (const auto& b : bells) {
        out_at[2 * b.c] = b.out[0];
        out_at[2 * b.c + 1] = b.out[1];
    }

    int outer_face = outer >= 0 ? outer : P.component_face[0];
    LaurentQ total;
    std::vector<int> col(K, 0);

    auto rotation = [&](const std::vector<int>& curve_chains) {
        std::vector<char> on(L, 0);
        for (int k : curve_chains)
            for (int e : chains[k].labels) on[e] = 1;
        UnionFind region(P.faces);
        // the other components of the projection sit in the outer face
        for (std::size_t k = 0; k < P.component_face.size(); ++k)
            if (static_cast<int>(k) != P.face_component[outer_face]) region.join(P.component_face[k], outer_face);
        for (int e = 0; e < L; ++e)
            if (!on[e]) region.join(P.left[e], P.right[e]);
        for (int c = 0; c < n; ++c) {
            if (dumbbell[c]) continue;
            const auto& x = D.edges(c);
            if (on[x.bl] && on[x.br]) region.join(P.corner_face[c][kBottom], P.corner_face[c][kTop]);
        }
        const int e0 = chains[curve_chains[0]].labels[0];
        return region.find(P.left[e0]) == region.find(outer_face) ? -1 : 1;
    };

    auto weigh = [&]() {
        int twice = 0;
        for (const auto& b : bells) {
            twice += col[b.in[0]] < col[b.in[1]] ? -1 : 1;
            twice += col[b.out[0]] < col[b.out[1]] ? -1 : 1;
        }
        std::vector<char> seen(K, 0);
        for (int k = 0; k < K; ++k) {
            if (seen[k]) continue;
            std::vector<int> curve;
            int cur = k;
            while (!seen[cur]) {
                seen[cur] = 1;
                curve.push_back(cur);
                const int c = chains[cur].end;
                cur = col[out_at[2 * c]] == col[cur] ? out_at[2 * c] : out_at[2 * c + 1];
            }
            twice += 2 * (N + 1 - 2 * col[k]) * rotation(curve);
        }
        total += LaurentQ::monomial(twice / 2);
    };

    std::vector<std::vector<int>> check_at(K);
    for (std::size_t i = 0; i < bells.size(); ++i) check_at[bells[i].last].push_back(static_cast<int>(i));

    std::function<void(int)> assign = [&](int k) {
        if (k == K) {
            weigh();
            return;
        }
        for (int c = 1; c <= N; ++c) {
            col[k] = c;
            bool ok = true;
            for (int i : check_at[k]) {
                const auto& b = bells[i];
                int a0 = col[b.in[0]], a1 = col[b.in[1]], b0 = col[b.out[0]], b1 = col[b.out[1]];
                if (a0 == a1 || !((a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0))) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(k + 1);
        }
        col[k] = 0;
    };
    assign(0);
    return total * factor;
}

LaurentQ moy_polynomial(const LinkDiagram& D, int N, bool unframed) {
    const int n = D.num_crossings();
    LaurentQ sum;
    for (int v = 0; v < (1 << n); ++v) {
        std::vector<bool> dumbbell(n);
        int t = 0, q = 0;
        for (int i = 0; i < n; ++i) {
            const int b = v >> i & 1;
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
        LaurentQ w = web_evaluation(D, dumbbell, N).shifted(q);
        sum += t % 2 == 0 ? w : -w;
    }
    if (unframed) {
        int f = 0;
        for (int x : D.self_writhe()) f += x;
        sum = sum.shifted(N * f);
        if (f % 2 != 0) sum = -sum;
    }
    return sum;
}

LaurentQ ring_hilbert_series(int N, int qmax) {
    std::map<int, mpz_class> c{{0, 1}};
    for (int k = 1; k <= N; ++k) {
        // multiply by 1 / (1 - q^{2k})
        for (int e = 0; e <= qmax; ++e)
            if (e >= 2 * k && c.count(e - 2 * k)) c[e] += c[e - 2 * k];
    }
    LaurentQ r;
    for (const auto& [e, v] : c)
        if (e <= qmax && v != 0) r += LaurentQ::monomial(e, v);
    return r;
}

std::map<int, mpz_class> truncate(const LaurentQ& x, int qmin, int qmax) {
    std::map<int, mpz_class> out;
    for (const auto& [e, v] : x.coeffs())
        if (e >= qmin && e <= qmax) out[e] = v;
    return out;
}

}  // namespace krsl2
