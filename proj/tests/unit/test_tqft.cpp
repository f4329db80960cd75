#include <doctest.h>

#include "krsl2/foammatrix.hpp"

#include <random>

using namespace krsl2;

namespace {

const Field Q = Field::rationals();

Sl2Params params(int N) {
    Sl2Params P{Q};
    P.N = N;
    return P;
}

std::vector<int> degrees(const StateSpace& V) {
    std::vector<int> d;
    for (int i = 0; i < V.rank(); ++i) d.push_back(V.basis_q(i));
    std::sort(d.begin(), d.end());
    return d;
}

// The web of a single crossing closed into a curl, dumbbell resolution.
Web curl_dumbbell() { return Web::from_resolution(2, {{0, 1, 0, 1}}, {true}, 0); }

BasicFoam sl(FoamKind k, std::vector<int> loc) { return BasicFoam::local(k, 1, 1, std::move(loc)); }

BasicFoam deco(int facet, SymFunc s, bool complement = false) {
    return BasicFoam::decorate(Decoration{facet, std::move(s), complement});
}

// g(M v) - M(g v) on every generator, as an R-matrix.
RMatrix commutator(Sl2Gen g, const StateSpace& src, const StateSpace& tgt, const RMatrix& M) {
    Sl2FreeModule ms = src.sl2_module(), mt = tgt.sl2_module();
    RMatrix out(M.rows, M.cols);
    const BaseRing& R = src.base();
    for (int j = 0; j < M.cols; ++j) {
        RCol left = act(R, g, M.col[j], g == Sl2Gen::e ? mt.e : mt.f);
        RCol right = M.apply(g == Sl2Gen::e ? ms.e.col[j] : ms.f.col[j]);
        for (const auto& [i, p] : right) rcol_add(left, i, -p);
        out.col[j] = left;
    }
    return out;
}

}  // namespace

TEST_CASE("circle state spaces") {
    StateSpace c2 = StateSpace::circles(1, 2, params(2));
    CHECK(c2.rank() == 2);
    CHECK(degrees(c2) == std::vector<int>{-1, 1});
    for (int N = 3; N <= 5; ++N) {
        StateSpace c = StateSpace::circles(1, N, params(N));
        std::vector<int> want;
        for (int k = 0; k < N; ++k) want.push_back(1 - N + 2 * k);
        CHECK(degrees(c) == want);
        CHECK(c.graded_rank() == quantum_int(N));
    }
    StateSpace empty = StateSpace::circles(0, 2, params(2));
    CHECK(empty.rank() == 1);
    CHECK(empty.basis_q(0) == 0);
    CHECK(StateSpace::circles(3, 2, params(2)).graded_rank() == quantum_int(2) * quantum_int(2) * quantum_int(2));
}

TEST_CASE("dumbbell closures") {
    StateSpace t2 = StateSpace::build(curl_dumbbell(), 2, params(2));
    CHECK(t2.rank() == 2);
    CHECK(degrees(t2) == std::vector<int>{-1, 1});
    // [N][N-1] for the theta-shaped web at N = 3, 4
    for (int N = 3; N <= 4; ++N) {
        StateSpace t = StateSpace::build(curl_dumbbell(), N, params(N));
        CHECK(t.graded_rank() == quantum_int(N) * quantum_int(N - 1));
    }
}

TEST_CASE("normal form and coordinates round trip") {
    StateSpace V = StateSpace::build(curl_dumbbell(), 3, params(3));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = V.zero();
        for (int t = 0; t < 4; ++t) {
            Exps e(V.ring_vars(), 0);
            for (int k = 0; k < 4; ++k) ++e[rng() % V.ring_vars()];
            p.add_term(e, static_cast<int>(rng() % 7) - 3);
        }
        Poly n = V.nf(p);
        CHECK(V.nf(n) == n);
        CHECK(V.element(V.coords(p)) == n);
        for (int i = 0; i < V.nvars(); ++i) CHECK(V.nf(V.relation(i) * p).is_zero());
    }
}

TEST_CASE("foam matrices on circles") {
    Sl2Params P = params(2);
    CircleFoam id = foam_matrix(FoamWord{}, 2, P);
    CHECK(id.map.matrix == r_identity(Q, 2, 4));
    CircleFoam cup = foam_matrix(FoamWord{{sl(FoamKind::cup, {})}}, 0, P);
    CHECK(cup.map.degree == -1);
    REQUIRE(cup.map.matrix.cols == 1);
    REQUIRE(cup.map.matrix.col[0].size() == 1);
    CHECK(cup.tgt.basis_q(cup.map.matrix.col[0].begin()->first) == -1);
    CHECK(is_homogeneous(cup.src, cup.tgt, cup.map));
    // digon cup, one dot, digon cap on a thin strand: the scalar 1
    FoamWord dig{{sl(FoamKind::digon_cup, {}), deco(0, SymFunc::elementary(Q, 1, 1)), sl(FoamKind::digon_cap, {0})}};
    CircleFoam z = foam_matrix(dig, 0, P);
    REQUIRE(z.map.matrix.col[0].size() == 1);
    CHECK(z.map.matrix.col[0].at(0) == Poly::constant(Q, 2, 1));
    CHECK(z.map.degree == 0);
    // sphere with no dot evaluates to 0, torus to N
    CHECK(foam_matrix(FoamWord{{sl(FoamKind::cup, {}), sl(FoamKind::cap, {0})}}, 0, P).map.matrix.is_zero());
    for (int N = 2; N <= 4; ++N) {
        FoamWord torus{{sl(FoamKind::cup, {}), sl(FoamKind::saddle, {0}), sl(FoamKind::saddle, {0, 1}), sl(FoamKind::cap, {0})}};
        CircleFoam t = foam_matrix(torus, 0, params(N));
        CHECK(t.map.matrix.col[0].at(0) == Poly::constant(Q, N, N));
    }
}

TEST_CASE("sl2 operators on the unknot circle") {
    StateSpace V = StateSpace::circles(1, 2, params(2));
    Sl2FreeModule M = V.sl2_module();
    const BaseRing& R = V.base();
    int one = 0;  // basis element 1
    REQUIRE(V.basis()[one] == Exps{0});
    RCol f1 = M.f.col[one];
    REQUIRE(f1.size() == 1);
    CHECK(f1.at(one) == R.E(1).scaled(mpq_class(-1, 2)));
    CHECK(M.h_const[one] == 1);  // h = -q on the degree -1 generator
    RCol E2;
    E2.emplace(one, R.E(2));
    RCol img = act(R, Sl2Gen::e, E2, M.e);
    REQUIRE(img.size() == 1);
    CHECK(img.at(one) == -R.E(1));
}

TEST_CASE("sl2 relations on truncated state spaces") {
    std::vector<std::pair<StateSpace, int>> cases;
    cases.emplace_back(StateSpace::circles(2, 2, params(2)), 2);
    cases.emplace_back(StateSpace::build(curl_dumbbell(), 2, params(2)), 2);
    cases.emplace_back(StateSpace::circles(1, 3, params(3)), 3);
    cases.emplace_back(StateSpace::build(curl_dumbbell(), 3, params(3)), 3);
    for (auto& [V, N] : cases) {
        Sl2FreeModule M = V.sl2_module();
        std::vector<int> gens(V.rank());
        std::iota(gens.begin(), gens.end(), 0);
        const BaseRing& R = V.base();
        int lo = *std::min_element(M.q.begin(), M.q.end());
        for (int Q0 = lo; Q0 <= lo + 10; Q0 += 2) {
            GradedPiece P0(R, M.q, gens, Q0), Pm(R, M.q, gens, Q0 - 2), Pp(R, M.q, gens, Q0 + 2);
            KMatrix Eop = materialize_action(R, Sl2Gen::e, M.e, P0, Pm);
            KMatrix Fop = materialize_action(R, Sl2Gen::f, M.f, P0, Pp);
            KMatrix Fm = materialize_action(R, Sl2Gen::f, M.f, Pm, P0);
            KMatrix Ep = materialize_action(R, Sl2Gen::e, M.e, Pp, P0);
            // [e, f] = h on the piece of degree Q0
            KMatrix H(Q, P0.dim(), P0.dim());
            for (int i = 0; i < P0.dim(); ++i) {
                const auto& [g, m] = P0.basis()[i];
                H.set(i, i, M.h_const[g] - (Q0 - M.q[g]));
            }
            CHECK((Ep * Fop - Fm * Eop) == H);
        }
    }
}

TEST_CASE("twists from green dots are flat") {
    StateSpace V = StateSpace::circles(1, 2, params(2));
    TwistMap none = twist_of(V, {});
    CHECK(none.f.is_zero());
    CHECK(none.h == 0);
    CHECK(check_flat(V, none));
    mpq_class al(2, 3);
    TwistMap hol = twist_of(V, {GreenDot{0, DotType::hollow, al}});
    CHECK(hol.h == -al);
    CHECK(hol.f == V.var(0).scaled(al));
    CHECK(check_flat(V, hol));
    StateSpace V3 = StateSpace::circles(1, 3, params(3));
    TwistMap flo = twist_of(V3, {GreenDot{-1, DotType::solid, al}});
    CHECK(flo.h == -3 * al);
    CHECK(flo.f == V3.E(1).scaled(al));
    CHECK(check_flat(V3, flo));
    TwistMap bad = flo;
    bad.h += 1;
    CHECK_FALSE(check_flat(V3, bad));
}

TEST_CASE("green dots migrate through a merge vertex") {
    Web w = curl_dumbbell();
    for (int N = 2; N <= 3; ++N) {
        StateSpace V = StateSpace::build(w, N, params(N));
        auto d = w.dumbbells().at(0);
        mpq_class lam(5, 2);
        TwistMap thin = twist_of(V, {GreenDot{d.a, DotType::hollow, lam}, GreenDot{d.b, DotType::hollow, lam}});
        TwistMap thick = twist_of(V, {GreenDot{d.thick, DotType::hollow, lam}});
        CHECK(thin.f == thick.f);
        CHECK(thin.h == thick.h);
        GreenDottedWeb g{w, {{d.a, DotType::hollow, lam}, {d.a, DotType::hollow, lam}}};
        CHECK(twist_of(V, greendot_normalize(g).dots).f == twist_of(V, g.dots).f);
    }
}

TEST_CASE("the sl2 action on foam words matches commutators of matrices") {
    std::mt19937 rng(17);
    int checks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int N = 2 + trial % 3;
        Sl2Params P = params(N);
        int n = 1 + static_cast<int>(rng() % 2);
        FoamWord W;
        int cur = n;
        for (int k = 0; k < 4; ++k) {
            int pick = static_cast<int>(rng() % 5);
            if (pick == 0 && cur < 3) {
                W.slices.push_back(sl(FoamKind::cup, {cur}));
                ++cur;
            } else if (pick == 1 && cur > 0) {
                W.slices.push_back(sl(FoamKind::cap, {static_cast<int>(rng() % cur)}));
                --cur;
            } else if (pick == 2 && cur >= 2) {
                W.slices.push_back(sl(FoamKind::saddle, {0, cur - 1}));
                --cur;
            } else if (pick == 3 && cur >= 1 && cur < 3) {
                W.slices.push_back(sl(FoamKind::saddle, {static_cast<int>(rng() % cur)}));
                ++cur;
            } else if (cur >= 1) {
                int f = static_cast<int>(rng() % cur);
                bool comp = rng() % 2;
                int alpha = comp ? N - 1 : 1;
                W.slices.push_back(deco(f, SymFunc::power_sum(Q, alpha, 1 + static_cast<int>(rng() % 2)), comp));
            }
        }
        CircleFoam F = foam_matrix(W, n, P);
        CHECK(is_homogeneous(F.src, F.tgt, F.map));
        for (Sl2Gen g : {Sl2Gen::e, Sl2Gen::f}) {
            RMatrix want = commutator(g, F.src, F.tgt, F.map.matrix);
            FoamLinComb gw = sl2_on_word(g, W, P);
            if (gw.is_zero()) {
                CHECK(want.is_zero());
            } else {
                CHECK(foam_matrix(gw, n, P).map.matrix == want);
            }
            ++checks;
        }
    }
    CHECK(checks == 120);
}
