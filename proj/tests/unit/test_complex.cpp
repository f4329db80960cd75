#include "krsl2/complex.hpp"

#include <doctest.h>

using namespace krsl2;

namespace {

const LinkDiagram::PD kTrefoilAtlas = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
const LinkDiagram::PD kFigureEight = {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};

CubeOptions options(int N, mpq_class t1 = mpq_class(1, 2), mpq_class t2 = mpq_class(1, 2), bool unframed = true) {
    CubeOptions o;
    o.P.N = N;
    o.P.t1 = t1;
    o.P.t2 = t2;
    o.unframed = unframed;
    return o;
}

std::vector<int> ranks_by_t(const RComplex& K) {
    std::vector<int> r;
    for (int t = K.tmin(); t <= K.tmax(); ++t) r.push_back(static_cast<int>(K.gens_in(t).size()));
    return r;
}

bool same_generators(const RComplex& a, const RComplex& b) {
    if (a.size() != b.size()) return false;
    for (int g = 0; g < a.size(); ++g)
        if (a.gens[g].t != b.gens[g].t || a.gens[g].q != b.gens[g].q || a.gens[g].h != b.gens[g].h) return false;
    return true;
}

}  // namespace

TEST_CASE("PD orientation and crossing signs") {
    auto T = LinkDiagram::from_pd(kTrefoilAtlas);
    CHECK(T.num_components() == 1);
    CHECK(T.num_labels() == 6);
    // Under-strands run i -> k, so this standard trefoil code is left-handed.
    CHECK(T.writhe() == -3);
    CHECK(T.self_writhe() == std::vector<int>{-3});
    for (int l = 0; l < 6; ++l) CHECK(T.successor(l) == (l + 1) % 6);

    auto F = LinkDiagram::from_pd(kFigureEight);
    CHECK(F.writhe() == 0);

    auto H = LinkDiagram::from_pd({{1, 3, 2, 4}, {3, 1, 4, 2}});
    CHECK(H.num_components() == 2);
    CHECK(H.self_writhe() == std::vector<int>{0, 0});
    CHECK(H.sign(0) == H.sign(1));
}

TEST_CASE("braid closures") {
    auto T = LinkDiagram::from_braid({1, 1, 1}, 2);
    CHECK(T.num_components() == 1);
    CHECK(T.writhe() == 3);
    auto H = LinkDiagram::from_braid({1, 1}, 2);
    CHECK(H.num_components() == 2);
    CHECK(H.writhe() == 2);
    auto U = LinkDiagram::from_braid({}, 3);
    CHECK(U.num_crossings() == 0);
    CHECK(U.free_loops() == 3);
    CHECK(U.num_components() == 3);
    CHECK(U.base_point(2) == 2);
    // sigma_1 sigma_1^{-1}: the first strand passes over twice
    auto R2 = LinkDiagram::from_braid({1, -1}, 2);
    CHECK(R2.num_components() == 2);
    CHECK(R2.writhe() == 0);
    auto W = LinkDiagram::from_braid({1, -2, 1, -2}, 3);
    CHECK(W.num_components() == 1);
    CHECK(W.writhe() == 0);
}

TEST_CASE("mirror flips every crossing") {
    for (const auto& D : {LinkDiagram::from_pd(kTrefoilAtlas), LinkDiagram::from_pd(kFigureEight),
                          LinkDiagram::from_braid({1, 1, 2, -1}, 3)}) {
        auto M = D.mirror();
        REQUIRE(M.num_crossings() == D.num_crossings());
        for (int c = 0; c < D.num_crossings(); ++c) CHECK(M.sign(c) == -D.sign(c));
        CHECK(M.num_components() == D.num_components());
        auto MM = M.mirror();
        for (int c = 0; c < D.num_crossings(); ++c) CHECK(MM.sign(c) == D.sign(c));
    }
}

TEST_CASE("invalid PD codes are rejected") {
    CHECK_THROWS_AS(LinkDiagram::from_pd({{1, 2, 3, 4}}), DiagramError);
    CHECK_THROWS_AS(LinkDiagram::from_pd({{1, 1, 1, 2}, {2, 3, 3, 4}}), DiagramError);
    CHECK_THROWS_AS(LinkDiagram::from_pd({{1, 2, 3, 4}, {2, 3, 4, 1}}), DiagramError);
    CHECK_THROWS_AS(LinkDiagram::from_braid({2}, 2), DiagramError);
    CHECK_THROWS_AS(LinkDiagram::from_braid({0}, 2), DiagramError);
}

TEST_CASE("unknot cube is the circle state space") {
    for (int N : {2, 3, 4}) {
        Cube C = build_cube(LinkDiagram::from_braid({}, 1), options(N));
        REQUIRE(C.spaces.size() == 1);
        CHECK(C.complex.size() == N);
        CHECK(C.complex.d.is_zero());
        for (int j = 0; j < N; ++j) {
            CHECK(C.complex.gens[j].t == 0);
            CHECK(C.complex.gens[j].q == 2 * j - (N - 1));
            CHECK(C.complex.gens[j].h == -C.complex.gens[j].q);
        }
        CHECK(C.complex.check_equivariance().empty());
    }
}

TEST_CASE("Hopf link cube") {
    Cube C = build_cube(LinkDiagram::from_braid({1, 1}, 2), options(2));
    CHECK(C.spaces.size() == 4);
    CHECK(C.complex.tmin() == 0);
    CHECK(C.complex.tmax() == 2);
    CHECK(C.complex.d_squared_zero());
    CHECK(C.sign_fixes == 0);
    CHECK(C.complex.check_equivariance().empty());
    // The linking crossings stay in the h constant: h = -q - 2.
    for (const auto& g : C.complex.gens) CHECK(g.h == -g.q - 2);
    auto red = simplify(C.complex);
    CHECK(ranks_by_t(red.small) == std::vector<int>{2, 0, 2});
}

TEST_CASE("cubes square to zero and are equivariant") {
    std::vector<LinkDiagram> ds = {LinkDiagram::from_pd(kTrefoilAtlas), LinkDiagram::from_braid({1, 1, 1}, 2),
                                   LinkDiagram::from_braid({1, 1}, 2), LinkDiagram::from_braid({1, -1}, 2),
                                   LinkDiagram::from_pd(kFigureEight)};
    for (const auto& D : ds)
        for (auto [t1, t2] : std::vector<std::pair<mpq_class, mpq_class>>{{mpq_class(1, 2), mpq_class(1, 2)},
                                                                        {mpq_class(1, 3), mpq_class(2, 5)},
                                                                        {mpq_class(0), mpq_class(1)}}) {
            Cube C = build_cube(D, options(2, t1, t2));
            CHECK(C.complex.d_squared_zero());
            CHECK(C.complex.check_equivariance().empty());
        }
    // ladders at N = 3 and 4, and F_3
    for (int N : {3, 4}) {
        Cube C = build_cube(LinkDiagram::from_braid({1, 1, 1}, 2), options(N, mpq_class(1, 3), mpq_class(3, 4)));
        CHECK(C.complex.d_squared_zero());
        CHECK(C.complex.check_equivariance().empty());
    }
    CubeOptions o = options(2);
    o.P.F = Field::prime(3);
    Cube C = build_cube(LinkDiagram::from_braid({1, 1}, 2), o);
    CHECK(C.complex.check_equivariance().empty());
}

TEST_CASE("omitting a dumbbell's green dots breaks equivariance") {
    for (int N : {2, 3}) {
        CubeOptions o = options(N);
        o.omit_dots_at = 1;
        Cube C = build_cube(LinkDiagram::from_braid({1, 1}, 2), o);
        CHECK(C.complex.d_squared_zero());
        std::string err = C.complex.check_equivariance();
        CHECK(err.find("f does not commute") != std::string::npos);
    }
}

TEST_CASE("h acts by -q plus a vertex-independent constant") {
    // framed: the constant is minus the writhe
    Cube A = build_cube(LinkDiagram::from_braid({1, 1, -2, 1}, 3), options(2, mpq_class(1, 4), mpq_class(1, 2), false));
    for (const auto& g : A.complex.gens) CHECK(g.h == -g.q - 2);
    Cube B = build_cube(LinkDiagram::from_braid({1, 1, -1, 1}, 2), options(3, mpq_class(1, 4), mpq_class(1, 2), false));
    for (const auto& g : B.complex.gens) CHECK(g.h == -g.q - 2);
}

TEST_CASE("framing twist") {
    CHECK(framing_dots(3, 0, 0).empty());
    // At N = 2 the twist is a floating E1/2 per unit framing with h = -1.
    auto d = framing_dots(2, 1, 0);
    mpq_class h = 0;
    for (const auto& g : d) h -= g.host < 0 ? 2 * g.mult : g.mult;
    CHECK(h == -1);
    // Explicit framing 0 leaves the framed cube unchanged.
    auto D = LinkDiagram::from_braid({1}, 2);
    CubeOptions o = options(2);
    o.framing = {0};
    Cube A = build_cube(D, o);
    Cube B = build_cube(D, options(2, mpq_class(1, 2), mpq_class(1, 2), false));
    CHECK(same_generators(A.complex, B.complex));
    CHECK(A.complex.f == B.complex.f);
    o.framing = {0, 1};
    CHECK_THROWS_AS(build_cube(D, o), CubeError);
}

TEST_CASE("unframed curls reduce to the unknot with its sl2 action") {
    for (int N : {2, 3, 4}) {
        Cube U = build_cube(LinkDiagram::from_braid({}, 1), options(N));
        for (int s : {1, -1}) {
            Cube C = build_cube(LinkDiagram::from_braid({s}, 2), options(N));
            auto red = simplify(C.complex);
            INFO("N = " << N << " sign " << s);
            CHECK(same_generators(red.small, U.complex));
            CHECK(red.small.d.is_zero());
            CHECK(red.small.e == U.complex.e);
            CHECK(red.small.f == U.complex.f);
        }
    }
}

TEST_CASE("Gaussian elimination records a homotopy equivalence") {
    std::vector<std::pair<LinkDiagram, int>> cases = {{LinkDiagram::from_braid({1, 1}, 2), 2},
                                                      {LinkDiagram::from_pd(kTrefoilAtlas), 2},
                                                      {LinkDiagram::from_braid({1, 1, 1}, 2), 3},
                                                      {LinkDiagram::from_braid({1, -2, 1, -2}, 3), 2}};
    for (const auto& [D, N] : cases) {
        Cube C = build_cube(D, options(N));
        const RComplex& K = C.complex;
        auto red = simplify(K, true);
        const RComplex& S = red.small;
        const int n = K.size(), m = S.size();
        CHECK(S.d_squared_zero());
        CHECK((red.proj * red.incl) == r_identity(K.R.F, N, m));
        CHECK((K.d * red.incl) == (red.incl * S.d));
        CHECK((S.d * red.proj) == (red.proj * K.d));
        RMatrix lhs = r_identity(K.R.F, N, n) + (red.incl * red.proj).scaled(-1);
        CHECK(lhs == (K.d * red.homotopy + red.homotopy * K.d));
        // no invertible scalar survives
        for (int j = 0; j < m; ++j)
            for (const auto& [i, p] : S.d.col[j]) CHECK_FALSE(p.is_constant());
        // transported e, f still commute with d
        CHECK(S.check_equivariance().empty());
        // Euler characteristic by q is preserved
        std::map<int, int> chi_big, chi_small;
        for (const auto& g : K.gens) chi_big[g.q] += g.t % 2 == 0 ? 1 : -1;
        for (const auto& g : S.gens) chi_small[g.q] += g.t % 2 == 0 ? 1 : -1;
        std::erase_if(chi_big, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(chi_small, [](const auto& kv) { return kv.second == 0; });
        CHECK(chi_big == chi_small);
    }
}

TEST_CASE("minimal complexes are left alone") {
    auto red = simplify(build_cube(LinkDiagram::from_braid({1, 1}, 2), options(2)).complex);
    auto again = simplify(red.small, true);
    CHECK(again.steps == 0);
    CHECK(same_generators(again.small, red.small));
    CHECK(again.incl == r_identity(red.small.R.F, 2, red.small.size()));
    CHECK(again.proj == r_identity(red.small.R.F, 2, red.small.size()));
}

TEST_CASE("label multiplication is a chain map") {
    auto D = LinkDiagram::from_braid({1, 1, 1}, 2);
    Cube C = build_cube(D, options(2));
    RMatrix X = label_multiplication(C, D.base_point(0));
    CHECK((C.complex.d * X) == (X * C.complex.d));
    // x^2 - E1 x + E2 = 0 on the unknot
    auto O = LinkDiagram::from_braid({}, 1);
    Cube U = build_cube(O, options(2));
    RMatrix Y = label_multiplication(U, O.base_point(0));
    RMatrix E1 = r_identity(U.complex.R.F, 2, 2), E2 = E1;
    for (auto& c : E1.col)
        for (auto& [i, p] : c) p = U.complex.R.E(1);
    for (auto& c : E2.col)
        for (auto& [i, p] : c) p = U.complex.R.E(2);
    CHECK((Y * Y + (E1 * Y).scaled(-1) + E2).is_zero());
}
