#include <doctest.h>

#include "krsl2/foam.hpp"

#include <random>

using namespace krsl2;

namespace {

const Field Q = Field::rationals();

BasicFoam slice(FoamKind k, int a, int b = 1) { return BasicFoam::local(k, a, b, {0, 1}); }

FoamWord word(std::initializer_list<BasicFoam> s) { return FoamWord{std::vector<BasicFoam>(s)}; }

// Degree of a closed foam from its cell data: facets (thickness, Euler
// characteristic, decoration degree), interval bindings (a, b) and
// singular vertices (a, b, c).
struct ClosedFoam {
    std::vector<std::tuple<int, int, int>> facets;
    std::vector<std::pair<int, int>> bindings;
    std::vector<std::tuple<int, int, int>> vertices;
    int degree(int N) const {
        int d = 0;
        for (auto [l, chi, p] : facets) d += p - l * (N - l) * chi;
        for (auto [a, b] : bindings) d += binding_degree(a, b, N);
        for (auto [a, b, c] : vertices) d -= singular_vertex_degree(a, b, c, N);
        return d;
    }
};

}  // namespace

TEST_CASE("basic foam degree table") {
    for (int N : {2, 3, 5})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                CHECK(basic_degree(slice(FoamKind::assoc, a, b), N) == 0);
                CHECK(basic_degree(slice(FoamKind::coassoc, a, b), N) == 0);
                CHECK(basic_degree(slice(FoamKind::isotopy, a, b), N) == 0);
                CHECK(basic_degree(slice(FoamKind::digon_cup, a, b), N) == -a * b);
                CHECK(basic_degree(slice(FoamKind::digon_cap, a, b), N) == -a * b);
                CHECK(basic_degree(slice(FoamKind::zip, a, b), N) == a * b);
                CHECK(basic_degree(slice(FoamKind::unzip, a, b), N) == a * b);
                CHECK(basic_degree(slice(FoamKind::cup, a, b), N) == -a * (N - a));
                CHECK(basic_degree(slice(FoamKind::cap, a, b), N) == -a * (N - a));
                CHECK(basic_degree(slice(FoamKind::saddle, a, b), N) == a * (N - a));
                auto deco = BasicFoam::decorate(Decoration{0, SymFunc::elementary(Q, a, a), false});
                CHECK(basic_degree(deco, N) == 2 * a);
            }
}

TEST_CASE("foam degrees agree with the cell formula on closed foams") {
    for (int N : {2, 3, 5})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) {
                if (a + b > N) continue;
                // sphere of thickness a
                FoamWord sphere = word({slice(FoamKind::cup, a), slice(FoamKind::cap, a)});
                CHECK(foam_degree(sphere, N) == ClosedFoam{{{a, 2, 0}}, {}, {}}.degree(N));
                // torus: cup, two saddles, cap
                FoamWord torus = word({slice(FoamKind::cup, a), slice(FoamKind::saddle, a), slice(FoamKind::saddle, a),
                                       slice(FoamKind::cap, a)});
                CHECK(foam_degree(torus, N) == ClosedFoam{{{a, 0, 0}}, {}, {}}.degree(N));
                // theta foam: three disks on a circular binding
                FoamWord theta = word({slice(FoamKind::cup, a + b), slice(FoamKind::digon_cup, a, b),
                                       slice(FoamKind::digon_cap, a, b), slice(FoamKind::cap, a + b)});
                CHECK(foam_degree(theta, N) == ClosedFoam{{{a, 1, 0}, {b, 1, 0}, {a + b, 1, 0}}, {}, {}}.degree(N));
                // two spheres touching along a thick disk
                FoamWord kiss = word({slice(FoamKind::cup, a), slice(FoamKind::cup, b), slice(FoamKind::zip, a, b),
                                      slice(FoamKind::unzip, a, b), slice(FoamKind::cap, a), slice(FoamKind::cap, b)});
                CHECK(foam_degree(kiss, N) == ClosedFoam{{{a, 1, 0}, {b, 1, 0}, {a + b, 1, 0}}, {}, {}}.degree(N));
                // a digon opened on an a+b strand contributes one interval binding
                ClosedFoam open{{{a, 1, 0}, {b, 1, 0}}, {{a, b}}, {}};
                CHECK(basic_degree(slice(FoamKind::digon_cup, a, b), N) == open.degree(N));
            }
    CHECK(foam_degree(FoamWord{}, 2) == 0);
    auto x = BasicFoam::decorate(Decoration{0, SymFunc::elementary(Q, 1, 1), false});
    CHECK(foam_degree(word({slice(FoamKind::cup, 1), x}), 2) == 1);
}

TEST_CASE("singular vertex and binding terms") {
    CHECK(singular_vertex_degree(1, 1, 1, 3) == 3);
    CHECK(singular_vertex_degree(1, 1, 1, 5) == 9);
    CHECK(binding_degree(1, 1, 2) == 1);
    for (int N = 3; N <= 6; ++N)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int c = 1; c <= 2; ++c) {
                    CHECK(singular_vertex_degree(a, b, c, N) == singular_vertex_degree(c, a, b, N));
                    CHECK(singular_vertex_degree(a, b, c, N) == singular_vertex_degree(b, a, c, N));
                }
}

TEST_CASE("inhomogeneous decoration is rejected") {
    SymFunc mixed = SymFunc::elementary(Q, 2, 1) + SymFunc::elementary(Q, 2, 2);
    CHECK_THROWS(foam_degree(word({BasicFoam::decorate(Decoration{0, mixed, false})}), 2));
}

TEST_CASE("sl2 on basic foams: examples") {
    Sl2Params P{Q};
    auto zip = slice(FoamKind::zip, 1, 1);
    FoamLinComb hz = sl2_on_basic(Sl2Gen::h, zip, P);
    REQUIRE(hz.terms().size() == 1);
    CHECK(hz.terms()[0].first == -1);
    CHECK(hz.terms()[0].second == word({zip}));
    CHECK(sl2_on_basic(Sl2Gen::e, slice(FoamKind::saddle, 1), P).is_zero());

    // f(cup) = -1/2 (p1 + complementary p1) after the cup
    FoamLinComb fc = sl2_on_basic(Sl2Gen::f, slice(FoamKind::cup, 1), P);
    REQUIRE(fc.terms().size() == 2);
    for (const auto& [c, w] : fc.terms()) {
        CHECK(c == mpq_class(-1, 2));
        REQUIRE(w.slices.size() == 2);
        CHECK(w.slices[0].kind == FoamKind::cup);
        CHECK(w.slices[1].deco->sym.poly() == SymFunc::elementary(Q, 1, 1).poly());
    }
    CHECK(fc.terms()[0].second.slices[1].deco->complement != fc.terms()[1].second.slices[1].deco->complement);

    // e on a decoration differentiates: e(e_1) = -a
    auto d = BasicFoam::decorate(Decoration{0, SymFunc::elementary(Q, 2, 1), false});
    FoamLinComb ed = sl2_on_basic(Sl2Gen::e, d, P);
    REQUIRE(ed.terms().size() == 1);
    CHECK(ed.terms()[0].second.slices[0].deco->sym.poly().constant_term() * ed.terms()[0].first == -2);
}

TEST_CASE("h acts by minus the degree when t1 + t2 = 1") {
    std::mt19937 rng(3);
    std::vector<FoamKind> kinds{FoamKind::assoc, FoamKind::coassoc,   FoamKind::digon_cup, FoamKind::digon_cap,
                                FoamKind::zip,   FoamKind::unzip,     FoamKind::cup,       FoamKind::cap,
                                FoamKind::saddle, FoamKind::isotopy, FoamKind::decoration};
    for (int trial = 0; trial < 40; ++trial) {
        Sl2Params P{Q};
        P.N = 2 + trial % 4;
        P.t1 = mpq_class(trial % 5, 4);
        P.t2 = 1 - P.t1;
        FoamWord F;
        for (int k = 0; k < 4; ++k) {
            FoamKind kind = kinds[rng() % kinds.size()];
            int a = 1 + static_cast<int>(rng() % 2), b = 1;
            if (kind == FoamKind::decoration)
                F.slices.push_back(BasicFoam::decorate(Decoration{0, SymFunc::elementary(Q, a, a), false}));
            else
                F.slices.push_back(slice(kind, a, b));
        }
        FoamLinComb hF = sl2_on_word(Sl2Gen::h, F, P);
        int deg = foam_degree(F, P.N);
        if (deg == 0) {
            CHECK(hF.is_zero());
        } else {
            REQUIRE(hF.terms().size() == 1);
            CHECK(hF.terms()[0].first == -deg);
        }
    }
}

TEST_CASE("twists from green dots") {
    Sl2Params P{Q};
    std::vector<int> thin{1};
    mpq_class lam(3, 7);
    CHECK(twist_word(Sl2Gen::e, {GreenDot{0, DotType::hollow, lam}}, thin, P).is_zero());
    FoamLinComb h = twist_word(Sl2Gen::h, {GreenDot{0, DotType::hollow, lam}}, thin, P);
    REQUIRE(h.terms().size() == 1);
    CHECK(h.terms()[0].first == -lam);
    CHECK(h.terms()[0].second.slices.empty());

    // floating solid dot: h by -N, f by E_1
    P.N = 3;
    FoamLinComb hf = twist_word(Sl2Gen::h, {GreenDot{-1, DotType::solid, lam}}, thin, P);
    CHECK(hf.terms()[0].first == -3 * lam);
    FoamLinComb ff = twist_word(Sl2Gen::f, {GreenDot{-1, DotType::solid, lam}}, thin, P);
    REQUIRE(ff.terms().size() == 1);
    CHECK(ff.terms()[0].second.slices[0].deco->sym.alphabet() == 3);

    // hollow and solid of equal weight give p_1 of both alphabets
    P.N = 2;
    FoamLinComb both = twist_word(Sl2Gen::f, {GreenDot{0, DotType::hollow, lam}, GreenDot{0, DotType::solid, lam}}, thin, P);
    REQUIRE(both.terms().size() == 2);
    CHECK(both.terms()[0].second.slices[0].deco->complement != both.terms()[1].second.slices[0].deco->complement);

    // star action on an identity with any dots: e vanishes
    std::vector<GreenDot> dots{{0, DotType::hollow, lam}, {0, DotType::solid, 2}};
    CHECK(sl2_star(Sl2Gen::e, FoamWord{}, dots, dots, thin, thin, P).is_zero());
    // and h, f cancel between source and target twists
    CHECK(sl2_star(Sl2Gen::h, FoamWord{}, dots, dots, thin, thin, P).is_zero());
    CHECK(sl2_star(Sl2Gen::f, FoamWord{}, dots, dots, thin, thin, P).is_zero());
}

TEST_CASE("green dot normalization") {
    GreenDottedWeb g{Web::circles(2), {{1, DotType::hollow, 2}, {0, DotType::solid, 1}, {1, DotType::hollow, 3},
                                       {0, DotType::hollow, 0}}};
    GreenDottedWeb n = greendot_normalize(g);
    REQUIRE(n.dots.size() == 2);
    CHECK(n.dots[0] == GreenDot{0, DotType::solid, 1});
    CHECK(n.dots[1] == GreenDot{1, DotType::hollow, 5});
    CHECK(greendot_normalize(n).dots == n.dots);
    CHECK(greendot_normalize(GreenDottedWeb{Web::circles(1), {}}).dots.empty());
}

TEST_CASE("webs from resolutions") {
    // a curl: the left strand leaves at the top and returns at the bottom
    std::vector<CrossingEdges> x{{0, 1, 0, 1}};
    Web par = Web::from_resolution(2, x, {false}, 0);
    CHECK(par.num_circles() == 2);
    Web dumb = Web::from_resolution(2, x, {true}, 0);
    CHECK(dumb.num_circles() == 0);
    CHECK(dumb.flow_ok());
    CHECK(dumb.dumbbells().size() == 1);
    CHECK(Web::circles(3).num_circles() == 3);
}
