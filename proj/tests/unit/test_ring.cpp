#include <doctest.h>

#include "krsl2/laurent.hpp"
#include "krsl2/linalg.hpp"
#include "krsl2/sl2poly.hpp"
#include "krsl2/symfunc.hpp"

#include <functional>
#include <random>

using namespace krsl2;

namespace {

const Field Q = Field::rationals();

Poly random_poly(std::mt19937& rng, Field F, int nvars, int maxdeg, int nterms) {
    Poly p(F, nvars);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg), var(0, nvars - 1);
    for (int t = 0; t < nterms; ++t) {
        Exps e(nvars, 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) ++e[var(rng)];
        p.add_term(e, coef(rng));
    }
    return p;
}

// Gaussian binomial as a generating function of partitions fitting in an
// a x (m-a) box, symmetrised by q^{-a(m-a)}, with q^2 steps.
LaurentQ box_partitions(int m, int a) {
    int b = m - a;
    // dp over partitions with at most a parts each <= b
    std::vector<std::vector<long>> count(a + 1, std::vector<long>(a * b + 1, 0));
    std::function<void(int, int, int)> rec = [&](int parts, int maxpart, int size) {
        count[0][size] += 1;
        if (parts == a) return;
        for (int v = 1; v <= maxpart; ++v) rec(parts + 1, v, size + v);
    };
    rec(0, b, 0);
    LaurentQ r;
    for (int s = 0; s <= a * b; ++s)
        if (count[0][s]) r += LaurentQ::monomial(2 * s - a * b, count[0][s]);
    return r;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_int(2) == LaurentQ::monomial(1) + LaurentQ::monomial(-1));
    CHECK(quantum_int(0).is_zero());
    // (q^-3 - q^3)/(q - q^-1) expanded by hand-independent route: -[3]
    LaurentQ num = LaurentQ::monomial(-3) - LaurentQ::monomial(3);
    LaurentQ den = LaurentQ::monomial(1) - LaurentQ::monomial(-1);
    CHECK(quantum_int(-3) == num.exact_div(den));
    CHECK(quantum_int(-3) == -(LaurentQ::monomial(2) + LaurentQ::one() + LaurentQ::monomial(-2)));
    for (int n = -6; n <= 6; ++n) CHECK(quantum_int(n) == quantum_int(n).mirrored());
}

TEST_CASE("quantum binomials") {
    CHECK(qbinom(2, 1) == quantum_int(2));
    for (int N = 1; N <= 5; ++N) CHECK(qbinom(N, N) == LaurentQ::one());
    CHECK(qbinom(4, 2) == box_partitions(4, 2));
    for (int m = 1; m <= 7; ++m)
        for (int a = 0; a <= m; ++a) CHECK(qbinom(m, a) == box_partitions(m, a));
    CHECK_THROWS(LaurentQ::monomial(2).exact_div(quantum_int(2)));
}

TEST_CASE("fields") {
    CHECK_THROWS_AS(Field::prime(2), FieldError);
    CHECK_THROWS_AS(Field::prime(9), FieldError);
    Field F3 = Field::prime(3);
    CHECK(F3.reduce(mpq_class(1, 2)) == 2);
    CHECK(F3.reduce(-1) == 2);
    CHECK_THROWS_AS(F3.reduce(mpq_class(1, 3)), FieldError);
    CHECK(parse_rational("3/6") == mpq_class(1, 2));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("newton conversions") {
    int a = 2;
    SymFunc p1 = SymFunc::power_sum(Q, a, 1);
    CHECK(newton_convert(p1, SymBasis::e).poly() == SymFunc::elementary(Q, a, 1).poly());
    // p2 = x1^2 + x2^2 expanded directly
    Poly x1 = Poly::variable(Q, 2, 0), x2 = Poly::variable(Q, 2, 1);
    SymFunc p2e = newton_convert(SymFunc::power_sum(Q, a, 2), SymBasis::e);
    CHECK(p2e.expand() == x1 * x1 + x2 * x2);
    SymFunc e1 = SymFunc::elementary(Q, a, 1), e2 = SymFunc::elementary(Q, a, 2);
    CHECK(p2e == e1 * e1 - e2.scaled(2));
    SymFunc e2p = newton_convert(e2, SymBasis::p);
    SymFunc expect = (SymFunc::power_sum(Q, a, 1) * SymFunc::power_sum(Q, a, 1) - SymFunc::power_sum(Q, a, 2)).scaled(mpq_class(1, 2));
    CHECK(e2p.poly() == expect.poly());
    // characteristic dividing a denominator
    CHECK_THROWS_AS(newton_convert(SymFunc::elementary(Field::prime(3), 3, 3), SymBasis::p), FieldError);
    CHECK(SymFunc::elementary(Q, 2, 3).is_zero());
}

TEST_CASE("newton identities against explicit expansion") {
    std::mt19937 rng(7);
    int checks = 0;
    for (int a = 1; a <= 4; ++a) {
        for (int k = 1; k <= 6; ++k) {
            // p_k expanded equals sum x_i^k
            Poly direct(Q, a);
            for (int i = 0; i < a; ++i) direct += Poly::variable(Q, a, i).pow(k);
            CHECK(SymFunc::power_sum(Q, a, k).expand() == direct);
            // h_k expanded equals the sum of all degree-k monomials
            Poly hk(Q, a);
            std::function<void(int, int, Exps&)> rec = [&](int i, int left, Exps& e) {
                if (i == a - 1) {
                    e[i] = static_cast<std::uint16_t>(left);
                    hk.add_term(e, 1);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    e[i] = static_cast<std::uint16_t>(v);
                    rec(i + 1, left - v, e);
                }
            };
            Exps e(a, 0);
            rec(0, k, e);
            CHECK(SymFunc::complete(Q, a, k).expand() == hk);
            checks += 2;
        }
        // random round trips e -> p -> h -> e
        for (int r = 0; r < 10; ++r) {
            Poly g = random_poly(rng, Q, a, 3, 4);
            SymFunc f = SymFunc::from_poly(a, SymBasis::e, g);
            SymFunc back = newton_convert(newton_convert(newton_convert(f, SymBasis::p), SymBasis::h), SymBasis::e);
            CHECK(back.poly() == f.poly());
            CHECK(newton_convert(f, SymBasis::h).expand() == f.expand());
            ++checks;
        }
    }
    CHECK(checks >= 80);
}

TEST_CASE("sl2 on polynomials: examples") {
    int a = 2;
    Poly e1 = elementary_in_vars(Q, a, 1);
    CHECK(sl2_on_poly(Sl2Gen::h, e1) == e1.scaled(-2));
    CHECK(sl2_on_poly(Sl2Gen::e, e1) == Poly::constant(Q, a, -2));
    Poly p2 = Poly::variable(Q, a, 0).pow(2) + Poly::variable(Q, a, 1).pow(2);
    CHECK(sl2_on_poly(Sl2Gen::f, e1) == p2);
}

TEST_CASE("sl2 on polynomials: brackets and Leibniz on random input") {
    std::mt19937 rng(11);
    int checks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int a = 1 + trial % 4;
        Poly R = random_poly(rng, Q, a, 5, 5), S = random_poly(rng, Q, a, 5, 5);
        auto g = [&](Sl2Gen x, const Poly& P) { return sl2_on_poly(x, P); };
        CHECK(g(Sl2Gen::h, g(Sl2Gen::e, R)) - g(Sl2Gen::e, g(Sl2Gen::h, R)) == g(Sl2Gen::e, R).scaled(2));
        CHECK(g(Sl2Gen::h, g(Sl2Gen::f, R)) - g(Sl2Gen::f, g(Sl2Gen::h, R)) == g(Sl2Gen::f, R).scaled(-2));
        CHECK(g(Sl2Gen::e, g(Sl2Gen::f, R)) - g(Sl2Gen::f, g(Sl2Gen::e, R)) == g(Sl2Gen::h, R));
        for (Sl2Gen x : {Sl2Gen::e, Sl2Gen::f, Sl2Gen::h}) {
            CHECK(g(x, R * S) == g(x, R) * S + R * g(x, S));
        }
        checks += 6;
    }
    CHECK(checks >= 200);
}

TEST_CASE("sl2 on the ring of E-variables agrees with the hidden alphabet") {
    // E_k are elementary symmetric in N hidden variables
    for (int N = 1; N <= 4; ++N) {
        Sl2Derivation D = equivariant_derivation(Q, N, 0);
        std::vector<Poly> Ek;
        for (int k = 1; k <= N; ++k) Ek.push_back(elementary_in_vars(Q, N, k));
        for (int k = 1; k <= N; ++k) {
            Poly Evar = Poly::variable(Q, N, k - 1);
            for (Sl2Gen x : {Sl2Gen::e, Sl2Gen::f}) {
                Poly viaE = apply_sl2(x, Evar, D).substitute(Ek);
                Poly direct = sl2_on_poly(x, Ek[k - 1]);
                CHECK(viaE == direct);
            }
        }
        // symmetric functions are preserved: the image of e_k is symmetric
        for (int k = 1; k <= N; ++k) {
            Poly img = sl2_on_poly(Sl2Gen::f, Ek[k - 1]);
            for (int i = 0; i + 1 < N; ++i) {
                std::vector<Poly> swap;
                for (int j = 0; j < N; ++j) swap.push_back(Poly::variable(Q, N, j == i ? i + 1 : j == i + 1 ? i : j));
                CHECK(img.substitute(swap) == img);
            }
        }
    }
}

TEST_CASE("characteristic p: the ideal (e_1..e_a) is sl2-stable when p divides a") {
    Field F3 = Field::prime(3);
    int a = 3;
    Sl2Derivation D = equivariant_derivation(F3, a, 0);
    for (int k = 1; k <= a; ++k) {
        Poly Ek = Poly::variable(F3, a, k - 1);
        for (Sl2Gen x : {Sl2Gen::e, Sl2Gen::f}) {
            Poly img = apply_sl2(x, Ek, D);
            CHECK(img.constant_term() == 0);
        }
    }
    CHECK(apply_sl2(Sl2Gen::e, Poly::variable(F3, a, 0), D).is_zero());
}

TEST_CASE("exact linear algebra") {
    KMatrix m(Q, 3, 3);
    m.set(0, 0, 1); m.set(0, 1, 2); m.set(0, 2, 3);
    m.set(1, 0, 2); m.set(1, 1, 4); m.set(1, 2, 6);
    m.set(2, 0, 1); m.set(2, 1, 0); m.set(2, 2, 1);
    CHECK(m.rank() == 2);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(is_zero_vec(m.apply(ker[0])));
    auto x = m.solve(KVec{1, 2, 0});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == KVec{1, 2, 0});
    CHECK_FALSE(m.solve(KVec{1, 0, 0}).has_value());
    Span s(Q, 2);
    CHECK(s.insert(KVec{1, 1}));
    CHECK_FALSE(s.insert(KVec{2, 2}));
    CHECK(s.insert(KVec{0, 1}));
    auto c = s.express(KVec{3, 5});
    REQUIRE(c.has_value());
    std::vector<KVec> gens{{1, 1}, {2, 2}, {0, 1}};
    KVec rebuilt{0, 0};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 2; ++i) rebuilt[i] += (*c)[j] * gens[j][i];
    CHECK(rebuilt == KVec{3, 5});
}

TEST_CASE("h acts by minus the weighted degree on E-variables") {
    Sl2Derivation D = equivariant_derivation(Q, 3, 1);
    Poly E2 = Poly::variable(Q, 4, 1), y = Poly::variable(Q, 4, 3);
    CHECK(apply_sl2(Sl2Gen::h, E2 * y, D) == (E2 * y).scaled(-6));
    SymFunc e2 = SymFunc::elementary(Q, 3, 2);
    CHECK(e2.qdeg() == 4);
    CHECK((e2 + SymFunc::elementary(Q, 3, 1) * SymFunc::elementary(Q, 3, 1)).homogeneous());
}
