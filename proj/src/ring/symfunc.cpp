#include "krsl2/symfunc.hpp"

#include <stdexcept>

namespace krsl2 {

namespace {

const Field kQ = Field::rationals();

// e_k (k <= a) expressed in generators of `basis`, over Q.
// Index 0 of each table is the constant 1.
std::vector<Poly> e_in(int a, SymBasis basis) {
    std::vector<Poly> e;
    e.push_back(Poly::constant(kQ, a, 1));
    if (basis == SymBasis::e) {
        for (int k = 1; k <= a; ++k) e.push_back(Poly::variable(kQ, a, k - 1));
    } else if (basis == SymBasis::h) {
        // sum_{i=0}^k (-1)^i e_i h_{k-i} = 0
        for (int k = 1; k <= a; ++k) {
            Poly s(kQ, a);
            for (int i = 1; i <= k; ++i) {
                Poly term = Poly::variable(kQ, a, i - 1) * e[k - i];
                if (i % 2) s += term;
                else s -= term;
            }
            e.push_back(s);
        }
    } else {
        // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
        for (int k = 1; k <= a; ++k) {
            Poly s(kQ, a);
            for (int i = 1; i <= k; ++i) {
                Poly term = e[k - i] * Poly::variable(kQ, a, i - 1);
                if (i % 2) s += term;
                else s -= term;
            }
            e.push_back(s.scaled(mpq_class(1, k)));
        }
    }
    return e;
}

// Generators of `basis` (indices 1..kmax) expressed in the e basis, over Q,
// with e_i = 0 for i > a.
std::vector<Poly> gens_in_e(int a, SymBasis basis, int kmax) {
    auto E = [&](int i) {
        if (i == 0) return Poly::constant(kQ, a, 1);
        if (i > a) return Poly(kQ, a);
        return Poly::variable(kQ, a, i - 1);
    };
    std::vector<Poly> g;
    g.push_back(Poly::constant(kQ, a, 1));
    for (int k = 1; k <= kmax; ++k) {
        if (basis == SymBasis::e) {
            g.push_back(E(k));
        } else if (basis == SymBasis::h) {
            Poly s(kQ, a);
            for (int i = 1; i <= k; ++i) {
                Poly term = E(i) * g[k - i];
                if (i % 2) s += term;
                else s -= term;
            }
            g.push_back(s);
        } else {
            // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
            Poly s(kQ, a);
            for (int i = 1; i < k; ++i) {
                Poly term = E(i) * g[k - i];
                if (i % 2) s += term;
                else s -= term;
            }
            Poly last = E(k).scaled(k);
            if (k % 2) s += last;
            else s -= last;
            g.push_back(s);
        }
    }
    return g;
}

Poly lift(const Poly& p) { return p.over(kQ); }

}  // namespace

SymFunc::SymFunc(Field F, int alphabet, SymBasis basis) : a_(alphabet), basis_(basis), poly_(F, alphabet) {}

SymFunc SymFunc::constant(Field F, int a, const mpq_class& c, SymBasis b) {
    return SymFunc(a, b, Poly::constant(F, a, c));
}

SymFunc SymFunc::elementary(Field F, int a, int i) {
    if (i < 0) throw std::invalid_argument("elementary: negative index");
    if (i == 0) return constant(F, a, 1);
    if (i > a) return zero(F, a);
    return SymFunc(a, SymBasis::e, Poly::variable(F, a, i - 1));
}

SymFunc SymFunc::complete(Field F, int a, int i) {
    if (i < 0) throw std::invalid_argument("complete: negative index");
    if (i == 0) return constant(F, a, 1, SymBasis::h);
    if (i <= a) return SymFunc(a, SymBasis::h, Poly::variable(F, a, i - 1));
    return SymFunc(a, SymBasis::e, gens_in_e(a, SymBasis::h, i)[i].over(F));
}

SymFunc SymFunc::power_sum(Field F, int a, int i) {
    if (i < 0) throw std::invalid_argument("power_sum: negative index");
    if (i == 0) return constant(F, a, a, SymBasis::p);
    if (i <= a) return SymFunc(a, SymBasis::p, Poly::variable(F, a, i - 1));
    return SymFunc(a, SymBasis::e, gens_in_e(a, SymBasis::p, i)[i].over(F));
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc b = newton_convert(o, basis_);
    return SymFunc(a_, basis_, poly_ + b.poly_);
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc b = newton_convert(o, basis_);
    return SymFunc(a_, basis_, poly_ - b.poly_);
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc b = newton_convert(o, basis_);
    return SymFunc(a_, basis_, poly_ * b.poly_);
}

SymFunc SymFunc::scaled(const mpq_class& c) const { return SymFunc(a_, basis_, poly_.scaled(c)); }

bool SymFunc::operator==(const SymFunc& o) const {
    if (a_ != o.a_) return false;
    return newton_convert(*this, SymBasis::e).poly_ == newton_convert(o, SymBasis::e).poly_;
}

SymFunc newton_convert(const SymFunc& f, SymBasis target) {
    if (f.basis_ == target) return f;
    int a = f.a_;
    const Field& F = f.field();
    // to the e basis
    Poly in_e = lift(f.poly_).substitute(
        [&] {
            auto g = gens_in_e(a, f.basis_, a);
            return std::vector<Poly>(g.begin() + 1, g.end());
        }());
    if (target == SymBasis::e) return SymFunc(a, target, in_e.over(F));
    auto e = e_in(a, target);
    Poly out = in_e.substitute(std::vector<Poly>(e.begin() + 1, e.end()));
    return SymFunc(a, target, out.over(F));
}

Poly elementary_in_vars(Field F, int a, int i) {
    Poly r(F, a);
    if (i < 0 || i > a) return r;
    // iterate over subsets of size i
    std::vector<int> idx(i);
    for (int k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        Exps e(a, 0);
        for (int k : idx) e[k] = 1;
        r.add_term(e, 1);
        int k = i - 1;
        while (k >= 0 && idx[k] == a - i + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

std::vector<int> SymFunc::weights() const {
    std::vector<int> w(a_);
    for (int i = 0; i < a_; ++i) w[i] = i + 1;
    return w;
}

Poly SymFunc::expand() const {
    SymFunc ef = newton_convert(*this, SymBasis::e);
    std::vector<Poly> imgs;
    for (int k = 1; k <= a_; ++k) imgs.push_back(elementary_in_vars(field(), a_, k));
    if (a_ == 0) return Poly::constant(field(), 0, ef.poly_.constant_term());
    return ef.poly_.substitute(imgs);
}

std::string SymFunc::str() const {
    const char* stem = basis_ == SymBasis::e ? "e" : basis_ == SymBasis::h ? "h" : "p";
    return poly_.str(default_names(a_, stem));
}

}  // namespace krsl2
