#include "krsl2/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace krsl2 {

int total_degree(const Exps& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrLex::operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(Field F, int nvars, const mpq_class& c) {
    Poly p(F, nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

Poly Poly::variable(Field F, int nvars, int i) {
    Poly p(F, nvars);
    Exps e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(Field F, const Exps& e, const mpq_class& c) {
    Poly p(F, static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

mpq_class Poly::constant_term() const { return coeff(Exps(n_, 0)); }

mpq_class Poly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::qdeg() const { return terms_.empty() ? -1 : 2 * total_degree(terms_.rbegin()->first); }

int Poly::min_qdeg() const { return terms_.empty() ? -1 : 2 * total_degree(terms_.begin()->first); }

bool Poly::homogeneous() const { return qdeg() == min_qdeg(); }

int weighted_degree(const Exps& e, const std::vector<int>& w) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (i < w.size() ? w[i] : 1);
    return d;
}

int Poly::qdeg(const std::vector<int>& w) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, 2 * weighted_degree(e, w));
    return best;
}

int Poly::min_qdeg(const std::vector<int>& w) const {
    if (terms_.empty()) return -1;
    int best = 2 * weighted_degree(terms_.begin()->first, w);
    for (const auto& [e, c] : terms_) best = std::min(best, 2 * weighted_degree(e, w));
    return best;
}

Poly Poly::homogeneous_part(int q) const {
    Poly r(F_, n_);
    for (const auto& [e, c] : terms_)
        if (2 * total_degree(e) == q) r.terms_.emplace(e, c);
    return r;
}

void Poly::add_term(const Exps& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("Poly: exponent length mismatch");
    mpq_class v = F_.reduce(c);
    if (v == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, v);
    if (!fresh) {
        it->second = F_.add(it->second, v);
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (n_ != o.n_ || F_ != o.F_) throw std::invalid_argument("Poly: incompatible operands");
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const mpq_class& c) const {
    Poly r(F_, n_);
    mpq_class k = F_.reduce(c);
    if (k == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, F_.mul(v, k));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(F_, n_);
    Exps e(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (int i = 0; i < n_; ++i) e[i] = static_cast<std::uint16_t>(a[i] + b[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(F_, n_, 1), b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

Poly Poly::derivative(int i) const {
    Poly r(F_, n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("substitute: arity mismatch");
    if (n_ == 0) return *this;
    const Field& G = images[0].field();
    int m = images[0].nvars();
    std::vector<std::vector<Poly>> powers(n_);
    Poly r(G, m);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(G, m, c);
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(G, m, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            t = t * pw[e[i]];
        }
        r += t;
    }
    return r;
}

Poly Poly::specialize(const std::vector<bool>& mask, const std::vector<mpq_class>& value) const {
    Poly r(F_, n_);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        mpq_class k = c;
        for (int i = 0; i < n_; ++i) {
            if (!mask[i] || f[i] == 0) continue;
            mpq_class v = value[i];
            mpq_class acc = 1;
            for (int j = 0; j < f[i]; ++j) acc *= v;
            k *= acc;
            f[i] = 0;
        }
        r.add_term(f, k);
    }
    return r;
}

Poly Poly::extended(int nvars) const {
    if (nvars < n_) throw std::invalid_argument("extended: cannot shrink");
    Poly r(F_, nvars);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        f.resize(nvars, 0);
        r.terms_.emplace(f, c);
    }
    return r;
}

Poly Poly::over(const Field& F) const {
    Poly r(F, n_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

std::vector<std::string> default_names(int nvars, const std::string& stem) {
    std::vector<std::string> v;
    for (int i = 0; i < nvars; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class k = c;
        bool neg = k < 0;
        if (neg) k = -k;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = total_degree(e) > 0;
        if (k != 1 || !unit) os << k.get_str();
        bool need_star = k != 1 || !unit;
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::string Poly::str() const { return str(default_names(n_)); }

}  // namespace krsl2
