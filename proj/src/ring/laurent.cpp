#include "krsl2/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace krsl2 {

LaurentQ LaurentQ::monomial(int exp, const mpz_class& c) {
    LaurentQ r;
    r.add(exp, c);
    return r;
}

void LaurentQ::add(int e, const mpz_class& v) {
    if (v == 0) return;
    auto [it, fresh] = c_.try_emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

mpz_class LaurentQ::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? mpz_class(0) : it->second;
}

int LaurentQ::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentQ::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, v] : o.c_) add(e, v);
    return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
    LaurentQ r = *this;
    r += o;
    return r;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const { return *this + (-o); }

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
    LaurentQ r;
    for (const auto& [a, x] : c_)
        for (const auto& [b, y] : o.c_) r.add(a + b, x * y);
    return r;
}

LaurentQ LaurentQ::shifted(int k) const {
    LaurentQ r;
    for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
    return r;
}

LaurentQ LaurentQ::mirrored() const {
    LaurentQ r;
    for (const auto& [e, v] : c_) r.c_.emplace(-e, v);
    return r;
}

LaurentQ LaurentQ::exact_div(const LaurentQ& d) const {
    if (d.is_zero()) throw std::domain_error("LaurentQ: division by zero");
    LaurentQ rem = *this, quo;
    int dtop = d.max_exp();
    mpz_class lead = d.coeff(dtop);
    while (!rem.is_zero()) {
        int top = rem.max_exp();
        mpz_class c = rem.coeff(top);
        if (top - dtop < rem.min_exp() - d.min_exp() || c % lead != 0)
            throw std::domain_error("LaurentQ: inexact division");
        mpz_class k = c / lead;
        LaurentQ step = monomial(top - dtop, k);
        quo += step;
        rem = rem - step * d;
    }
    return quo;
}

std::string LaurentQ::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpz_class v = it->second;
        bool neg = v < 0;
        if (neg) v = -v;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (it->first == 0) {
            os << v.get_str();
            continue;
        }
        if (v != 1) os << v.get_str() << "*";
        os << "q";
        if (it->first != 1) os << "^" << it->first;
    }
    return os.str();
}

std::vector<std::string> LaurentQ::coefficient_array() const {
    std::vector<std::string> out;
    if (c_.empty()) return out;
    out.push_back(std::to_string(min_exp()));
    for (int e = min_exp(); e <= max_exp(); ++e) out.push_back(coeff(e).get_str());
    return out;
}

LaurentQ quantum_int(int n) {
    // (q^n - q^{-n}) / (q - q^{-1}) = sign(n) * sum of q^{|n|-1-2i}
    LaurentQ r;
    int m = n < 0 ? -n : n;
    for (int i = 0; i < m; ++i) r += LaurentQ::monomial(m - 1 - 2 * i, n < 0 ? -1 : 1);
    return r;
}

LaurentQ quantum_factorial(int n) {
    LaurentQ r = LaurentQ::one();
    for (int i = 2; i <= n; ++i) r = r * quantum_int(i);
    return r;
}

LaurentQ qbinom(int m, int a) {
    if (a < 0) throw std::invalid_argument("qbinom: negative lower index");
    LaurentQ num = LaurentQ::one(), den = LaurentQ::one();
    for (int i = 1; i <= a; ++i) {
        num = num * quantum_int(m + 1 - i);
        den = den * quantum_int(i);
    }
    return num.exact_div(den);
}

}  // namespace krsl2
