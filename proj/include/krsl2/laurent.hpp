#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace krsl2 {

// Integer Laurent polynomial in q.
class LaurentQ {
public:
    LaurentQ() = default;
    static LaurentQ monomial(int exp, const mpz_class& c = 1);
    static LaurentQ one() { return monomial(0); }

    const std::map<int, mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int exp) const;
    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;

    LaurentQ operator+(const LaurentQ& o) const;
    LaurentQ operator-(const LaurentQ& o) const;
    LaurentQ operator*(const LaurentQ& o) const;
    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ shifted(int k) const;  // multiply by q^k
    LaurentQ mirrored() const;      // q -> q^{-1}

    // Exact division; throws std::domain_error on a nonzero remainder.
    LaurentQ exact_div(const LaurentQ& d) const;

    bool operator==(const LaurentQ& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentQ& o) const { return c_ != o.c_; }

    std::string str() const;
    // [min_exp, coefficients...] with integer entries.
    std::vector<std::string> coefficient_array() const;

private:
    void add(int e, const mpz_class& v);
    std::map<int, mpz_class> c_;
};

LaurentQ quantum_int(int n);
LaurentQ quantum_factorial(int n);
LaurentQ qbinom(int m, int a);

}  // namespace krsl2
