#pragma once

#include "krsl2/field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace krsl2 {

using Exps = std::vector<std::uint16_t>;

int total_degree(const Exps& e);
// Sum of e_i * w_i; missing weights count as 1.
int weighted_degree(const Exps& e, const std::vector<int>& w);

// Graded lexicographic order: lower total degree first, then lexicographic.
struct GrLex {
    bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse polynomial over a Field in a fixed number of variables, each of
// q-degree 2. Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exps, mpq_class, GrLex>;

    Poly() = default;
    Poly(Field F, int nvars) : F_(F), n_(nvars) {}

    static Poly constant(Field F, int nvars, const mpq_class& c);
    static Poly variable(Field F, int nvars, int i);
    static Poly monomial(Field F, const Exps& e, const mpq_class& c = 1);

    const Field& field() const { return F_; }
    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    mpq_class coeff(const Exps& e) const;

    // q-degree (2 x total exponent) of the highest term; -1 for zero.
    int qdeg() const;
    int min_qdeg() const;
    bool homogeneous() const;
    Poly homogeneous_part(int q) const;
    // The same with variable i of q-degree 2*w[i].
    int qdeg(const std::vector<int>& w) const;
    int min_qdeg(const std::vector<int>& w) const;
    bool homogeneous(const std::vector<int>& w) const { return qdeg(w) == min_qdeg(w); }

    void add_term(const Exps& e, const mpq_class& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly pow(unsigned k) const;

    Poly derivative(int i) const;
    // Replace variable i by images[i]; all images live in one common ring.
    Poly substitute(const std::vector<Poly>& images) const;
    // Evaluate variable i at value[i] when mask[i] is set, leave it otherwise.
    Poly specialize(const std::vector<bool>& mask, const std::vector<mpq_class>& value) const;
    // Same variables, embedded into a ring with more variables appended.
    Poly extended(int nvars) const;
    Poly over(const Field& F) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    void check_compatible(const Poly& o) const;
    Field F_;
    int n_ = 0;
    Terms terms_;
};

std::vector<std::string> default_names(int nvars, const std::string& stem = "x");

}  // namespace krsl2
