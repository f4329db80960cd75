#pragma once

#include "krsl2/poly.hpp"

namespace krsl2 {

enum class SymBasis { e, h, p };

// Symmetric function in an alphabet of declared size a, stored as a
// polynomial in the generators b_1..b_a of one basis (b = e, h or p).
class SymFunc {
public:
    SymFunc() = default;
    SymFunc(Field F, int alphabet, SymBasis basis);

    static SymFunc zero(Field F, int a, SymBasis b = SymBasis::e) { return SymFunc(F, a, b); }
    static SymFunc constant(Field F, int a, const mpq_class& c, SymBasis b = SymBasis::e);
    // e_i, h_i, p_i for any i >= 0; indices above a are rewritten in the e basis.
    static SymFunc elementary(Field F, int a, int i);
    static SymFunc complete(Field F, int a, int i);
    static SymFunc power_sum(Field F, int a, int i);
    // Wrap a polynomial in the generators b_1..b_a of `basis`.
    static SymFunc from_poly(int a, SymBasis basis, Poly p) { return SymFunc(a, basis, std::move(p)); }

    int alphabet() const { return a_; }
    SymBasis basis() const { return basis_; }
    const Poly& poly() const { return poly_; }
    const Field& field() const { return poly_.field(); }
    // b_i has q-degree 2i in every basis.
    int qdeg() const { return poly_.qdeg(weights()); }
    bool homogeneous() const { return poly_.homogeneous(weights()); }
    std::vector<int> weights() const;
    bool is_zero() const { return poly_.is_zero(); }

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scaled(const mpq_class& c) const;

    // Expand as a polynomial in explicit variables x_1..x_a.
    Poly expand() const;
    bool operator==(const SymFunc& o) const;

    std::string str() const;

private:
    SymFunc(int a, SymBasis b, Poly p) : a_(a), basis_(b), poly_(std::move(p)) {}
    friend SymFunc newton_convert(const SymFunc& f, SymBasis target);
    int a_ = 0;
    SymBasis basis_ = SymBasis::e;
    Poly poly_;
};

// Re-express f in the target basis. Throws FieldError when the conversion
// needs a denominator divisible by the characteristic.
SymFunc newton_convert(const SymFunc& f, SymBasis target);

// The elementary symmetric polynomial e_i in explicit variables x_1..x_a.
Poly elementary_in_vars(Field F, int a, int i);

}  // namespace krsl2
