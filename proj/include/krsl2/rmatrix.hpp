#pragma once

#include "krsl2/linalg.hpp"
#include "krsl2/poly.hpp"
#include "krsl2/sl2poly.hpp"

#include <map>
#include <vector>

namespace krsl2 {

// Sparse column with entries in R = k[E_1..E_N] (Polys in N variables,
// variable k-1 standing for E_k of q-degree 2k).
using RCol = std::map<int, Poly>;

void rcol_add(RCol& c, int row, const Poly& p);
RCol rcol_scaled(const RCol& c, const Poly& p);
RCol rcol_combine(const RCol& a, const RCol& b);  // a + b

// Matrix over R stored by columns.
struct RMatrix {
    int rows = 0, cols = 0;
    std::vector<RCol> col;

    RMatrix() = default;
    RMatrix(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}

    const Poly* entry(int i, int j) const;
    RMatrix operator*(const RMatrix& o) const;
    RMatrix operator+(const RMatrix& o) const;
    RMatrix scaled(const mpq_class& c) const;
    bool is_zero() const;
    bool operator==(const RMatrix& o) const;
    RCol apply(const RCol& v) const;
};

RMatrix r_identity(const Field& F, int N, int n);

// The base ring with its sl2 action.
struct BaseRing {
    Field F;
    int N = 2;
    Sl2Derivation D;
    // Bit k-1 set: E_k is specialized to zero, so graded pieces are those of
    // the quotient by the killed variables.
    std::uint32_t killed = 0;

    BaseRing() = default;
    BaseRing(Field F, int N);
    BaseRing quotient(std::uint32_t mask) const;
    Poly zero() const { return Poly(F, N); }
    Poly one() const { return Poly::constant(F, N, 1); }
    Poly E(int k) const;
    std::vector<int> weights() const;
    int qdeg(const Poly& p) const { return p.qdeg(weights()); }
    // Monomials of q-degree q in the E_k, in a fixed order.
    const std::vector<Exps>& monomials(int q) const;

private:
    mutable std::map<int, std::vector<Exps>> mono_cache_;
};

// A free graded R-module with an sl2 action: h acts on gen g by
// h_const[g] minus the R-degree; e and f act by the Leibniz rule.
struct Sl2FreeModule {
    std::vector<int> q;                // generator q-degrees
    std::vector<mpq_class> h_const;    // h on the generator itself
    RMatrix e, f;                      // images of generators
};

// Leibniz extension of e or f to an R-combination of generators.
RCol act(const BaseRing& R, Sl2Gen g, const RCol& v, const RMatrix& gen_images);

// k-basis of the truncated piece of q-degree Q of a free module: pairs
// (generator, E-monomial) with deg = Q.
class GradedPiece {
public:
    GradedPiece() = default;
    GradedPiece(const BaseRing& R, const std::vector<int>& gen_q, const std::vector<int>& gens, int Q);
    int dim() const { return static_cast<int>(basis_.size()); }
    int Q() const { return Q_; }
    const Field& field() const { return F_; }
    const std::vector<std::pair<int, Exps>>& basis() const { return basis_; }
    int index(int gen, const Exps& m) const;  // -1 if absent
    // Coordinates of an R-combination restricted to this degree.
    KVec coords(const RCol& v) const;
    // R-combination of a k-vector.
    RCol lift(const KVec& x, int nvars) const;

private:
    Field F_;
    int Q_ = 0;
    std::vector<std::pair<int, Exps>> basis_;
    std::map<std::pair<int, Exps>, int> index_;
};

// k-matrix of an R-linear map between pieces; column j is the image of
// basis element j of `src`.
KMatrix materialize(const RMatrix& M, const GradedPiece& src, const GradedPiece& tgt);
// k-matrix of e or f on a free sl2 module between pieces.
KMatrix materialize_action(const BaseRing& R, Sl2Gen g, const RMatrix& gen_images, const GradedPiece& src,
                           const GradedPiece& tgt);

}  // namespace krsl2
