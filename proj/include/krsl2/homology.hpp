#pragma once

#include "krsl2/complex.hpp"
#include "krsl2/laurent.hpp"
#include "krsl2/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace krsl2 {

// Range of q-degrees in which chain groups are materialized.
struct Window {
    int qmin = 0, qmax = 0;
    bool contains(int q) const { return qmin <= q && q <= qmax; }
    bool empty() const { return qmin > qmax; }
    bool operator==(const Window&) const = default;
};

// From two below the lowest generator degree to 24 above the highest.
Window default_window(const RComplex& C);
// Degrees whose answers do not depend on the truncation: operators of
// degree up to 2N (E_N, and f followed by e) stay inside the window.
Window certified_window(const Window& w, int N);

class HomologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Order in which chain basis vectors are offered as cycle candidates; the
// two orders pick different representatives.
enum class PivotOrder { forward, reverse };

// Homology of a free complex over R, truncated to a window, one k-vector
// space per bidegree (t, q) with chosen cycle representatives.
class HomologyModule {
public:
    HomologyModule(const RComplex& C, Window w, PivotOrder order = PivotOrder::forward);

    const RComplex& complex() const { return *C_; }
    const Window& window() const { return w_; }
    const Window& certified() const { return cert_; }
    int N() const { return C_->R.N; }
    const Field& field() const { return C_->R.F; }

    // Homological degrees with generators, ascending.
    std::vector<int> degrees() const;
    int dim(int t, int q) const;
    // Nonzero dimensions on the certified window.
    std::map<std::pair<int, int>, int> dims() const;
    // sum (-1)^t dim q^q over the certified window.
    LaurentQ euler_characteristic() const;

    const GradedPiece& chains(int t, int q) const;
    // Representatives of the basis classes, in chain coordinates.
    const std::vector<KVec>& representatives(int t, int q) const;
    // Coordinates of the class of a cycle; throws if it is not a cycle.
    KVec class_of(int t, int q, const KVec& cycle) const;

    // Scalar by which h acts on H_{t,q}; throws if h is not scalar there.
    mpq_class h_scalar(int t, int q) const;
    // Matrix of e (q -> q-2) or f (q -> q+2) on homology; h is diagonal.
    KMatrix op(Sl2Gen g, int t, int q) const;
    // Multiplication by E_k: H_{t,q} -> H_{t,q+2k}.
    KMatrix multiply_E(int k, int t, int q) const;
    // Map induced by an R-linear chain map of q-degree `degree` preserving t.
    KMatrix induced(const RMatrix& M, int degree, int t, int q) const;

private:
    struct Piece;
    const Piece* find(int t, int q) const;
    const Piece& piece(int t, int q) const;
    KMatrix image_matrix(const std::vector<RCol>& images, int t, int q) const;

    std::shared_ptr<const RComplex> C_;
    Window w_, cert_;
    std::map<std::pair<int, int>, std::shared_ptr<Piece>> pieces_;
    mutable std::map<std::tuple<int, int, int>, KMatrix> op_cache_;
};

// Weight data of one homological degree: weights are the h scalars.
enum class ConstituentKind { verma, dual_verma, projective, simple_finite, unresolved };

const char* constituent_name(ConstituentKind k);

struct Constituent {
    ConstituentKind kind;
    int t;
    int weight;          // M(weight), M*(weight), P(weight), L(weight)
    int multiplicity;
    bool certified;      // distinguishing weights lie in the certified window
    bool continues;      // infinite; the pattern continues below the window
};

struct Sl2ModuleReport {
    // (t, weight) -> dimension, on the certified window
    std::map<std::pair<int, int>, int> weights;
    // (t, weight) -> dim ker e
    std::map<std::pair<int, int>, int> highest_weight;
    std::vector<Constituent> constituents;
    // Multiplicities of L(weight) in the locally finite sub and quotient.
    std::vector<Constituent> gamma_part, z_part;
    std::string error;  // nonempty when the data is inconsistent
};

Sl2ModuleReport weight_table(const HomologyModule& H);
// Adds the constituent analysis (characteristic zero only).
Sl2ModuleReport decompose(const HomologyModule& H);

}  // namespace krsl2
