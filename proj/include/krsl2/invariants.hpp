#pragma once

#include "krsl2/homology.hpp"
#include "krsl2/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace krsl2 {

// ---- MOY polynomial ----------------------------------------------------

// Faces of the planar projection (per connected component, on the sphere).
int num_faces(const LinkDiagram& D);

// gl_N evaluation of the resolution web of D (crossing c a dumbbell when
// dumbbell[c] is set) by the colouring state sum. `outer` picks the face at
// infinity; the value does not depend on it.
LaurentQ web_evaluation(const LinkDiagram& D, const std::vector<bool>& dumbbell, int N, int outer = -1);

// Alternating sum over the cube of resolutions with the shifts of the
// complex; the framing correction uses the self-writhe of each component.
LaurentQ moy_polynomial(const LinkDiagram& D, int N, bool unframed = true);

// 1 / prod_{k=1..N} (1 - q^{2k}) expanded up to q^qmax.
LaurentQ ring_hilbert_series(int N, int qmax);

// Coefficients of a series in [qmin, qmax].
std::map<int, mpz_class> truncate(const LaurentQ& x, int qmin, int qmax);

// ---- Rasmussen invariant --------------------------------------------------

struct RasmussenResult {
    int s = 0;
    int generator_q = 0;   // q-degree of the free Q[x]-generator
    int generator_t = 0;
    int mu = 0;            // its sl2-weight
    int free_rank = 0;
    std::string error;
};

class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Free part of the base-point Q[x]-action on the N = 2 homology with E_1
// specialized to zero: a single Q[x] whose generator sits in q-degree s - 1.
// Needs a knot, the rationals and t1 + t2 = 1.
RasmussenResult rasmussen_s(const LinkDiagram& K, const mpq_class& t1 = mpq_class(1, 2),
                            const mpq_class& t2 = mpq_class(1, 2), int extra_window = 0);

// Filtered homology of the complex at E_1 = 0, E_2 = -1; s is the mean of
// the two filtration levels.
struct LeeResult {
    int s = 0;
    std::vector<int> levels;  // one per class, ascending
    int dim = 0;
};
LeeResult lee_s(const LinkDiagram& K);

// ---- p-DG structures ----------------------------------------------------------

// Finite graded complex of F_p-vector spaces with a nilpotent operator of
// q-degree `degree` (acting within a homological degree).
struct PComplex {
    Field F;
    int p = 3;
    int degree = 2;
    Window window{0, 0};
    std::map<std::pair<int, int>, int> dims;          // (t, q) -> dim
    std::map<std::pair<int, int>, KMatrix> op;        // (t, q) -> (t, q + degree)

    KMatrix op_at(int t, int q) const;                // zero matrix when absent
    int dim(int t, int q) const;
    // op^k from (t, q); zero when it leaves the window.
    KMatrix power(int t, int q, int k) const;
    bool nilpotent() const;                           // op^p = 0 everywhere
    LaurentQ euler_characteristic() const;
};

struct JordanBlock {
    int size = 0;
    int t = 0;
    int q_head = 0;    // degree of the generating vector
    int q_bottom = 0;  // lowest q-degree in the block
    bool certified = true;

    int q_top() const { return q_bottom + 2 * (size - 1); }
    bool operator==(const JordanBlock& o) const {
        return size == o.size && t == o.t && q_head == o.q_head && certified == o.certified;
    }
    bool operator<(const JordanBlock& o) const;
};

std::vector<JordanBlock> jordan_blocks(const PComplex& P);

// Element of Z[q] / (1 + q^2 + ... + q^{2p-2}), stored by its remainder of
// degree below 2p - 2.
class CyclotomicValue {
public:
    CyclotomicValue() = default;
    static CyclotomicValue reduce(const LaurentQ& x, int p);
    int p() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const;
    bool operator==(const CyclotomicValue& o) const { return p_ == o.p_ && c_ == o.c_; }
    CyclotomicValue operator+(const CyclotomicValue& o) const;
    CyclotomicValue operator*(const CyclotomicValue& o) const;
    std::string str() const;

private:
    int p_ = 3;
    std::vector<mpz_class> c_;
};

struct SlashReport {
    std::vector<JordanBlock> blocks;  // all blocks
    std::vector<JordanBlock> stable;  // certified blocks of size < p
    int uncertified = 0;
    CyclotomicValue image;            // over the certified blocks
};

SlashReport slash_classes(const PComplex& P);
CyclotomicValue grothendieck_image(const PComplex& P);

// p-DG structure by e on homology over F_p at N = p with every E_i set to zero.
PComplex pdg_e_complex(const LinkDiagram& L, int p, const mpq_class& t1 = mpq_class(1, 2),
                       const mpq_class& t2 = mpq_class(1, 2));

// p-DG structure by f on window-truncated homology over F_p[E_1..E_N].
PComplex pdg_f_complex(const LinkDiagram& L, int p, int N, std::optional<Window> window = std::nullopt,
                       const mpq_class& t1 = mpq_class(1, 2), const mpq_class& t2 = mpq_class(1, 2));

// PComplex of an operator on homology, read off a homology module.
PComplex pcomplex_from_homology(const HomologyModule& H, Sl2Gen g, int p);

}  // namespace krsl2
