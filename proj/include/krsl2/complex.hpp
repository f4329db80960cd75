#pragma once

#include "krsl2/diagram.hpp"
#include "krsl2/statespace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace krsl2 {

// A generator of a free complex over R: homological degree t, q-degree,
// and the scalar by which h acts on it (h of an R-multiple r*g subtracts
// the q-degree of r).
struct ComplexGen {
    int t = 0;
    int q = 0;
    mpq_class h;
    std::string label;
};

// Free graded complex over R = k[E_1..E_N] with an sl2 action; d, e and f
// are stored by generator images.
struct RComplex {
    BaseRing R;
    std::vector<ComplexGen> gens;
    RMatrix d, e, f;

    int size() const { return static_cast<int>(gens.size()); }
    std::vector<int> gens_in(int t) const;
    int tmin() const;
    int tmax() const;
    Sl2FreeModule module() const;
    bool d_squared_zero() const;
    // Chain level e, f commute with d; empty string or first failure.
    std::string check_equivariance() const;
};

struct CubeOptions {
    Sl2Params P;
    // Correct the framing to obtain a link invariant; `framing` overrides
    // the default self-writhe of each component.
    bool unframed = true;
    std::vector<int> framing;
    // Extra green dots hosted on diagram labels (host -1 floats).
    std::vector<GreenDot> dots;
    // Drop the green dots of this crossing's dumbbell (negative control).
    int omit_dots_at = -1;
};

// Dots realizing a framing twist of `amount` on the component through
// `label`.
std::vector<GreenDot> framing_dots(int N, int amount, int label);

struct Cube {
    LinkDiagram diagram;
    CubeOptions options;
    std::vector<StateSpace> spaces;  // indexed by vertex bitmask
    std::vector<int> offset;         // first global generator of a vertex
    std::vector<int> t_of, qshift_of;
    int t_shift = 0, q_shift = 0;    // framing correction
    int sign_fixes = 0;              // edges whose sign was flipped to fix faces
    RComplex complex;

    int vertex_of(int gen) const;
};

class CubeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Cube build_cube(const LinkDiagram& D, const CubeOptions& opt);

// Multiplication by the edge variable of a label at every vertex; a chain map.
RMatrix label_multiplication(const Cube& C, int label);

// Chain homotopy equivalence produced by Gaussian elimination: small is
// the reduced complex, incl: small -> big, proj: big -> small, and
// homotopy: big -> big with id - incl proj = d H + H d.
struct Reduction {
    RComplex small;
    bool recorded = false;
    RMatrix incl, proj, homotopy;
    std::vector<int> kept;  // surviving big generators
    int steps = 0;
};

// Cancel invertible scalar entries of d, lowest q first. e and f are
// transported by proj e incl.
Reduction simplify(const RComplex& C, bool record = false);

}  // namespace krsl2
