#pragma once

#include "krsl2/foam.hpp"
#include "krsl2/laurent.hpp"
#include "krsl2/rmatrix.hpp"
#include "krsl2/web.hpp"

#include <string>
#include <vector>

namespace krsl2 {

class StateSpaceError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Twist of the sl2 action: e is untouched, f gains multiplication by
// `f` and h gains the scalar `h`.
struct TwistMap {
    Poly e, f;
    mpq_class h;
};

// State space of a resolution web as a quotient ring over R: tower
// variables y_i with monic relations y_i^{d_i} = tail_i(E, y_0..y_i), free
// over R on the monomials y^a with a_i < d_i, shifted by -sum(d_i - 1).
//
// For N = 2 the thickness-2 edges are erased and every resulting circle
// carries one variable; thin edges read it as x or E_1 - x. For N >= 3 the
// supported components are thin circles and ladders (dumbbells stacked
// cyclically), with variables a_0 (degree N), b_0 (degree N - 1) and one
// quadratic variable per further rung.
class StateSpace {
public:
    StateSpace() = default;

    // `dots` are green dots hosted on web edge ids (or floating).
    static StateSpace build(const Web& web, int N, const Sl2Params& P, const std::vector<GreenDot>& dots = {});
    static StateSpace circles(int n, int N, const Sl2Params& P) { return build(Web::circles(n), N, P); }

    const BaseRing& base() const { return R_; }
    const Field& field() const { return R_.F; }
    int N() const { return R_.N; }
    int nvars() const { return static_cast<int>(deg_.size()); }
    int ring_vars() const { return R_.N + nvars(); }
    int shift() const { return shift_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Exps>& basis() const { return basis_; }
    int basis_q(int i) const;
    LaurentQ graded_rank() const;

    // Elements of the ambient ring k[E_1..E_N, y_0..y_{m-1}].
    Poly zero() const { return Poly(field(), ring_vars()); }
    Poly constant(const mpq_class& c) const { return Poly::constant(field(), ring_vars(), c); }
    Poly E(int k) const;
    Poly var(int i) const { return Poly::variable(field(), ring_vars(), R_.N + i); }
    Poly basis_element(int i) const;
    Poly relation(int i) const;  // y_i^{d_i} - tail_i
    int var_degree(int i) const { return deg_[i]; }

    Poly nf(const Poly& p) const;
    RCol coords(const Poly& p) const;
    // Inverse of coords.
    Poly element(const RCol& v) const;

    // First power sum of a web edge: the edge variable of a thin edge,
    // the sum over both inputs of a thick one.
    Poly edge_expr(int web_edge) const { return edge_expr_.at(web_edge); }
    // Expression of a diagram label; labels past the web's label count
    // address free loops in order.
    Poly label_expr(int label) const;
    // The diagram label each tower variable is read from.
    int var_label(int i) const { return var_label_[i]; }
    const Web& web() const { return web_; }

    const Sl2Derivation& derivation() const { return D_; }
    const TwistMap& twist() const { return twist_; }
    Poly act(Sl2Gen g, const Poly& p) const;  // twisted, in normal form
    Sl2FreeModule sl2_module() const;

    std::string describe() const;

private:
    void finish();

    BaseRing R_;
    Web web_;
    std::vector<int> deg_;
    std::vector<Poly> tail_;  // over the final ring
    std::vector<int> var_label_;
    std::vector<Poly> edge_expr_;
    std::vector<int> free_loop_edge_;
    std::vector<Exps> basis_;
    std::map<Exps, int> basis_index_;
    int shift_ = 0;
    Sl2Derivation D_;
    TwistMap twist_;
};

// Homogeneous R-linear map between state spaces: entry (i, j) has q-degree
// degree + q(row i) - q(column j).
struct GradedMap {
    int degree = 0;
    RMatrix matrix;
};

bool is_homogeneous(const StateSpace& src, const StateSpace& tgt, const GradedMap& m);

// Twist from green dots hosted on web edges, read through `V`.
TwistMap twist_of(const StateSpace& V, const std::vector<GreenDot>& dots);
// The three bracket identities of a flat twist, checked in V.
bool check_flat(const StateSpace& V, const TwistMap& tau);

// The R-linear map y^a -> images(y^a) * u from src to tgt, where images
// sends tower variable i of src into the ring of tgt.
RMatrix ring_map_matrix(const StateSpace& src, const StateSpace& tgt, const std::vector<Poly>& images, const Poly& u);
// Images of the tower variables of src read through the diagram labels.
std::vector<Poly> label_images(const StateSpace& src, const StateSpace& tgt);
// Well-definedness of the above map: relations of src go to zero and every
// label agrees on both sides after multiplying by u. Returns an empty
// string or a description of the first failure.
std::string check_ring_map(const StateSpace& src, const StateSpace& tgt, const std::vector<Poly>& images, const Poly& u,
                           int num_labels);

// Sum_k (-1)^k E_k h_{N-1-k}(a, b): the divided difference (P(a) - P(b))/(a - b)
// of the circle polynomial.
Poly divided_difference(const StateSpace& V, const Poly& a, const Poly& b);

}  // namespace krsl2
