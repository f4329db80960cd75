#pragma once

#include "krsl2/sl2poly.hpp"
#include "krsl2/symfunc.hpp"
#include "krsl2/web.hpp"

#include <optional>
#include <vector>

namespace krsl2 {

enum class FoamKind { decoration, assoc, coassoc, digon_cup, digon_cap, zip, unzip, cup, cap, saddle, isotopy };

const char* foam_kind_name(FoamKind k);

// A symmetric function placed on a facet. With `complement` set it is read
// in the complementary alphabet of size N - a (the p-bar, e-bar sums).
struct Decoration {
    int facet = -1;  // facet id, -1 for a floating (E-valued) decoration
    SymFunc sym;
    bool complement = false;
};

// One slice of a foam in good position. For digon, zip and unzip slices
// location = {left facet, right facet} with thicknesses (a, b); for cup, cap
// and saddle location = {facet} with thickness a.
struct BasicFoam {
    FoamKind kind = FoamKind::isotopy;
    int a = 1, b = 1;
    std::vector<int> location;
    std::optional<Decoration> deco;
    std::vector<int> permutation;

    static BasicFoam decorate(Decoration d);
    static BasicFoam local(FoamKind k, int a, int b, std::vector<int> location);
};

struct FoamWord {
    std::vector<BasicFoam> slices;  // applied first to last
    FoamWord then(const FoamWord& o) const;
    bool operator==(const FoamWord& o) const;
};

bool operator==(const BasicFoam& x, const BasicFoam& y);

// Field-linear combination of foam words with common source and target.
class FoamLinComb {
public:
    FoamLinComb() = default;
    explicit FoamLinComb(Field F) : F_(F) {}

    void add(const mpq_class& c, const FoamWord& w);
    FoamLinComb& operator+=(const FoamLinComb& o);
    FoamLinComb scaled(const mpq_class& c) const;
    const std::vector<std::pair<mpq_class, FoamWord>>& terms() const { return terms_; }
    const Field& field() const { return F_; }
    bool is_zero() const { return terms_.empty(); }

private:
    Field F_;
    std::vector<std::pair<mpq_class, FoamWord>> terms_;
};

struct Sl2Params {
    Field F;
    mpq_class t1{1, 2}, t2{1, 2};
    int N = 2;
    mpq_class tbar1() const { return 1 - t1; }
    mpq_class tbar2() const { return 1 - t2; }
};

// Degree table of a single slice; throws on an inhomogeneous decoration.
int basic_degree(const BasicFoam& s, int N);
int foam_degree(const FoamWord& F, int N);
// Local terms of the general degree formula: an interval seam joining
// facets of thicknesses a, b (and a + b), and a singular vertex of type
// (a, b, c). No pipeline foam carries a singular vertex.
int binding_degree(int a, int b, int N);
int singular_vertex_degree(int a, int b, int c, int N);

FoamLinComb sl2_on_basic(Sl2Gen g, const BasicFoam& s, const Sl2Params& P);

// g(word) by the Leibniz rule over slices.
FoamLinComb sl2_on_word(Sl2Gen g, const FoamWord& F, const Sl2Params& P);

// g(Gamma) of the green dots, as decorations (h contributes a scalar).
// `thickness[edge]` gives the thickness of each host facet.
FoamLinComb twist_word(Sl2Gen g, const std::vector<GreenDot>& dots, const std::vector<int>& thickness,
                       const Sl2Params& P);

// Star action g*F = g(F) - F g(src) + g(tgt) F.
FoamLinComb sl2_star(Sl2Gen g, const FoamWord& F, const std::vector<GreenDot>& src_dots,
                     const std::vector<GreenDot>& tgt_dots, const std::vector<int>& src_thickness,
                     const std::vector<int>& tgt_thickness, const Sl2Params& P);

}  // namespace krsl2
