#include "krsl2/foam.hpp"

#include <stdexcept>

namespace krsl2 {

const char* foam_kind_name(FoamKind k) {
    switch (k) {
        case FoamKind::decoration: return "decoration";
        case FoamKind::assoc: return "assoc";
        case FoamKind::coassoc: return "coassoc";
        case FoamKind::digon_cup: return "digon_cup";
        case FoamKind::digon_cap: return "digon_cap";
        case FoamKind::zip: return "zip";
        case FoamKind::unzip: return "unzip";
        case FoamKind::cup: return "cup";
        case FoamKind::cap: return "cap";
        case FoamKind::saddle: return "saddle";
        case FoamKind::isotopy: return "isotopy";
    }
    return "?";
}

BasicFoam BasicFoam::decorate(Decoration d) {
    BasicFoam s;
    s.kind = FoamKind::decoration;
    if (d.facet >= 0) s.location = {d.facet};
    s.deco = std::move(d);
    return s;
}

BasicFoam BasicFoam::local(FoamKind k, int a, int b, std::vector<int> location) {
    BasicFoam s;
    s.kind = k;
    s.a = a;
    s.b = b;
    s.location = std::move(location);
    return s;
}

bool operator==(const BasicFoam& x, const BasicFoam& y) {
    if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.location != y.location || x.permutation != y.permutation)
        return false;
    if (x.deco.has_value() != y.deco.has_value()) return false;
    if (!x.deco) return true;
    const auto &u = *x.deco, &v = *y.deco;
    return u.facet == v.facet && u.complement == v.complement && u.sym.alphabet() == v.sym.alphabet() &&
           u.sym.basis() == v.sym.basis() && u.sym.poly() == v.sym.poly();
}

FoamWord FoamWord::then(const FoamWord& o) const {
    FoamWord w = *this;
    w.slices.insert(w.slices.end(), o.slices.begin(), o.slices.end());
    return w;
}

bool FoamWord::operator==(const FoamWord& o) const { return slices == o.slices; }

void FoamLinComb::add(const mpq_class& c, const FoamWord& w) {
    mpq_class v = F_.reduce(c);
    if (v == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->second == w) {
            it->first = F_.add(it->first, v);
            if (it->first == 0) terms_.erase(it);
            return;
        }
    }
    terms_.emplace_back(v, w);
}

FoamLinComb& FoamLinComb::operator+=(const FoamLinComb& o) {
    for (const auto& [c, w] : o.terms_) add(c, w);
    return *this;
}

FoamLinComb FoamLinComb::scaled(const mpq_class& c) const {
    FoamLinComb r(F_);
    for (const auto& [k, w] : terms_) r.add(k * c, w);
    return r;
}

int binding_degree(int a, int b, int N) { return a * b + (a + b) * (N - a - b); }

int singular_vertex_degree(int a, int b, int c, int N) { return a * b + b * c + a * c + (a + b + c) * (N - a - b - c); }

int basic_degree(const BasicFoam& s, int N) {
    const int a = s.a, b = s.b;
    switch (s.kind) {
        case FoamKind::decoration: {
            const SymFunc& R = s.deco.value().sym;
            if (R.is_zero()) return 0;
            if (!R.homogeneous()) throw std::invalid_argument("foam_degree: inhomogeneous decoration");
            return R.qdeg();
        }
        case FoamKind::assoc:
        case FoamKind::coassoc:
        case FoamKind::isotopy: return 0;
        case FoamKind::digon_cup:
        case FoamKind::digon_cap: return -a * b;
        case FoamKind::zip:
        case FoamKind::unzip: return a * b;
        case FoamKind::cup:
        case FoamKind::cap: return -a * (N - a);
        case FoamKind::saddle: return a * (N - a);
    }
    return 0;
}

int foam_degree(const FoamWord& F, int N) {
    int d = 0;
    for (const auto& s : F.slices) d += basic_degree(s, N);
    return d;
}

namespace {

FoamWord single(const BasicFoam& s) { return FoamWord{{s}}; }

// p_1 or its complementary version on a facet, written in the e basis.
BasicFoam p1_on(const Field& F, int facet, int thickness, bool complement, int N) {
    int alpha = complement ? N - thickness : thickness;
    return BasicFoam::decorate(Decoration{facet, SymFunc::elementary(F, alpha, 1), complement});
}

int facet_at(const BasicFoam& s, std::size_t i) { return i < s.location.size() ? s.location[i] : -1; }

mpq_class h_scalar(const BasicFoam& s, const Sl2Params& P) {
    const int a = s.a, b = s.b, N = P.N;
    switch (s.kind) {
        case FoamKind::digon_cup: return a * b * (P.t1 + P.t2);
        case FoamKind::digon_cap: return a * b * (P.tbar1() + P.tbar2());
        case FoamKind::zip: return -a * b * (P.tbar1() + P.tbar2());
        case FoamKind::unzip: return -a * b * (P.t1 + P.t2);
        case FoamKind::cup:
        case FoamKind::cap: return a * (N - a);
        case FoamKind::saddle: return -a * (N - a);
        default: return 0;
    }
}

}  // namespace

FoamLinComb sl2_on_basic(Sl2Gen g, const BasicFoam& s, const Sl2Params& P) {
    FoamLinComb out(P.F);
    const int a = s.a, b = s.b, N = P.N;
    if (s.kind == FoamKind::decoration) {
        const Decoration& d = s.deco.value();
        if (g == Sl2Gen::h) {
            out.add(-basic_degree(s, N), single(s));
            return out;
        }
        Decoration img = d;
        img.sym = sl2_on_sym(g, d.sym);
        if (!img.sym.is_zero()) out.add(1, single(BasicFoam::decorate(img)));
        return out;
    }
    if (g == Sl2Gen::e) return out;
    if (g == Sl2Gen::h) {
        out.add(h_scalar(s, P), single(s));
        return out;
    }

    // f: the foam itself followed or preceded by first power sums.
    auto after = [&](const mpq_class& c, const BasicFoam& deco) { out.add(c, FoamWord{{s, deco}}); };
    auto before = [&](const mpq_class& c, const BasicFoam& deco) { out.add(c, FoamWord{{deco, s}}); };
    const int L = facet_at(s, 0), R = facet_at(s, 1);
    switch (s.kind) {
        case FoamKind::cup:
            after(mpq_class(-a, 2), p1_on(P.F, L, a, true, N));
            after(mpq_class(-(N - a), 2), p1_on(P.F, L, a, false, N));
            break;
        case FoamKind::cap:
            before(mpq_class(-a, 2), p1_on(P.F, L, a, true, N));
            before(mpq_class(-(N - a), 2), p1_on(P.F, L, a, false, N));
            break;
        case FoamKind::saddle:
            after(mpq_class(a, 2), p1_on(P.F, L, a, true, N));
            after(mpq_class(N - a, 2), p1_on(P.F, L, a, false, N));
            break;
        case FoamKind::digon_cup:
            after(-P.t1 * b, p1_on(P.F, L, a, false, N));
            after(-P.t2 * a, p1_on(P.F, R, b, false, N));
            break;
        case FoamKind::digon_cap:
            before(-P.tbar1() * b, p1_on(P.F, L, a, false, N));
            before(-P.tbar2() * a, p1_on(P.F, R, b, false, N));
            break;
        case FoamKind::unzip:
            after(P.t1 * b, p1_on(P.F, L, a, false, N));
            after(P.t2 * a, p1_on(P.F, R, b, false, N));
            break;
        case FoamKind::zip:
            before(P.tbar1() * b, p1_on(P.F, L, a, false, N));
            before(P.tbar2() * a, p1_on(P.F, R, b, false, N));
            break;
        default: break;
    }
    return out;
}

FoamLinComb sl2_on_word(Sl2Gen g, const FoamWord& F, const Sl2Params& P) {
    FoamLinComb out(P.F);
    for (std::size_t i = 0; i < F.slices.size(); ++i) {
        FoamLinComb local = sl2_on_basic(g, F.slices[i], P);
        for (const auto& [c, w] : local.terms()) {
            FoamWord full;
            full.slices.assign(F.slices.begin(), F.slices.begin() + static_cast<long>(i));
            full = full.then(w);
            full.slices.insert(full.slices.end(), F.slices.begin() + static_cast<long>(i) + 1, F.slices.end());
            out.add(c, full);
        }
    }
    return out;
}

FoamLinComb twist_word(Sl2Gen g, const std::vector<GreenDot>& dots, const std::vector<int>& thickness,
                       const Sl2Params& P) {
    FoamLinComb out(P.F);
    const int N = P.N;
    for (const auto& d : dots) {
        if (g == Sl2Gen::e || d.mult == 0) continue;
        if (d.host < 0) {
            // a floating dot is always solid: the complement of the empty facet
            if (g == Sl2Gen::h) out.add(-d.mult * N, FoamWord{});
            else out.add(d.mult, single(BasicFoam::decorate(Decoration{-1, SymFunc::elementary(P.F, N, 1), true})));
            continue;
        }
        const int a = thickness.at(d.host);
        const bool solid = d.type == DotType::solid;
        if (g == Sl2Gen::h) out.add(-d.mult * (solid ? N - a : a), FoamWord{});
        else out.add(d.mult, single(p1_on(P.F, d.host, a, solid, N)));
    }
    return out;
}

FoamLinComb sl2_star(Sl2Gen g, const FoamWord& F, const std::vector<GreenDot>& src_dots,
                     const std::vector<GreenDot>& tgt_dots, const std::vector<int>& src_thickness,
                     const std::vector<int>& tgt_thickness, const Sl2Params& P) {
    FoamLinComb out = sl2_on_word(g, F, P);
    const FoamLinComb src = twist_word(g, src_dots, src_thickness, P);
    const FoamLinComb tgt = twist_word(g, tgt_dots, tgt_thickness, P);
    for (const auto& [c, w] : src.terms()) out.add(-c, w.then(F));
    for (const auto& [c, w] : tgt.terms()) out.add(c, F.then(w));
    return out;
}

}  // namespace krsl2
