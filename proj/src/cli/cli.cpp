#include "krsl2/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <regex>
#include <sstream>
#include <thread>

namespace krsl2 {

using nlohmann::json;

namespace {

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit the report format");
    return z.get_si();
}

json rational_json(const mpq_class& x) { return json::array({to_ll(x.get_num()), to_ll(x.get_den())}); }

// [lowest exponent, coefficients...]; the zero polynomial is [].
json laurent_json(const LaurentQ& x) {
    json a = json::array();
    if (x.is_zero()) return a;
    a.push_back(x.min_exp());
    for (int e = x.min_exp(); e <= x.max_exp(); ++e) a.push_back(to_ll(x.coeff(e)));
    return a;
}

json cyclotomic_json(const CyclotomicValue& v) {
    json c = json::array();
    for (const auto& x : v.coeffs()) c.push_back(to_ll(x));
    return {{"p", v.p()}, {"coeffs", c}};
}

json window_json(const Window& w) { return json::array({w.qmin, w.qmax}); }

json triples(const std::map<std::pair<int, int>, int>& m) {
    json a = json::array();
    for (const auto& [k, v] : m) a.push_back(json::array({k.first, k.second, v}));
    return a;
}

json constituents_json(const std::vector<Constituent>& cs) {
    json a = json::array();
    for (const auto& c : cs)
        a.push_back({{"kind", constituent_name(c.kind)},
                     {"t", c.t},
                     {"weight", c.weight},
                     {"multiplicity", c.multiplicity},
                     {"certified", c.certified},
                     {"continues", c.continues}});
    return a;
}

json blocks_json(const std::vector<JordanBlock>& bs) {
    json a = json::array();
    for (const auto& b : bs)
        a.push_back({{"size", b.size}, {"t", b.t}, {"q_head", b.q_head}, {"q_bottom", b.q_bottom}, {"certified", b.certified}});
    return a;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CubeOptions cube_options(const JobConfig& cfg) {
    CubeOptions o;
    o.P.N = cfg.N;
    o.P.F = cfg.F;
    o.P.t1 = cfg.t1;
    o.P.t2 = cfg.t2;
    o.unframed = !cfg.framed;
    for (auto g : cfg.dots) {
        g.host -= 1;
        o.dots.push_back(g);
    }
    return o;
}

RComplex reduced_complex(const LinkDiagram& D, const CubeOptions& o) {
    for (const auto& g : o.dots)
        if (g.host >= D.num_labels() + D.free_loops()) throw ParseError("green dot on a label the diagram does not have");
    return simplify(build_cube(D, o).complex).small;
}

Window job_window(const JobConfig& cfg, const RComplex& S) {
    Window w = default_window(S);
    if (cfg.qmin) w.qmin = *cfg.qmin;
    if (cfg.qmax) w.qmax = *cfg.qmax;
    if (w.empty()) throw ParseError("empty q-window");
    return w;
}

json homology_json(const HomologyModule& H) {
    return {{"window", window_json(H.window())},
            {"certified", window_json(H.certified())},
            {"dims", triples(H.dims())},
            {"euler", laurent_json(H.euler_characteristic())}};
}

json sl2_json(const HomologyModule& H) {
    const Sl2ModuleReport r = H.field().is_rational() ? decompose(H) : weight_table(H);
    json j = {{"weights", triples(r.weights)},
              {"highest_weight", triples(r.highest_weight)},
              {"constituents", constituents_json(r.constituents)},
              {"gamma", constituents_json(r.gamma_part)},
              {"z", constituents_json(r.z_part)},
              {"over", H.field().is_rational() ? "Q" : "F_" + std::to_string(H.field().characteristic())}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json slash_json(const PComplex& P) {
    const SlashReport r = slash_classes(P);
    return {{"p", P.p},
            {"window", window_json(P.window)},
            {"blocks", blocks_json(r.blocks)},
            {"stable", blocks_json(r.stable)},
            {"uncertified", r.uncertified},
            {"image", cyclotomic_json(r.image)}};
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    std::string body = trim(text);
    int loops = 0;
    static const std::regex loop_re(R"(\+\s*(\d+)\s*loops?\s*$)");
    std::smatch m;
    if (std::regex_search(body, m, loop_re)) {
        loops = std::stoi(m[1]);
        body = trim(body.substr(0, m.position(0)));
    }
    if (body.rfind("PD[", 0) == 0) {
        if (body.back() != ']') throw ParseError("unterminated PD[...]");
        body = trim(body.substr(3, body.size() - 4));
    }
    LinkDiagram::PD pd;
    static const std::regex token_re(R"(X\[([^\]]*)\])");
    std::string rest;
    auto it = std::sregex_iterator(body.begin(), body.end(), token_re);
    std::size_t last = 0;
    for (; it != std::sregex_iterator(); ++it) {
        rest += body.substr(last, it->position(0) - last);
        last = it->position(0) + it->length(0);
        std::vector<int> v;
        std::stringstream ss((*it)[1].str());
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
                throw ParseError("bad edge label '" + item + "'");
            v.push_back(std::stoi(item));
        }
        if (v.size() != 4) throw ParseError("crossing X[" + (*it)[1].str() + "] needs four labels");
        pd.push_back({v[0], v[1], v[2], v[3]});
    }
    rest += body.substr(last);
    if (rest.find_first_not_of(" \t\r\n,") != std::string::npos) throw ParseError("unexpected text in PD code");
    try {
        return LinkDiagram::from_pd(pd, loops);
    } catch (const DiagramError& e) {
        throw ParseError(e.what());
    }
}

LinkDiagram parse_braid(const std::string& text, int strands) {
    std::vector<int> word;
    std::stringstream ss(text);
    std::string tok;
    static const std::regex gen_re(R"(s?(-?\d+))");
    std::smatch m;
    while (ss >> tok) {
        if (!std::regex_match(tok, m, gen_re)) throw ParseError("bad braid generator '" + tok + "'");
        const int g = std::stoi(m[1]);
        if (g == 0) throw ParseError("braid generator 0");
        word.push_back(g);
    }
    if (strands <= 0) {
        strands = 1;
        for (int g : word) strands = std::max(strands, std::abs(g) + 1);
    }
    try {
        return LinkDiagram::from_braid(word, strands);
    } catch (const DiagramError& e) {
        throw ParseError(e.what());
    }
}

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string n = text.substr(3);
        if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad prime '" + n + "'");
        const long p = std::stol(n);
        if (p == 2) throw ParseError("characteristic 2 is not supported");
        if (!is_prime(p)) throw ParseError(n + " is not prime");
        return Field::prime(p);
    }
    throw ParseError("field must be q or fp:<p>");
}

std::string diagram_hash(const LinkDiagram& D) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : D.canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void JobConfig::validate() const {
    if (N < 1) throw ParseError("N must be positive");
    for (const auto& r : reports)
        if (std::find(report_kinds().begin(), report_kinds().end(), r) == report_kinds().end())
            throw ParseError("unknown report '" + r + "'");
    if (reports.count("s")) {
        if (N != 2 || !F.is_rational() || t1 + t2 != 1) throw ParseError("the s report needs N = 2, the rationals and t1 + t2 = 1");
    }
    if (reports.count("pdg_e") && (F.is_rational() || N != F.characteristic()))
        throw ParseError("the pdg_e report needs field fp:<p> with N = p");
    if (reports.count("pdg_f") && F.is_rational()) throw ParseError("the pdg_f report needs field fp:<p>");
    if (qmin && qmax && *qmin > *qmax) throw ParseError("qmin exceeds qmax");
}

json JobConfig::to_json() const {
    json d = json::array();
    for (const auto& g : dots)
        d.push_back({{"host", g.host}, {"type", g.type == DotType::hollow ? "hollow" : "solid"}, {"mult", rational_json(g.mult)}});
    return {{"N", N},
            {"field", F.is_rational() ? "q" : "fp:" + std::to_string(F.characteristic())},
            {"t1", rational_json(t1)},
            {"t2", rational_json(t2)},
            {"qmin", qmin ? json(*qmin) : json(nullptr)},
            {"qmax", qmax ? json(*qmax) : json(nullptr)},
            {"framing", framed ? "framed" : "unframed"},
            {"dots", d},
            {"reports", json(std::vector<std::string>(reports.begin(), reports.end()))}};
}

namespace {

// Hull of the default windows of two reduced complexes, with overrides.
Window common_window(const JobConfig& cfg, const RComplex& a, const RComplex& b) {
    const Window wa = default_window(a), wb = default_window(b);
    Window w{std::min(wa.qmin, wb.qmin), std::max(wa.qmax, wb.qmax)};
    if (cfg.qmin) w.qmin = *cfg.qmin;
    if (cfg.qmax) w.qmax = *cfg.qmax;
    if (w.empty()) throw ParseError("empty q-window");
    return w;
}

}  // namespace

LinkDiagram parse_input(const DiagramInput& in) { return in.braid ? parse_braid(in.text, in.strands) : parse_pd(in.text); }

json run_item(const JobConfig& cfg, const DiagramInput& in) {
    json item = {{"id", in.id}, {"input", in.text}, {"format", in.braid ? "braid" : "pd"}};
    LinkDiagram D;
    try {
        D = parse_input(in);
    } catch (const ParseError& e) {
        item["status"] = "parse_error";
        item["error"] = e.what();
        return item;
    }
    json signs = json::array();
    for (int c = 0; c < D.num_crossings(); ++c) signs.push_back(D.sign(c));
    item["diagram"] = {{"pd", D.canonical()},
                       {"hash", diagram_hash(D)},
                       {"crossings", D.num_crossings()},
                       {"components", D.num_components()},
                       {"signs", signs}};
    json reports = json::object();
    try {
        if (cfg.reports.count("homology") || cfg.reports.count("sl2")) {
            const RComplex S = reduced_complex(D, cube_options(cfg));
            const HomologyModule H(S, job_window(cfg, S));
            if (cfg.reports.count("homology")) reports["homology"] = homology_json(H);
            if (cfg.reports.count("sl2")) reports["sl2"] = sl2_json(H);
        }
        if (cfg.reports.count("moy")) reports["moy"] = laurent_json(moy_polynomial(D, cfg.N, !cfg.framed));
        if (cfg.reports.count("s")) {
            const RasmussenResult r = rasmussen_s(D, cfg.t1, cfg.t2);
            if (!r.error.empty()) throw InvariantError(r.error);
            const LeeResult lee = lee_s(D);
            reports["s"] = {{"s", r.s},
                            {"generator", json::array({r.generator_t, r.generator_q})},
                            {"mu", r.mu},
                            {"lee_s", lee.s},
                            {"lee_levels", lee.levels},
                            {"agree", r.s == lee.s},
                            {"s_is_mu_minus_1", r.s == r.mu - 1}};
        }
        if (cfg.reports.count("tcompare")) {
            // homology and sl2 data at (t1, t2) against t1 = t2 = 1/2
            JobConfig ref = cfg;
            ref.t1 = ref.t2 = mpq_class(1, 2);
            const Window w = common_window(cfg, reduced_complex(D, cube_options(cfg)), reduced_complex(D, cube_options(ref)));
            const json here = canonical_report(D, cfg, w), there = canonical_report(D, ref, w);
            reports["tcompare"] = {{"window", window_json(w)},
                                   {"reference", json::array({rational_json(ref.t1), rational_json(ref.t2)})},
                                   {"identical", here == there},
                                   {"difference", json::diff(there, here)}};
        }
        const int p = static_cast<int>(cfg.F.characteristic());
        if (cfg.reports.count("pdg_e")) {
            json j = slash_json(pdg_e_complex(D, p, cfg.t1, cfg.t2));
            const CyclotomicValue moy = CyclotomicValue::reduce(moy_polynomial(D, p), p);
            j["moy_reduced"] = cyclotomic_json(moy);
            j["matches_moy"] = j["image"] == j["moy_reduced"];
            reports["pdg_e"] = j;
        }
        if (cfg.reports.count("pdg_f")) {
            std::optional<Window> w;
            if (cfg.qmin || cfg.qmax) {
                const RComplex S = reduced_complex(D, cube_options(cfg));
                w = job_window(cfg, S);
            }
            reports["pdg_f"] = slash_json(pdg_f_complex(D, p, cfg.N, w, cfg.t1, cfg.t2));
        }
    } catch (const ParseError& e) {
        item["status"] = "parse_error";
        item["error"] = e.what();
        item["reports"] = reports;
        return item;
    } catch (const std::exception& e) {
        item["status"] = "computation_error";
        item["error"] = e.what();
        item["reports"] = reports;
        return item;
    }
    item["status"] = "ok";
    item["reports"] = reports;
    return item;
}

json canonical_report(const LinkDiagram& D, const JobConfig& cfg, std::optional<Window> window) {
    const RComplex S = reduced_complex(D, cube_options(cfg));
    const HomologyModule H(S, window ? *window : job_window(cfg, S));
    json j = sl2_json(H);
    j["dims"] = triples(H.dims());
    return j;
}

namespace {

struct SuiteCase {
    std::string name;
    LinkDiagram a, b;
    std::vector<GreenDot> dots_a, dots_b;  // 1-based hosts
    bool framed_a = false;
};

std::vector<SuiteCase> suite_cases() {
    std::vector<SuiteCase> cs;
    const auto unlink2 = LinkDiagram::from_braid({}, 2);
    cs.push_back({"RII positive-negative", LinkDiagram::from_braid({1, -1}, 2), unlink2});
    cs.push_back({"RII negative-positive", LinkDiagram::from_braid({-1, 1}, 2), unlink2});
    cs.push_back({"RIII positive", LinkDiagram::from_braid({1, 2, 1}, 3), LinkDiagram::from_braid({2, 1, 2}, 3)});
    cs.push_back({"RIII negative", LinkDiagram::from_braid({-1, -2, -1}, 3), LinkDiagram::from_braid({-2, -1, -2}, 3)});
    const auto unknot = LinkDiagram::from_braid({}, 1);
    cs.push_back({"framed RI positive", LinkDiagram::from_braid({1}, 2), unknot});
    cs.push_back({"framed RI negative", LinkDiagram::from_braid({-1}, 2), unknot});
    // one hollow dot sliding along the trefoil through two crossings
    const auto K = LinkDiagram::from_braid({1, 1, 1}, 2);
    const int a = K.edges(0).bl, b = K.successor(a), c = K.successor(b);
    const mpq_class lam(1);
    auto dot = [&](int label) { return std::vector<GreenDot>{{label + 1, DotType::hollow, lam}}; };
    cs.push_back({"green dot slide, first crossing", K, K, dot(a), dot(b)});
    cs.push_back({"green dot slide, second crossing", K, K, dot(b), dot(c)});
    cs.push_back({"green dot slide, both crossings", K, K, dot(a), dot(c)});
    return cs;
}

}  // namespace

json invariance_suite(const JobConfig& cfg) {
    json out = json::array();
    for (const auto& c : suite_cases()) {
        json entry = {{"name", c.name}, {"left", c.a.canonical()}, {"right", c.b.canonical()}};
        try {
            JobConfig ca = cfg, cb = cfg;
            ca.framed = cb.framed = false;
            ca.dots = c.dots_a;
            cb.dots = c.dots_b;
            const RComplex Sa = reduced_complex(c.a, cube_options(ca)), Sb = reduced_complex(c.b, cube_options(cb));
            const Window w = common_window(cfg, Sa, Sb);
            const json ra = canonical_report(c.a, ca, w), rb = canonical_report(c.b, cb, w);
            entry["pass"] = ra == rb;
            if (ra != rb) entry["difference"] = json::diff(ra, rb);
        } catch (const std::exception& e) {
            entry["pass"] = false;
            entry["error"] = e.what();
        }
        out.push_back(entry);
    }
    return out;
}

RunResult run(const JobConfig& cfg, const std::vector<DiagramInput>& inputs) {
    cfg.validate();
    std::vector<json> items(inputs.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(inputs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && !inputs.empty(); ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < inputs.size();) items[i] = run_item(cfg, inputs[i]);
        });
    for (auto& t : pool) t.join();

    RunResult r;
    r.report = {{"schema", 1}, {"config", cfg.to_json()}, {"items", items}};
    bool parse_failed = false, failed = false;
    for (const auto& it : items) {
        parse_failed |= it["status"] == "parse_error";
        failed |= it["status"] == "computation_error";
    }
    if (cfg.reports.count("invariance-suite")) {
        json suite = invariance_suite(cfg);
        for (const auto& e : suite) failed |= !e["pass"].get<bool>();
        r.report["invariance_suite"] = suite;
    }
    r.exit_code = parse_failed ? 2 : failed ? 1 : 0;
    return r;
}

}  // namespace krsl2
