#include "krsl2/cli.hpp"

#include <doctest.h>

using namespace krsl2;
using nlohmann::json;

namespace {

JobConfig config(std::set<std::string> reports) {
    JobConfig c;
    c.reports = std::move(reports);
    return c;
}

const json& reports_of(const RunResult& r, std::size_t i = 0) { return r.report["items"][i]["reports"]; }

}  // namespace

TEST_CASE("PD parsing") {
    const LinkDiagram H = parse_pd("X[1,3,2,4] X[3,1,4,2]");
    CHECK(H.num_crossings() == 2);
    CHECK(H.num_components() == 2);
    CHECK(H.sign(0) == 1);
    CHECK(H.sign(1) == 1);
    CHECK(moy_polynomial(H, 2) == moy_polynomial(LinkDiagram::from_braid({1, 1}, 2), 2));
    CHECK(parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]").canonical() == H.canonical());

    const LinkDiagram E = parse_pd("");
    CHECK(E.num_crossings() == 0);
    CHECK(E.num_components() == 0);

    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,x]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4] garbage"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,5]"), ParseError);  // dangling labels
    CHECK_THROWS_AS(parse_pd("PD[X[1,3,2,4], X[3,1,4,2]"), ParseError);
}

TEST_CASE("braid parsing") {
    const LinkDiagram H = parse_braid("s1 s1", 2);
    CHECK(H.num_components() == 2);
    CHECK(H.num_crossings() == 2);
    const LinkDiagram T = parse_braid("s1 s1 s1");
    CHECK(T.num_components() == 1);
    CHECK(T.writhe() == 3);
    CHECK(parse_braid("1 1 1").canonical() == T.canonical());
    CHECK(parse_braid("s-1").sign(0) == -1);
    const LinkDiagram U = parse_braid("", 1);
    CHECK(U.num_components() == 1);
    CHECK(U.num_crossings() == 0);
    CHECK_THROWS_AS(parse_braid("s2", 2), ParseError);
    CHECK_THROWS_AS(parse_braid("s0"), ParseError);
    CHECK_THROWS_AS(parse_braid("t1"), ParseError);
}

TEST_CASE("canonical PD text round-trips") {
    const std::vector<LinkDiagram> ds = {parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), parse_braid("s1 s-2 s1 s-2"),
                                         parse_braid("", 3), parse_braid("s1 s1", 3), parse_pd("")};
    for (const auto& D : ds) {
        const LinkDiagram back = parse_pd(D.canonical());
        CHECK(back.canonical() == D.canonical());
        CHECK(diagram_hash(back) == diagram_hash(D));
        CHECK(back.num_components() == D.num_components());
        for (int c = 0; c < D.num_crossings(); ++c) CHECK(back.sign(c) == D.sign(c));
    }
    CHECK(diagram_hash(ds[0]) != diagram_hash(ds[1]));
    CHECK(diagram_hash(ds[0]).size() == 16);
}

TEST_CASE("field and configuration checks") {
    CHECK(parse_field("q").is_rational());
    CHECK(parse_field("fp:5").characteristic() == 5);
    CHECK_THROWS_AS(parse_field("fp:2"), ParseError);
    CHECK_THROWS_AS(parse_field("fp:9"), ParseError);
    CHECK_THROWS_AS(parse_field("fp:"), ParseError);
    CHECK_THROWS_AS(parse_field("r"), ParseError);

    JobConfig c = config({"s"});
    c.validate();
    c.N = 3;
    CHECK_THROWS_AS(c.validate(), ParseError);
    c = config({"s"});
    c.t1 = mpq_class(1, 3);
    CHECK_THROWS_AS(c.validate(), ParseError);
    c = config({"pdg_e"});
    CHECK_THROWS_AS(c.validate(), ParseError);
    c.F = Field::prime(3);
    CHECK_THROWS_AS(c.validate(), ParseError);
    c.N = 3;
    c.validate();
    c = config({"pdg_f"});
    CHECK_THROWS_AS(c.validate(), ParseError);
    c = config({"homology", "bogus"});
    CHECK_THROWS_AS(c.validate(), ParseError);
}

TEST_CASE("unknot report") {
    const RunResult r = run(config({"homology", "sl2", "moy"}), {{"u", "", true, 1}});
    CHECK(r.exit_code == 0);
    CHECK(r.report["schema"] == 1);
    const json& rep = reports_of(r);
    // q^{-1} / (1 - q^2)^2
    for (const auto& d : rep["homology"]["dims"]) {
        CHECK(d[0] == 0);
        const int q = d[1];
        CHECK(d[2] == (q + 1) / 2 + 1);
    }
    CHECK(rep["homology"]["certified"][1].get<int>() >= 21);
    const json& cs = rep["sl2"]["constituents"];
    CHECK(cs[0] == json({{"kind", "M"}, {"t", 0}, {"weight", -1}, {"multiplicity", 1}, {"certified", true}, {"continues", true}}));
    CHECK(cs[1]["kind"] == "P");
    CHECK(cs[1]["weight"] == -3);
    CHECK(cs[2]["kind"] == "M");
    CHECK(cs[2]["weight"] == -5);
    CHECK(rep["sl2"]["gamma"].empty());
    CHECK(rep["sl2"]["z"].empty());
    CHECK(rep["moy"] == json::array({-1, 1, 0, 1}));
}

TEST_CASE("Hopf link report") {
    const RunResult r = run(config({"sl2"}), {{"hopf", "X[1,3,2,4] X[3,1,4,2]", false, 0}});
    const json& sl2 = reports_of(r)["sl2"];
    CHECK(sl2["gamma"] == json::array({{{"kind", "L"}, {"t", 2}, {"weight", 0}, {"multiplicity", 1}, {"certified", true}, {"continues", false}},
                                       {{"kind", "L"}, {"t", 2}, {"weight", 2}, {"multiplicity", 1}, {"certified", true}, {"continues", false}}}));
    CHECK(sl2["z"].empty());
}

TEST_CASE("other reports") {
    JobConfig c = config({"s", "moy"});
    RunResult r = run(c, {{"rt", "s1 s1 s1", true, 0}, {"lt", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", false, 0}});
    CHECK(r.exit_code == 0);
    CHECK(reports_of(r, 0)["s"]["s"] == 2);
    CHECK(reports_of(r, 0)["s"]["agree"] == true);
    CHECK(reports_of(r, 1)["s"]["s"] == -2);
    CHECK(reports_of(r, 0)["moy"] == json::array({1, 1, 0, 1, 0, 1, 0, 0, 0, -1}));

    c = config({"pdg_e"});
    c.N = 3;
    c.F = Field::prime(3);
    r = run(c, {{"u", "", true, 1}, {"hopf", "s1 s1", true, 0}});
    CHECK(r.exit_code == 0);
    CHECK(reports_of(r, 0)["pdg_e"]["image"]["coeffs"] == json::array({0, 0, 0, 0}));
    CHECK(reports_of(r, 1)["pdg_e"]["matches_moy"] == true);

    c = config({"pdg_f"});
    c.F = Field::prime(3);
    r = run(c, {{"u", "", true, 1}});
    CHECK(reports_of(r)["pdg_f"]["stable"].empty());
}

TEST_CASE("batches, errors and exit codes") {
    const JobConfig c = config({"homology"});
    RunResult r = run(c, {{"a", "s1", true, 0}, {"b", "X[1,2,3]", false, 0}, {"c", "s1 s1", true, 0}});
    CHECK(r.exit_code == 2);
    REQUIRE(r.report["items"].size() == 3);
    CHECK(r.report["items"][0]["id"] == "a");
    CHECK(r.report["items"][0]["status"] == "ok");
    CHECK(r.report["items"][1]["status"] == "parse_error");
    CHECK(r.report["items"][2]["status"] == "ok");

    // the s-invariant of a link is a computation error
    r = run(config({"s"}), {{"hopf", "s1 s1", true, 0}});
    CHECK(r.exit_code == 1);
    CHECK(r.report["items"][0]["status"] == "computation_error");

    JobConfig bad = config({"s"});
    bad.N = 3;
    CHECK_THROWS_AS(run(bad, {}), ParseError);
}

TEST_CASE("reports are deterministic") {
    JobConfig c = config({"homology", "sl2", "moy"});
    c.t1 = mpq_class(1, 3);
    c.t2 = mpq_class(2, 3);
    const std::vector<DiagramInput> in = {{"a", "s1 s1 s-2 s1", true, 0}, {"b", "s1 s-1", true, 0}, {"c", "", true, 1}};
    const std::string one = run(c, in).report.dump(), two = run(c, in).report.dump();
    CHECK(one == two);
    // items computed alone give the same entries
    CHECK(run(c, {in[1]}).report["items"][0] == json::parse(one)["items"][1]);
}

TEST_CASE("green dots and window overrides") {
    JobConfig c = config({"sl2"});
    const RunResult plain = run(c, {{"k", "s1 s1 s1", true, 0}});
    c.dots = {{1, DotType::hollow, 1}};
    const RunResult dotted = run(c, {{"k", "s1 s1 s1", true, 0}});
    // an extra dot shifts the weights, so slide comparisons are not vacuous
    CHECK(reports_of(plain)["sl2"]["weights"] != reports_of(dotted)["sl2"]["weights"]);
    c.dots = {{99, DotType::hollow, 1}};
    CHECK(run(c, {{"k", "s1 s1 s1", true, 0}}).exit_code == 2);

    c = config({"homology"});
    c.qmin = -3;
    c.qmax = 9;
    const RunResult w = run(c, {{"u", "", true, 1}});
    CHECK(reports_of(w)["homology"]["window"] == json::array({-3, 9}));
    c.qmin = 10;
    CHECK_THROWS_AS(run(c, {{"u", "", true, 1}}), ParseError);
    // a single override that empties the window is a per-item error
    c.qmax.reset();
    c.qmin = 500;
    CHECK(run(c, {{"u", "", true, 1}}).exit_code == 2);
}

TEST_CASE("invariance suite") {
    const json suite = invariance_suite(JobConfig{});
    CHECK(suite.size() == 9);
    for (const auto& e : suite) {
        INFO(e.dump());
        CHECK(e["pass"] == true);
    }
    // at N = 3 the moves avoiding non-ladder webs also pass
    JobConfig c;
    c.N = 3;
    c.qmax = 10;
    for (const auto& e : invariance_suite(c)) {
        const std::string name = e["name"];
        if (name.rfind("RIII", 0) == 0) continue;
        INFO(e.dump());
        CHECK(e["pass"] == true);
    }
}

TEST_CASE("parameter comparison") {
    JobConfig c = config({"tcompare"});
    RunResult r = run(c, {{"rt", "s1 s1 s1", true, 0}});
    CHECK(reports_of(r)["tcompare"]["identical"] == true);
    CHECK(reports_of(r)["tcompare"]["difference"].empty());
    c.t1 = mpq_class(1, 3);
    c.t2 = mpq_class(2, 3);
    r = run(c, {{"rt", "s1 s1 s1", true, 0}});
    CHECK(r.exit_code == 0);
    const json& t = reports_of(r)["tcompare"];
    CHECK(t["reference"] == json::array({{1, 2}, {1, 2}}));
    // the verdict is reported either way, never assumed
    CHECK(t["identical"] == t["difference"].empty());
}
