#include "krsl2/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace krsl2;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// <label>:<hollow|solid>:<multiplicity>
GreenDot parse_dot(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 || (parts[1] != "hollow" && parts[1] != "solid")) throw ParseError("bad green dot '" + text + "'");
    GreenDot g;
    try {
        g.host = std::stoi(parts[0]);
    } catch (const std::exception&) {
        throw ParseError("bad green dot label '" + parts[0] + "'");
    }
    g.type = parts[1] == "hollow" ? DotType::hollow : DotType::solid;
    g.mult = parse_rational(parts[2]);
    return g;
}

std::vector<DiagramInput> read_pd_file(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw ParseError("cannot open " + path);
        in = &file;
    }
    std::vector<DiagramInput> out;
    std::string line;
    for (int n = 1; std::getline(*in, line); ++n) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        out.push_back({path + ":" + std::to_string(n), line, false, 0});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant gl_N link homology with its sl2 action"};
    int n = 2, strands = 0;
    std::string field = "q", t1 = "1/2", t2 = "1/2", framing = "unframed", reports = "homology,sl2", pd_file, json_out;
    std::optional<int> qmin, qmax;
    std::vector<std::string> braids, pds, dots;
    app.add_option("--n", n, "rank N of gl_N");
    app.add_option("--field", field, "q or fp:<p>");
    app.add_option("--t1", t1, "twist parameter, a/b");
    app.add_option("--t2", t2, "twist parameter, a/b");
    app.add_option("--qmin", qmin, "lowest q-degree of the window");
    app.add_option("--qmax", qmax, "highest q-degree of the window");
    app.add_option("--framing", framing, "framed or unframed")->check(CLI::IsMember({"framed", "unframed"}));
    app.add_option("--report", reports, "comma-separated: homology,sl2,s,pdg_e,pdg_f,moy,tcompare,invariance-suite");
    app.add_option("--pd", pd_file, "file with one PD code per line, - for stdin");
    app.add_option("--pd-code", pds, "PD code given inline");
    app.add_option("--braid", braids, "braid word such as \"s1 s-2 s1\"");
    app.add_option("--strands", strands, "strand count for braid words");
    app.add_option("--dot", dots, "extra green dot <label>:<hollow|solid>:<mult>, label 0 floats");
    app.add_option("--json", json_out, "write the report here instead of stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunResult result;
    try {
        JobConfig cfg;
        cfg.N = n;
        cfg.F = parse_field(field);
        cfg.t1 = parse_rational(t1);
        cfg.t2 = parse_rational(t2);
        cfg.qmin = qmin;
        cfg.qmax = qmax;
        cfg.framed = framing == "framed";
        for (const auto& d : dots) cfg.dots.push_back(parse_dot(d));
        const auto kinds = split(reports, ',');
        cfg.reports = {kinds.begin(), kinds.end()};

        std::vector<DiagramInput> inputs;
        if (!pd_file.empty()) inputs = read_pd_file(pd_file);
        for (std::size_t i = 0; i < pds.size(); ++i) inputs.push_back({"pd:" + std::to_string(i + 1), pds[i], false, 0});
        for (std::size_t i = 0; i < braids.size(); ++i) inputs.push_back({"braid:" + std::to_string(i + 1), braids[i], true, strands});
        if (inputs.empty() && !cfg.reports.count("invariance-suite")) throw ParseError("no diagram given (--pd, --pd-code or --braid)");
        result = run(cfg, inputs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string text = result.report.dump(2) + "\n";
    if (json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "error: cannot write " << json_out << "\n";
            return 1;
        }
        out << text;
    }
    return result.exit_code;
}
