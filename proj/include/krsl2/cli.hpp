#pragma once

#include "krsl2/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace krsl2 {

// Malformed diagram text or an inconsistent job configuration.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tokens X[a,b,c,d], optionally wrapped in PD[...] and followed by
// "+ k loops". Empty text is the empty link.
LinkDiagram parse_pd(const std::string& text);

// Words such as "s1 s-1 s2" (bare integers also work). strands <= 0 uses
// one more than the largest generator index.
LinkDiagram parse_braid(const std::string& text, int strands = 0);

// "q" or "fp:<p>" with p an odd prime.
Field parse_field(const std::string& text);

// Stable 64-bit FNV-1a hash of the canonical PD text, as 16 hex digits.
std::string diagram_hash(const LinkDiagram& D);

inline const std::vector<std::string>& report_kinds() {
    static const std::vector<std::string> kinds = {"homology", "sl2", "s", "pdg_e", "pdg_f", "moy", "tcompare", "invariance-suite"};
    return kinds;
}

struct JobConfig {
    int N = 2;
    Field F;
    mpq_class t1{1, 2}, t2{1, 2};
    std::optional<int> qmin, qmax;
    bool framed = false;
    // Extra dots; hosts are labels of the canonical diagram (1-based), 0 floats.
    std::vector<GreenDot> dots;
    std::set<std::string> reports{"homology", "sl2"};

    // Throws ParseError on combinations the pipelines cannot serve.
    void validate() const;
    nlohmann::json to_json() const;
};

struct DiagramInput {
    std::string id;
    std::string text;
    bool braid = false;
    int strands = 0;
};

LinkDiagram parse_input(const DiagramInput& in);

// One report item; errors are recorded in the item ("error" and "status":
// "parse_error" or "computation_error").
nlohmann::json run_item(const JobConfig& cfg, const DiagramInput& in);

// Built-in pairs of diagrams that must have identical homology and sl2
// reports: Reidemeister moves, framed RI and green-dot slides.
nlohmann::json invariance_suite(const JobConfig& cfg);

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 ok, 1 computation error, 2 parse error
};

// Items run in parallel; the report keeps input order.
RunResult run(const JobConfig& cfg, const std::vector<DiagramInput>& inputs);

// Homology and sl2 data on a fixed window, used for comparisons.
nlohmann::json canonical_report(const LinkDiagram& D, const JobConfig& cfg, std::optional<Window> window = std::nullopt);

}  // namespace krsl2
