#pragma once

#include "cohomoforge/battery.hpp"

#include <json.hpp>

namespace cf {

using Json = nlohmann::ordered_json;

// Parsed and validated input file. All structural invariants of the
// referenced objects are enforced at parse time.
struct InputDocument {
    std::string schema;
    std::string kind;  // group | abelian | gmodule | liering | ses | battery

    std::optional<GroupPtr> group;
    std::optional<FiniteAbelianGroup> abelian;
    std::optional<GModule> gmodule;
    std::vector<int> subgroup_generators;  // optional, for inf-res
    std::optional<LieRing> liering;
    std::optional<LieModule> liemodule;
    std::optional<FpMat> pmap;
    std::optional<SubSpace> ideal;
    std::optional<ShortExactSequence> ses;
    std::string battery_catalog;
};

InputDocument parse_document(const Json& j);
InputDocument parse_input(const std::string& path);
// canonical serialization; emit(parse(doc)) is byte-stable
Json emit_canonical(const InputDocument& doc);

struct RunOptions {
    int degree = 1;
    int max_degree = 1;
    std::vector<int> subgroup;       // overrides the document's subgroup
    int order_cap = 128;
    int degree_cap = 2;
    long long size_budget = 6000;
};

struct ReportEntry {
    std::string id;
    std::string status;  // pass | fail | skipped
    Json data;
    std::string witness;
};

struct RunReport {
    std::string command;
    std::vector<ReportEntry> entries;
    std::string overall;  // pass | fail
    double timing_ms = 0;
};

RunReport run_command(const InputDocument& doc, const std::string& command, const RunOptions& opts);

Json report_to_json(const RunReport& report);
std::string render_report_text(const RunReport& report);

}  // namespace cf
