#include "cohomoforge/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomoforge: exact low-degree cohomology of finite groups and Lie rings"};
    std::string command, input_path;
    cf::RunOptions opts;
    opts.order_cap = static_cast<int>(env_ll("COHOMOFORGE_ORDER_CAP", 128));
    opts.degree_cap = static_cast<int>(env_ll("COHOMOFORGE_DEGREE_CAP", 2));
    opts.size_budget = env_ll("COHOMOFORGE_SIZE_BUDGET", 6000);
    bool json_output = false;
    std::string subgroup_csv;

    app.add_option("command", command,
                   "cohomology | h1 | inf-res | les | vanishing | frattini | maschke | schur | "
                   "lie-validate | lie-h1 | lie-cohomology | lie-inf-res | lie-theorems | suite")
        ->required();
    app.add_option("input", input_path, "input document (JSON); optional for 'suite'");
    app.add_option("--degree", opts.degree, "cohomology degree (default 1)");
    app.add_option("--max-degree", opts.max_degree, "top degree for the long exact sequence");
    app.add_option("--subgroup", subgroup_csv, "comma-separated subgroup generators for inf-res");
    app.add_option("--order-cap", opts.order_cap, "subgroup enumeration order cap");
    app.add_option("--degree-cap", opts.degree_cap, "cochain degree cap (hard cap 3)");
    app.add_option("--size-budget", opts.size_budget, "max cochain coordinates");
    app.add_flag("--json", json_output, "machine-readable report");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!subgroup_csv.empty()) {
            size_t pos = 0;
            while (pos < subgroup_csv.size()) {
                size_t next = subgroup_csv.find(',', pos);
                if (next == std::string::npos) next = subgroup_csv.size();
                opts.subgroup.push_back(std::stoi(subgroup_csv.substr(pos, next - pos)));
                pos = next + 1;
            }
        }
        cf::InputDocument doc;
        if (!input_path.empty()) {
            doc = cf::parse_input(input_path);
        } else if (command == "suite") {
            doc.schema = "cohomoforge/1";
            doc.kind = "battery";
            doc.battery_catalog = "small";
        } else {
            std::cerr << "error: command '" << command << "' needs an input document\n";
            return 2;
        }
        cf::RunReport report = cf::run_command(doc, command, opts);
        if (json_output)
            std::cout << cf::report_to_json(report).dump(2) << "\n";
        else
            std::cout << cf::render_report_text(report);
        return report.overall == "pass" ? 0 : 1;
    } catch (const cf::Error& e) {
        std::cerr << "error [" << cf::errc_name(e.code) << "]: " << e.what();
        if (!e.witness.empty()) {
            std::cerr << " witness (";
            for (size_t i = 0; i < e.witness.size(); ++i)
                std::cerr << (i ? "," : "") << e.witness[i];
            std::cerr << ")";
        }
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
