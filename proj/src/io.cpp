#include "cohomoforge/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace cf {

namespace {

[[noreturn]] void schema_fail(const std::string& field, const std::string& why) {
    fail(errc::schema_error, "schema error at '" + field + "': " + why);
}

long long get_ll(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) schema_fail(field, "expected an integer");
    return j.get<long long>();
}

std::vector<int> parse_int_list(const Json& j, const std::string& field) {
    if (!j.is_array()) schema_fail(field, "expected an array");
    std::vector<int> out;
    for (const Json& v : j) out.push_back(static_cast<int>(get_ll(v, field)));
    return out;
}

Mat parse_matrix(const Json& j, const std::string& field) {
    if (!j.is_array()) schema_fail(field, "expected a matrix");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            schema_fail(field, "ragged matrix");
        for (int c = 0; c < cols; ++c) m(i, c) = get_ll(j[i][c], field);
    }
    return m;
}

FpMat parse_fpmat(const Json& j, int p, const std::string& field) {
    Mat m = parse_matrix(j, field);
    FpMat out(p, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c)
            out.at(i, c) = static_cast<int>(mod_floor(m(i, c), p).convert_to<long long>());
    return out;
}

GroupPtr parse_group_payload(const Json& j, const std::string& field) {
    if (!j.is_object()) schema_fail(field, "expected a group object");
    if (j.contains("table")) {
        const Json& t = j["table"];
        if (!t.is_array()) schema_fail(field + ".table", "expected an array");
        std::vector<std::vector<int>> table;
        for (const Json& row : t) table.push_back(parse_int_list(row, field + ".table"));
        return validate_group(table);
    }
    if (j.contains("perm_degree") && j.contains("generators")) {
        int degree = static_cast<int>(get_ll(j["perm_degree"], field + ".perm_degree"));
        std::vector<std::vector<int>> gens;
        for (const Json& g : j["generators"]) gens.push_back(parse_int_list(g, field + ".generators"));
        return from_permutations(degree, gens).group;
    }
    schema_fail(field, "need either 'table' or 'perm_degree' + 'generators'");
}

FiniteAbelianGroup parse_abelian_payload(const Json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("factors")) schema_fail(field, "need 'factors'");
    std::vector<Int> factors;
    for (const Json& v : j["factors"]) factors.push_back(Int(get_ll(v, field + ".factors")));
    return FiniteAbelianGroup::invariant_factors(std::move(factors));
}

GModule parse_gmodule_payload(const Json& j, const GroupPtr& g, const std::string& field) {
    if (!j.contains("coeffs") || !j.contains("action")) schema_fail(field, "need 'coeffs' and 'action'");
    FiniteAbelianGroup coeffs = parse_abelian_payload(j["coeffs"], field + ".coeffs");
    if (!j["action"].is_array() || static_cast<int>(j["action"].size()) != g->order)
        schema_fail(field + ".action", "need one matrix per group element");
    std::vector<Mat> mats;
    for (const Json& m : j["action"]) mats.push_back(parse_matrix(m, field + ".action"));
    return validate_module(g, coeffs, mats);
}

Json matrix_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(m(i, j2).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json fpmat_json(const FpMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(m.at(i, j2));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json group_json(const GroupPtr& g) {
    Json t = Json::array();
    for (int i = 0; i < g->order; ++i) {
        Json row = Json::array();
        for (int j = 0; j < g->order; ++j) row.push_back(g->mul(i, j));
        t.push_back(std::move(row));
    }
    Json out = Json::object();
    out["table"] = std::move(t);
    return out;
}

Json abelian_json(const FiniteAbelianGroup& a) {
    Json out = Json::object();
    Json f = Json::array();
    for (const Int& d : a.factors) f.push_back(d.convert_to<long long>());
    out["factors"] = std::move(f);
    return out;
}

Json gmodule_json(const GModule& m) {
    Json out = Json::object();
    out["coeffs"] = abelian_json(m.coeffs);
    Json action = Json::array();
    for (const AbelianHom& h : m.action) action.push_back(matrix_json(h.matrix));
    out["action"] = std::move(action);
    return out;
}

Json factors_json(const FiniteAbelianGroup& g) {
    Json f = Json::array();
    for (const Int& d : g.factors) f.push_back(d.convert_to<long long>());
    return f;
}

}  // namespace

InputDocument parse_document(const Json& j) {
    if (!j.is_object()) schema_fail("$", "expected an object");
    InputDocument doc;
    if (!j.contains("schema") || !j["schema"].is_string()) schema_fail("schema", "missing");
    doc.schema = j["schema"].get<std::string>();
    if (doc.schema != "cohomoforge/1") schema_fail("schema", "unsupported version " + doc.schema);
    if (!j.contains("kind") || !j["kind"].is_string()) schema_fail("kind", "missing");
    doc.kind = j["kind"].get<std::string>();

    if (doc.kind == "group") {
        doc.group = parse_group_payload(j, "group");
    } else if (doc.kind == "abelian") {
        doc.abelian = parse_abelian_payload(j, "abelian");
    } else if (doc.kind == "gmodule") {
        if (!j.contains("group")) schema_fail("group", "missing");
        GroupPtr g = parse_group_payload(j["group"], "group");
        doc.group = g;
        doc.gmodule = parse_gmodule_payload(j, g, "gmodule");
        if (j.contains("subgroup")) doc.subgroup_generators = parse_int_list(j["subgroup"], "subgroup");
    } else if (doc.kind == "liering") {
        if (!j.contains("p") || !j.contains("dim") || !j.contains("bracket"))
            schema_fail("liering", "need 'p', 'dim', 'bracket'");
        int p = static_cast<int>(get_ll(j["p"], "p"));
        int dim = static_cast<int>(get_ll(j["dim"], "dim"));
        const Json& br = j["bracket"];
        if (!br.is_array() || static_cast<int>(br.size()) != dim) schema_fail("bracket", "shape");
        std::vector<int> flat(static_cast<size_t>(dim) * dim * dim);
        for (int a = 0; a < dim; ++a) {
            if (static_cast<int>(br[a].size()) != dim) schema_fail("bracket", "shape");
            for (int b = 0; b < dim; ++b) {
                std::vector<int> v = parse_int_list(br[a][b], "bracket");
                if (static_cast<int>(v.size()) != dim) schema_fail("bracket", "shape");
                for (int k = 0; k < dim; ++k) flat[(static_cast<size_t>(a) * dim + b) * dim + k] = v[k];
            }
        }
        doc.liering = lie_from_flat(p, dim, std::move(flat));
        if (j.contains("module")) {
            const Json& mod = j["module"];
            if (!mod.contains("dim") || !mod.contains("action")) schema_fail("module", "need 'dim' + 'action'");
            int mdim = static_cast<int>(get_ll(mod["dim"], "module.dim"));
            std::vector<FpMat> action;
            for (const Json& m : mod["action"]) action.push_back(parse_fpmat(m, p, "module.action"));
            doc.liemodule = validate_lie_module(*doc.liering, mdim, std::move(action));
        }
        if (j.contains("pmap")) doc.pmap = parse_fpmat(j["pmap"], p, "pmap");
        if (j.contains("ideal")) {
            FpMat rows = parse_fpmat(j["ideal"], p, "ideal");
            doc.ideal = row_space(p, dim, rows);
        }
    } else if (doc.kind == "ses") {
        if (!j.contains("group") || !j.contains("modules") || !j.contains("inj") || !j.contains("surj"))
            schema_fail("ses", "need 'group', 'modules', 'inj', 'surj'");
        GroupPtr g = parse_group_payload(j["group"], "group");
        doc.group = g;
        const Json& mods = j["modules"];
        for (const char* name : {"A", "B", "C"})
            if (!mods.contains(name)) schema_fail("modules", std::string("missing '") + name + "'");
        GModule a = parse_gmodule_payload(mods["A"], g, "modules.A");
        GModule b = parse_gmodule_payload(mods["B"], g, "modules.B");
        GModule c = parse_gmodule_payload(mods["C"], g, "modules.C");
        AbelianHom inj = validate_hom(a.coeffs, b.coeffs, parse_matrix(j["inj"], "inj"));
        AbelianHom surj = validate_hom(b.coeffs, c.coeffs, parse_matrix(j["surj"], "surj"));
        doc.ses = make_ses(std::move(a), std::move(b), std::move(c), std::move(inj), std::move(surj));
    } else if (doc.kind == "battery") {
        doc.battery_catalog = j.contains("catalog") ? j["catalog"].get<std::string>() : "small";
    } else {
        schema_fail("kind", "unknown kind '" + doc.kind + "'");
    }
    return doc;
}

InputDocument parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::schema_error, "cannot read " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::schema_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

Json emit_canonical(const InputDocument& doc) {
    Json out = Json::object();
    out["schema"] = doc.schema;
    out["kind"] = doc.kind;
    if (doc.kind == "group") {
        out["table"] = group_json(*doc.group)["table"];
    } else if (doc.kind == "abelian") {
        out["factors"] = abelian_json(*doc.abelian)["factors"];
    } else if (doc.kind == "gmodule") {
        out["group"] = group_json(*doc.group);
        Json gm = gmodule_json(*doc.gmodule);
        out["coeffs"] = gm["coeffs"];
        out["action"] = gm["action"];
        if (!doc.subgroup_generators.empty()) {
            Json s = Json::array();
            for (int v : doc.subgroup_generators) s.push_back(v);
            out["subgroup"] = std::move(s);
        }
    } else if (doc.kind == "liering") {
        const LieRing& g = *doc.liering;
        out["p"] = g.p;
        out["dim"] = g.dim;
        Json br = Json::array();
        for (int a = 0; a < g.dim; ++a) {
            Json row = Json::array();
            for (int b = 0; b < g.dim; ++b) {
                Json v = Json::array();
                for (int k = 0; k < g.dim; ++k) v.push_back(g.sc(a, b, k));
                row.push_back(std::move(v));
            }
            br.push_back(std::move(row));
        }
        out["bracket"] = std::move(br);
        if (doc.liemodule) {
            Json mod = Json::object();
            mod["dim"] = doc.liemodule->mdim;
            Json action = Json::array();
            for (const FpMat& m : doc.liemodule->action) action.push_back(fpmat_json(m));
            mod["action"] = std::move(action);
            out["module"] = std::move(mod);
        }
        if (doc.pmap) out["pmap"] = fpmat_json(*doc.pmap);
        if (doc.ideal) out["ideal"] = fpmat_json(doc.ideal->basis);
    } else if (doc.kind == "ses") {
        out["group"] = group_json(*doc.group);
        Json mods = Json::object();
        mods["A"] = gmodule_json(doc.ses->left);
        mods["B"] = gmodule_json(doc.ses->middle);
        mods["C"] = gmodule_json(doc.ses->right);
        out["modules"] = std::move(mods);
        out["inj"] = matrix_json(doc.ses->inj.matrix);
        out["surj"] = matrix_json(doc.ses->surj.matrix);
    } else if (doc.kind == "battery") {
        out["catalog"] = doc.battery_catalog.empty() ? "small" : doc.battery_catalog;
    }
    return out;
}

namespace {

ReportEntry hypothesis_entry(const HypothesisCheck& h) {
    ReportEntry e;
    e.id = "hypothesis: " + h.name;
    e.status = "pass";  // evaluating a hypothesis always succeeds; holds is data
    e.data = Json::object();
    e.data["holds"] = h.holds;
    if (!h.witness.empty()) e.data["note"] = h.witness;
    return e;
}

void append_theorem_report(RunReport& out, const TheoremReport& rep, const std::string& conclusion_id) {
    for (const HypothesisCheck& h : rep.hypotheses) out.entries.push_back(hypothesis_entry(h));
    ReportEntry c;
    c.id = conclusion_id;
    c.status = !rep.conclusion_checked ? "skipped" : (rep.conclusion_holds ? "pass" : "fail");
    c.data = Json::object();
    for (const auto& [k, v] : rep.data) c.data[k] = v;
    out.entries.push_back(std::move(c));
}

void append_exactness(RunReport& out, const ExactnessReport& rep) {
    for (const ExactnessNode& n : rep.nodes) {
        ReportEntry e;
        e.id = n.label;
        e.status = n.exact ? "pass" : "fail";
        e.data = Json::object();
        e.data["kernel_order"] = n.ker_order.str();
        e.data["image_order"] = n.im_order.str();
        e.witness = n.witness;
        out.entries.push_back(std::move(e));
    }
}

const GModule& need_gmodule(const InputDocument& doc) {
    if (!doc.gmodule) fail(errc::schema_error, "command needs a gmodule document");
    return *doc.gmodule;
}

}  // namespace

RunReport run_command(const InputDocument& doc, const std::string& command, const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport out;
    out.command = command;
    CohomologyOptions copts;
    copts.degree_cap = opts.degree_cap;
    copts.size_budget = opts.size_budget;

    if (command == "cohomology") {
        const GModule& m = need_gmodule(doc);
        CohomologyGroup h = cohomology_group(m, opts.degree, copts);
        ReportEntry e;
        e.id = "H" + std::to_string(opts.degree);
        e.status = "pass";
        e.data = Json::object();
        e.data["invariant_factors"] = factors_json(h.group);
        e.data["order"] = h.group.order().str();
        out.entries.push_back(std::move(e));
    } else if (command == "h1") {
        const GModule& m = need_gmodule(doc);
        H1Result h = h1_der(m);
        ReportEntry e;
        e.id = "H1";
        e.status = "pass";
        e.data = Json::object();
        e.data["invariant_factors"] = factors_json(h.h1.group);
        e.data["order"] = h.h1.group.order().str();
        e.data["der_order"] = h.der.group.order().str();
        e.data["ider_order"] = h.ider.group.order().str();
        out.entries.push_back(std::move(e));
    } else if (command == "inf-res") {
        const GModule& m = need_gmodule(doc);
        std::vector<int> gens = !opts.subgroup.empty() ? opts.subgroup : doc.subgroup_generators;
        if (gens.empty()) fail(errc::schema_error, "inf-res needs subgroup generators");
        Subgroup h = subgroup_closure(m.group, gens);
        append_exactness(out, check_inf_res_exact(m, h));
    } else if (command == "les") {
        if (!doc.ses) fail(errc::schema_error, "les needs a ses document");
        append_exactness(out, check_long_exact(*doc.ses, opts.max_degree, copts));
    } else if (command == "vanishing") {
        append_theorem_report(out, verify_nilpotent_vanishing(need_gmodule(doc)), "H1 = 0");
    } else if (command == "frattini") {
        if (!doc.group) fail(errc::schema_error, "frattini needs a group document");
        const GroupPtr& g = *doc.group;
        std::vector<Subgroup> subs = enumerate_subgroups(g, opts.order_cap);
        int idx = 0;
        for (const Subgroup& h : subs) {
            if (!is_normal(h) || !is_solvable(subgroup_as_group(h))) continue;
            for (const Subgroup& c : subs) {
                bool inside = true;
                for (int x : c.elements)
                    if (!h.contains(x)) inside = false;
                if (!inside || !is_carter_in(h, c)) continue;
                TheoremReport rep = verify_frattini(g, h, c);
                ReportEntry e;
                e.id = "triple " + std::to_string(idx++) + " |H|=" + std::to_string(h.order()) +
                       " |C|=" + std::to_string(c.order());
                e.status = rep.conclusion_holds ? "pass" : "fail";
                e.data = Json::object();
                for (const HypothesisCheck& hy : rep.hypotheses) e.data[hy.name] = hy.holds;
                for (const auto& [k, v] : rep.data) e.data[k] = v;
                out.entries.push_back(std::move(e));
            }
        }
    } else if (command == "maschke") {
        const GModule& m = need_gmodule(doc);
        MaschkeDecomposition dec = maschke_decompose(m);
        ReportEntry e;
        e.id = "decomposition";
        e.status = dec.certified ? "pass" : "fail";
        e.data = Json::object();
        Json orders = Json::array();
        for (const Submodule& s : dec.summands) orders.push_back(s.order().str());
        e.data["summand_orders"] = std::move(orders);
        out.entries.push_back(std::move(e));
    } else if (command == "schur") {
        append_theorem_report(out, schur_check(need_gmodule(doc)), "centralizer is a field");
    } else if (command == "lie-validate") {
        if (!doc.liering) fail(errc::schema_error, "lie-validate needs a liering document");
        ReportEntry e;
        e.id = "liering";
        e.status = "pass";
        e.data = Json::object();
        e.data["p"] = doc.liering->p;
        e.data["dim"] = doc.liering->dim;
        if (doc.pmap) {
            validate_restricted(*doc.liering, *doc.pmap);
            e.data["restricted"] = true;
        }
        out.entries.push_back(std::move(e));
    } else if (command == "lie-h1" || command == "lie-cohomology") {
        if (!doc.liemodule) fail(errc::schema_error, command + " needs a liering document with a module");
        ReportEntry e;
        if (command == "lie-h1") {
            LieH1 h = lie_h1_der(*doc.liemodule);
            e.id = "H1";
            e.data = Json::object();
            e.data["dim"] = h.h1.dim;
            e.data["der_dim"] = h.der_dim;
            e.data["ider_dim"] = h.ider_dim;
        } else {
            LieCohomology h = ce_cohomology(*doc.liemodule, opts.degree);
            e.id = "H" + std::to_string(opts.degree);
            e.data = Json::object();
            e.data["dim"] = h.dim;
        }
        e.status = "pass";
        out.entries.push_back(std::move(e));
    } else if (command == "lie-inf-res") {
        if (!doc.liemodule || !doc.ideal)
            fail(errc::schema_error, "lie-inf-res needs a liering document with module and ideal");
        append_exactness(out, check_lie_inf_res(*doc.liemodule, *doc.ideal));
    } else if (command == "lie-theorems") {
        if (!doc.liemodule) fail(errc::schema_error, "lie-theorems needs a liering document with a module");
        append_theorem_report(out, verify_lie_theorems(*doc.liemodule, doc.pmap), "lie structure theorems");
    } else if (command == "suite") {
        for (const CriterionResult& c : run_acceptance_battery(nullptr)) {
            ReportEntry e;
            e.id = "criterion " + std::to_string(c.id);
            e.status = c.pass ? "pass" : "fail";
            e.data = Json::object();
            e.data["name"] = c.name;
            e.data["detail"] = c.detail;
            e.data["seconds"] = c.seconds;
            out.entries.push_back(std::move(e));
        }
    } else {
        fail(errc::unknown_command, "unknown command '" + command + "'");
    }

    out.overall = "pass";
    for (const ReportEntry& e : out.entries)
        if (e.status == "fail") out.overall = "fail";
    out.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

Json report_to_json(const RunReport& report) {
    Json out = Json::object();
    out["schema"] = "cohomoforge/report/1";
    out["command"] = report.command;
    Json checks = Json::array();
    for (const ReportEntry& e : report.entries) {
        Json c = Json::object();
        c["id"] = e.id;
        c["status"] = e.status;
        c["data"] = e.data;
        if (!e.witness.empty()) c["witness"] = e.witness;
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    out["overall"] = report.overall;
    out["timing_ms"] = report.timing_ms;
    return out;
}

std::string render_report_text(const RunReport& report) {
    std::ostringstream os;
    os << "cohomoforge " << report.command << "\n";
    for (const ReportEntry& e : report.entries) {
        os << "  [" << e.status << "] " << e.id;
        if (e.data.is_object())
            for (auto it = e.data.begin(); it != e.data.end(); ++it)
                os << "  " << it.key() << "=" << it.value().dump();
        if (!e.witness.empty()) os << "  (" << e.witness << ")";
        os << "\n";
    }
    os << "overall: " << report.overall << " (" << static_cast<long long>(report.timing_ms) << " ms)\n";
    return os.str();
}

}  // namespace cf
