#include "chom/workbench.hpp"

#include <sstream>

#include "chom/cotangent.hpp"
#include "chom/derham.hpp"
#include "chom/hochschild.hpp"
#include "chom/mixed_complex.hpp"
#include "chom/parser.hpp"

namespace chom {

namespace {

constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

std::string algebra_display(const Presentation& pres) {
    std::string s = "Q[";
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        if (i) s += ",";
        s += pres.generators[i].name;
    }
    s += "]";
    if (!pres.relations.empty()) {
        s += "/(";
        std::vector<std::string> names = pres.names();
        for (std::size_t i = 0; i < pres.relations.size(); ++i) {
            if (i) s += ", ";
            s += poly_to_string(pres.relations[i], names);
        }
        s += ")";
    }
    return s;
}

Json algebra_json(const Presentation& pres) {
    Json gens = Json::array();
    for (const auto& g : pres.generators) gens.push_back({{"name", g.name}, {"weight", g.weight}});
    Json rels = Json::array();
    std::vector<std::string> names = pres.names();
    for (const auto& f : pres.relations) rels.push_back(poly_to_string(f, names));
    return Json{{"display", algebra_display(pres)}, {"generators", gens}, {"relations", rels}};
}

Json make_table(const std::string& title, const std::string& row_axis, const std::string& col_axis,
                const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels,
                const std::vector<std::vector<long>>& cells) {
    return Json{{"title", title},           {"row_axis", row_axis},   {"col_axis", col_axis},
                {"row_labels", row_labels}, {"col_labels", col_labels}, {"cells", cells}};
}

Json finding(const std::string& check, const std::string& status, const std::string& detail) {
    return Json{{"check", check}, {"status", status}, {"detail", detail}};
}

std::vector<std::string> int_labels(int from, int to, int step = 1) {
    std::vector<std::string> out;
    for (int i = from; step > 0 ? i <= to : i >= to; i += step) out.push_back(std::to_string(i));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

struct Report {
    Json tables = Json::array();
    Json findings = Json::array();
    bool failed = false;

    void add_check(const std::string& check, bool pass, const std::string& detail = "") {
        findings.push_back(finding(check, pass ? "pass" : "fail", detail));
        if (!pass) failed = true;
    }
    void add_info(const std::string& check, const std::string& detail) {
        findings.push_back(finding(check, "info", detail));
    }
};

Report run_hh(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions& opt) {
    Report rep;
    HochschildChains H(A, doc.W, opt.jobs);
    std::vector<std::vector<long>> cells;
    for (int n = 0; n <= doc.n_max; ++n) {
        std::vector<long> row;
        for (int w = 0; w <= doc.W; ++w) row.push_back(H.hh_dim(n, w));
        cells.push_back(row);
    }
    rep.tables.push_back(make_table("hochschild homology dimensions", "n", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), cells));
    return rep;
}

Report run_derham(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions&) {
    Report rep;
    DeRhamAlgebra D(A, doc.n_max, doc.W);
    std::vector<std::vector<long>> dims, coh;
    for (int p = 0; p <= doc.n_max; ++p) {
        std::vector<long> drow, crow;
        for (int w = 0; w <= doc.W; ++w) {
            drow.push_back(D.dim(p, w));
            crow.push_back(D.cohomology_dim(p, w));
        }
        dims.push_back(drow);
        coh.push_back(crow);
    }
    rep.tables.push_back(make_table("de rham form dimensions", "p", "w", int_labels(0, doc.n_max),
                                    int_labels(0, doc.W), dims));
    rep.tables.push_back(make_table("de rham cohomology dimensions", "p", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), coh));
    return rep;
}

Report run_hkr(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions& opt) {
    Report rep;
    HkrReport r = hkr_check(A, doc.n_max, doc.W, opt.jobs);
    std::vector<std::vector<long>> omega(static_cast<std::size_t>(doc.n_max) + 1),
        hh(static_cast<std::size_t>(doc.n_max) + 1);
    for (auto& row : omega) row.assign(static_cast<std::size_t>(doc.W) + 1, 0);
    for (auto& row : hh) row.assign(static_cast<std::size_t>(doc.W) + 1, 0);
    for (const auto& c : r.cells) {
        omega[static_cast<std::size_t>(c.n)][static_cast<std::size_t>(c.w)] = c.omega_dim;
        hh[static_cast<std::size_t>(c.n)][static_cast<std::size_t>(c.w)] = c.hh;
    }
    rep.tables.push_back(make_table("differential form dimensions", "n", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), omega));
    rep.tables.push_back(make_table("hochschild homology dimensions", "n", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), hh));
    rep.add_check("hkr-isomorphism", r.all_pass, join(r.failures, "; "));
    rep.add_check("hkr-multiplicativity", r.multiplicative);
    return rep;
}

Report run_derived_hkr(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions& opt) {
    Report rep;
    DerivedHkrReport r = derived_hkr_check(A, doc.n_max, doc.W, opt.jobs);
    std::vector<std::vector<long>> hh(static_cast<std::size_t>(doc.n_max) + 1),
        sym(static_cast<std::size_t>(doc.n_max) + 1);
    for (auto& row : hh) row.assign(static_cast<std::size_t>(doc.W) + 1, 0);
    for (auto& row : sym) row.assign(static_cast<std::size_t>(doc.W) + 1, 0);
    for (const auto& c : r.cells) {
        hh[static_cast<std::size_t>(c.n)][static_cast<std::size_t>(c.w)] = c.hh;
        sym[static_cast<std::size_t>(c.n)][static_cast<std::size_t>(c.w)] = c.sym_total;
    }
    rep.tables.push_back(make_table("hochschild homology dimensions", "n", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), hh));
    rep.tables.push_back(make_table("sym of shifted cotangent complex dimensions", "n", "w",
                                    int_labels(0, doc.n_max), int_labels(0, doc.W), sym));
    rep.add_check("complete-intersection", r.ci);
    rep.add_check("derived-hkr", r.all_pass, join(r.failures, "; "));
    return rep;
}

Report run_cyclic(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions& opt) {
    Report rep;
    HochschildChains H(A, doc.W, opt.jobs);
    MixedComplex mh = H.to_mixed();
    DeRhamAlgebra D(A, A.num_generators(), doc.W);
    MixedComplex md = derham_mixed(D);
    if (opt.variant == "negative") {
        for (auto [name, m] : {std::pair<const char*, const MixedComplex*>{"hochschild", &mh},
                               {"de rham", &md}}) {
            std::vector<std::vector<long>> cells;
            for (int d = -doc.n_max; d <= doc.n_max; ++d) {
                std::vector<long> row;
                for (int w = 0; w <= doc.W; ++w) row.push_back(negative_cyclic_dim(*m, d, w));
                cells.push_back(row);
            }
            rep.tables.push_back(make_table(std::string("negative cyclic dimensions (") + name + ")",
                                            "d", "w", int_labels(-doc.n_max, doc.n_max),
                                            int_labels(0, doc.W), cells));
        }
    } else {
        for (auto [name, m] : {std::pair<const char*, const MixedComplex*>{"hochschild", &mh},
                               {"de rham", &md}}) {
            std::vector<std::vector<long>> cells;
            for (Parity par : {Parity::Even, Parity::Odd}) {
                std::vector<long> row;
                for (int w = 0; w <= doc.W; ++w) row.push_back(periodic_dim(*m, par, w));
                cells.push_back(row);
            }
            rep.tables.push_back(make_table(std::string("periodic dimensions (") + name + ")",
                                            "parity", "w", {"even", "odd"}, int_labels(0, doc.W),
                                            cells));
        }
    }
    return rep;
}

Report run_ext_ku(const RunOptions& opt) {
    Report rep;
    MixedComplex m = MixedComplex::unit();
    std::vector<std::vector<long>> cells;
    bool pattern = true;
    for (int d = 0; d >= -opt.ext_max; --d) {
        int dim = negative_cyclic_dim(m, d, 0);
        cells.push_back({dim});
        if (dim != (d % 2 == 0 ? 1 : 0)) pattern = false;
    }
    rep.tables.push_back(
        make_table("ext over k[eps] of (k, k)", "d", "", int_labels(0, -opt.ext_max, -1), {"dim"},
                   cells));
    rep.add_check("k-u-pattern", pattern,
                  "dimension 1 at even degrees 0 >= d >= -" + std::to_string(opt.ext_max) +
                      ", 0 at odd");
    return rep;
}

Report run_b_suite(const GradedAlgebra& A, const AlgebraDocument& doc, const RunOptions&) {
    Report rep;
    BSuiteReport r = b_compatibility_suite(A, doc.n_max, doc.W);
    if (r.chain_defect) {
        const auto& d = *r.chain_defect;
        rep.add_info("chain-level-defect",
                     "B fails the Leibniz rule on basis chains C_{" + std::to_string(d.p) + "," +
                         std::to_string(d.v) + "}[" + std::to_string(d.ui) + "] x C_{" +
                         std::to_string(d.q) + "," + std::to_string(d.u) + "}[" +
                         std::to_string(d.vi) + "]; " + std::to_string(r.defect_count) +
                         " defective pairs in range");
    } else {
        rep.add_info("chain-level-defect", "no defective pair in the searched range");
    }
    rep.add_check("cycle-defects-are-boundaries", r.cycle_defects_are_boundaries,
                  std::to_string(r.cycle_pairs_tested) + " cycle pairs tested");
    std::vector<std::string> ls;
    for (std::size_t n = 0; n < r.lambda.size(); ++n)
        ls.push_back("lambda_" + std::to_string(n) + " = " +
                     (r.lambda[n] ? r.lambda[n]->get_str() : std::string("undetermined")));
    rep.add_info("comparison-constants", join(ls, ", "));
    rep.add_check("lambda-consistency", r.lambda_consistent, join(r.notes, "; "));
    return rep;
}

}  // namespace

AlgebraDocument load_algebra(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("input document must be a JSON object");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw Error("input document needs a \"generators\" array");
    AlgebraDocument doc;
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string() ||
            !g.contains("weight") || !g["weight"].is_number_integer())
            throw Error("each generator needs a string \"name\" and an integer \"weight\"");
        doc.pres.generators.push_back({g["name"].get<std::string>(), g["weight"].get<int>()});
    }
    std::vector<std::string> names = doc.pres.names();
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw Error("\"relations\" must be an array of strings");
        for (const auto& r : j["relations"]) {
            if (!r.is_string()) throw Error("\"relations\" must be an array of strings");
            doc.pres.relations.push_back(parse_poly(r.get<std::string>(), names));
        }
    }
    if (j.contains("caps")) {
        const auto& c = j["caps"];
        if (!c.is_object()) throw Error("\"caps\" must be an object");
        if (c.contains("max_degree")) doc.n_max = c["max_degree"].get<int>();
        if (c.contains("max_weight")) doc.W = c["max_weight"].get<int>();
    }
    if (doc.n_max < 0 || doc.W < 0) throw Error("caps must be non-negative");
    return doc;
}

RunResult run(const std::string& command, const AlgebraDocument& doc, const RunOptions& opt) {
    Report rep;
    if (command == "ext-ku") {
        rep = run_ext_ku(opt);
    } else {
        GradedAlgebra A(doc.pres, doc.W);
        if (command == "hh")
            rep = run_hh(A, doc, opt);
        else if (command == "derham")
            rep = run_derham(A, doc, opt);
        else if (command == "hkr-check")
            rep = run_hkr(A, doc, opt);
        else if (command == "derived-hkr-check")
            rep = run_derived_hkr(A, doc, opt);
        else if (command == "cyclic")
            rep = run_cyclic(A, doc, opt);
        else if (command == "b-suite")
            rep = run_b_suite(A, doc, opt);
        else
            throw Error("unknown command: " + command);
    }

    RunResult res;
    res.output = Json{{"version", kVersion},
                      {"algebra", algebra_json(doc.pres)},
                      {"command", command},
                      {"caps", Json{{"max_degree", doc.n_max}, {"max_weight", doc.W}}},
                      {"tables", rep.tables},
                      {"findings", rep.findings}};
    if (command == "cyclic") res.output["variant"] = opt.variant;
    res.exit_code = rep.failed ? 1 : 0;
    return res;
}

std::string render_markdown(const nlohmann::ordered_json& output) {
    std::ostringstream os;
    os << "# " << output["command"].get<std::string>() << " — "
       << output["algebra"]["display"].get<std::string>() << "\n\n";
    os << "caps: max degree " << output["caps"]["max_degree"].get<int>() << ", max weight "
       << output["caps"]["max_weight"].get<int>() << "\n";
    for (const auto& t : output["tables"]) {
        os << "\n## " << t["title"].get<std::string>() << "\n\n";
        os << "| " << t["row_axis"].get<std::string>();
        if (!t["col_axis"].get<std::string>().empty()) os << " \\ " << t["col_axis"].get<std::string>();
        os << " |";
        for (const auto& c : t["col_labels"]) os << " " << c.get<std::string>() << " |";
        os << "\n|---|";
        for (std::size_t i = 0; i < t["col_labels"].size(); ++i) os << "---|";
        os << "\n";
        for (std::size_t r = 0; r < t["cells"].size(); ++r) {
            os << "| " << t["row_labels"][r].get<std::string>() << " |";
            for (const auto& v : t["cells"][r]) os << " " << v.get<long>() << " |";
            os << "\n";
        }
    }
    if (!output["findings"].empty()) {
        os << "\n## findings\n\n";
        for (const auto& f : output["findings"]) {
            os << "- [" << f["status"].get<std::string>() << "] " << f["check"].get<std::string>();
            std::string d = f["detail"].get<std::string>();
            if (!d.empty()) os << ": " << d;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace chom
