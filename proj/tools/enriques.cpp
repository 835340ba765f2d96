#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "enriques/cases.hpp"
#include "enriques/classify.hpp"
#include "enriques/report.hpp"
#include "enriques/version.hpp"

using namespace enriques;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<CaseRecord> load_selected(const std::string& cases_dir,
                                      const std::string& query, bool all) {
    std::vector<CaseRecord> recs;
    if (!cases_dir.empty()) {
        namespace fs = std::filesystem;
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(cases_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) recs.push_back(load_case(f));
        if (!all) {
            for (auto& r : recs)
                if (r.id == query) return {std::move(r)};
            throw Error("case '" + query + "' not found in " + cases_dir);
        }
        return recs;
    }
    if (all) return bundled_cases();
    const CaseRecord* rec = find_bundled_case(query);
    if (!rec) {
        std::string ids;
        for (const auto& r : bundled_cases()) ids += (ids.empty() ? "" : ", ") + r.id;
        throw Error("unknown or ambiguous case '" + query + "' (bundled: " + ids + ")");
    }
    return {*rec};
}

std::string set_to_string(const std::set<int>& s) {
    std::string out = "{";
    for (int l : s) out += (out.size() > 1 ? "," : "") + std::to_string(l);
    return out + "}";
}

WeightedCurveGraph strip_witnesses(const WeightedCurveGraph& g) {
    WeightedCurveGraph out;
    std::vector<std::size_t> remap(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertex(i).kind != VertexKind::Witness) remap[i] = out.add_vertex(g.vertex(i));
    for (const auto& [e, m] : g.edges())
        if (remap[e.first] != static_cast<std::size_t>(-1) &&
            remap[e.second] != static_cast<std::size_t>(-1))
            out.add_edge(remap[e.first], remap[e.second], m);
    return out;
}

int cmd_verify(const std::string& query, bool all, const std::string& json_path,
               const std::string& cases_dir) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = load_selected(cases_dir, query, all);

    std::vector<CaseVerdict> verdicts;
    bool validation_ok = true;
    for (const auto& rec : recs) {
        const auto validation = validate_case(rec);
        for (const auto& f : validation.failures) {
            std::cout << "VALIDATION FAIL " << f << "\n";
            validation_ok = false;
        }
        try {
            verdicts.push_back(verify_case(rec));
        } catch (const Error& e) {
            std::cout << "VERIFY FAIL " << rec.id << ": " << e.what() << "\n";
            validation_ok = false;
        }
    }

    const Summary summary = invariants_summary(verdicts);
    std::cout << std::left << std::setw(10) << "case" << std::setw(8) << "a"
              << std::setw(4) << "I" << std::setw(8) << "rho" << std::setw(6) << "sets"
              << std::setw(7) << "auts" << "status\n";
    for (const auto& row : summary.rows) {
        std::ostringstream rho;
        rho << row.rho_min << ".." << row.rho_max;
        std::cout << std::left << std::setw(10) << row.case_id << std::setw(8) << row.a
                  << std::setw(4) << row.index << std::setw(8) << rho.str() << std::setw(6)
                  << row.admissible_count << std::setw(7)
                  << verdicts[&row - summary.rows.data()].automorphism_count
                  << (row.ok ? "ok" : "MISMATCH") << "\n";
    }
    std::cout << "index set: {";
    bool first = true;
    for (long i : summary.index_set) {
        std::cout << (first ? "" : ",") << i;
        first = false;
    }
    std::cout << "}\n";

    for (const auto& v : verdicts) {
        for (const auto& t : v.only_enumerated)
            std::cout << v.case_id << ": admissible but not accepted by the condition: "
                      << set_to_string(t) << "\n";
        for (const auto& t : v.only_formula)
            std::cout << v.case_id << ": accepted by the condition but not admissible: "
                      << set_to_string(t) << "\n";
        for (const auto& w : v.warnings) std::cout << "warning: " << w << "\n";
    }

    if (!json_path.empty()) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        std::ofstream out(json_path);
        if (!out) throw Error("cannot write '" + json_path + "'");
        out << wrap_report(build_report(verdicts), elapsed).dump(2) << "\n";
    }
    return summary.all_ok && validation_ok ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const std::string& query, bool list, bool count,
                  const std::string& cases_dir) {
    const auto recs = load_selected(cases_dir, query, false);
    const auto sets = enumerate_admissible(recs.front());
    if (count || !list) std::cout << sets.size() << "\n";
    if (list)
        for (const auto& t : sets) std::cout << set_to_string(t) << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& json_path) {
    const auto g = load_graph_file(graph_path);
    const auto sol = solve_pair(g);
    std::cout << "a = " << sol.a << "\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& vert = g.vertex(v);
        if (vert.kind == VertexKind::CurveC) continue;
        std::cout << vert.id << " = " << sol.coeff[v] << "\n";
    }
    if (!json_path.empty()) {
        json j;
        j["a"] = sol.a.str();
        json coeff;
        for (std::size_t v = 0; v < g.size(); ++v) coeff[g.vertex(v).id] = sol.coeff[v].str();
        j["coefficients"] = std::move(coeff);
        std::ofstream out(json_path);
        if (!out) throw Error("cannot write '" + json_path + "'");
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_klt(const std::string& graph_path, const std::vector<std::string>& subset_ids) {
    const auto g = load_graph_file(graph_path);
    std::vector<std::size_t> subset;
    if (subset_ids.empty()) {
        for (std::size_t v = 0; v < g.size(); ++v) subset.push_back(v);
    } else {
        for (const auto& id : subset_ids) subset.push_back(g.require(id));
    }
    const auto report = klt_check(g, subset);
    std::cout << "verdict: " << to_string(report.verdict) << "\n";
    if (!report.detail.empty()) std::cout << report.detail << "\n";
    for (const auto& [v, b] : report.coefficients)
        std::cout << g.vertex(v).id << " = " << b << "\n";
    return kExitOk;
}

int cmd_saturate(const std::string& graph_path, const std::string& compare_path,
                 bool crepant, bool diagram) {
    WeightedCurveGraph g;
    if (diagram) {
        const auto rec = load_case(graph_path);
        if (!rec.theorem_diagram)
            throw Error("case '" + rec.id + "' has no theorem diagram");
        g = *rec.theorem_diagram;
    } else {
        g = load_graph_file(graph_path);
    }
    const auto sol = solve_pair(g);
    const Saturation result = crepant ? extract_crepant(g, sol) : saturate(g, sol);
    std::cout << (crepant ? "crepant extraction" : "saturation") << ": " << result.blow_ups
              << " blow-ups, " << g.size() << " -> " << result.graph.size() << " vertices\n";
    std::cout << render_ascii(result.graph);
    if (!compare_path.empty()) {
        const auto target = strip_witnesses(load_graph_file(compare_path));
        const auto mine = strip_witnesses(result.graph);
        const auto iso = find_isomorphism(mine, target);
        std::cout << "comparison: " << (iso ? "match (isomorphic)" : "MISMATCH") << "\n";
    }
    return kExitOk;
}

int cmd_delta(const std::string& query, const std::string& cases_dir) {
    const auto recs = load_selected(cases_dir, query, false);
    const auto& rec = recs.front();
    const auto sol = solve_pair(rec.figure);
    const auto sets = enumerate_admissible(rec);
    bool all_one = true;
    for (const auto& t : sets) {
        std::vector<std::size_t> contracted;
        for (std::size_t v = 0; v < rec.figure.size(); ++v) {
            const auto& vert = rec.figure.vertex(v);
            if (vert.kind == VertexKind::Candidate && t.count(vert.label)) continue;
            contracted.push_back(v);
        }
        const int d = compute_delta(rec.figure, sol, contracted);
        std::cout << set_to_string(t) << " -> delta = " << d << "\n";
        all_one = all_one && d == 1;
    }
    std::cout << (all_one ? "all admissible sets give delta = 1" : "DELTA MISMATCH") << "\n";
    return all_one ? kExitOk : kExitMismatch;
}

int cmd_toric(int alpha, int beta, const std::string& coeff) {
    std::cout << toric_blowup_discrepancy(alpha, beta, Rational::parse(coeff)) << "\n";
    return kExitOk;
}

int cmd_render(const std::string& query, const std::string& format,
               const std::string& cases_dir) {
    const auto recs = load_selected(cases_dir, query, false);
    if (format == "dot") std::cout << render_dot(recs.front().figure, recs.front().id);
    else if (format == "ascii") std::cout << render_ascii(recs.front().figure);
    else throw Error("unknown format '" + format + "'");
    return kExitOk;
}

int cmd_cases(const std::string& cases_dir) {
    if (!cases_dir.empty()) {
        for (const auto& id : list_cases(cases_dir)) std::cout << id << "\n";
    } else {
        for (const auto& rec : bundled_cases()) std::cout << rec.id << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the classification of log Enriques "
                 "surfaces with delta = 1"};
    app.set_version_flag("--version", ENRIQUES_VERSION);
    app.require_subcommand(1);

    std::string cases_dir;

    std::string query, json_path, graph_path, compare_path, coeff, format = "dot";
    std::vector<std::string> subset_ids;
    bool all = false, list = false, count = false, crepant = false, diagram = false;
    int alpha = 1, beta = 1;

    const auto add_cases_option = [&cases_dir](CLI::App* cmd) {
        cmd->add_option("--cases", cases_dir, "Directory of case files (default: bundled)");
    };

    auto* verify = app.add_subcommand("verify", "Re-derive and check one case or all");
    add_cases_option(verify);
    verify->add_option("case", query, "Case id (e.g. 6-2-ell, 56-0)");
    verify->add_flag("--all", all, "Verify every case");
    verify->add_option("--json", json_path, "Write the machine-readable report here");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate admissible extraction sets");
    add_cases_option(enumerate);
    enumerate->add_option("case", query)->required();
    enumerate->add_flag("--list", list, "Print the sets");
    enumerate->add_flag("--count", count, "Print the count");

    auto* solve = app.add_subcommand("solve", "Solve the log-pair coefficients of a graph");
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--json", json_path);

    auto* klt = app.add_subcommand("klt", "Contractibility / singularity check");
    klt->add_option("--graph", graph_path)->required();
    klt->add_option("--subset", subset_ids, "Vertex ids (default: all)");

    auto* saturate = app.add_subcommand("saturate", "Blow up until no coefficient sum reaches 1");
    saturate->add_option("--graph", graph_path)->required();
    saturate->add_option("--compare", compare_path, "Compare the result with this graph");
    saturate->add_flag("--crepant", crepant, "Extract only discrepancy-0 divisors");
    saturate->add_flag("--diagram", diagram, "Use the case file's theorem diagram");

    auto* delta = app.add_subcommand("delta", "delta of every admissible extraction");
    add_cases_option(delta);
    delta->add_option("case", query)->required();

    auto* toric = app.add_subcommand("toric", "Weighted blow-up discrepancy");
    toric->add_option("--alpha", alpha)->required();
    toric->add_option("--beta", beta)->required();
    toric->add_option("--coeff", coeff)->required();

    auto* render = app.add_subcommand("render", "Render a case figure");
    add_cases_option(render);
    render->add_option("case", query)->required();
    render->add_option("--format", format, "dot or ascii");

    auto* cases = app.add_subcommand("cases", "List case ids");
    add_cases_option(cases);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (!all && query.empty()) throw Error("verify needs a case id or --all");
            return cmd_verify(query, all, json_path, cases_dir);
        }
        if (enumerate->parsed()) return cmd_enumerate(query, list, count, cases_dir);
        if (solve->parsed()) return cmd_solve(graph_path, json_path);
        if (klt->parsed()) return cmd_klt(graph_path, subset_ids);
        if (saturate->parsed()) return cmd_saturate(graph_path, compare_path, crepant, diagram);
        if (delta->parsed()) return cmd_delta(query, cases_dir);
        if (toric->parsed()) return cmd_toric(alpha, beta, coeff);
        if (render->parsed()) return cmd_render(query, format, cases_dir);
        if (cases->parsed()) return cmd_cases(cases_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
