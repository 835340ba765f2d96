#include "enriques/cases.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "enriques/bundled.hpp"
#include "enriques/classify.hpp"
#include "enriques/pair.hpp"

namespace enriques {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key))
            throw Error(where + ": unknown field '" + key + "'");
    }
}

VertexKind parse_kind(const std::string& s, const std::string& where) {
    if (s == "curveC") return VertexKind::CurveC;
    if (s == "exceptional") return VertexKind::Exceptional;
    if (s == "candidate") return VertexKind::Candidate;
    if (s == "witness") return VertexKind::Witness;
    throw Error(where + ": unknown vertex kind '" + s + "'");
}

PoolTag parse_pool(const std::string& s, const std::string& where) {
    if (s == "T1") return PoolTag::T1;
    if (s == "T2") return PoolTag::T2;
    if (s == "T3") return PoolTag::T3;
    throw Error(where + ": unknown pool '" + s + "'");
}

WeightedCurveGraph parse_graph(const json& j, const std::string& where) {
    check_keys(j, {"vertices", "edges"}, where);
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw Error(where + ": missing 'vertices' array");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw Error(where + ": missing 'edges' array");

    WeightedCurveGraph g;
    for (const auto& vj : j.at("vertices")) {
        const std::string vwhere = where + " vertex " + vj.value("id", "?");
        check_keys(vj, {"id", "kind", "weight", "label", "pool", "nodes"}, vwhere);
        CurveVertex v;
        v.id = vj.at("id").get<std::string>();
        v.kind = parse_kind(vj.at("kind").get<std::string>(), vwhere);
        v.weight = vj.at("weight").get<int>();
        if (vj.contains("label")) v.label = vj.at("label").get<int>();
        if (vj.contains("pool")) v.pool = parse_pool(vj.at("pool").get<std::string>(), vwhere);
        if (vj.contains("nodes")) v.nodes = vj.at("nodes").get<int>();
        if (v.kind == VertexKind::Candidate && v.label == 0)
            throw Error(vwhere + ": candidate without label");
        g.add_vertex(std::move(v));
    }
    for (const auto& ej : j.at("edges")) {
        if (!ej.is_array() || ej.size() != 2)
            throw Error(where + ": edge entries must be [\"idA\",\"idB\"]");
        g.add_edge(ej.at(0).get<std::string>(), ej.at(1).get<std::string>(), 1);
    }
    g.check_invariants();
    return g;
}

json graph_to_json(const WeightedCurveGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices()) {
        json vj;
        vj["id"] = v.id;
        vj["kind"] = to_string(v.kind);
        vj["weight"] = v.weight;
        if (v.kind == VertexKind::Candidate) {
            vj["label"] = v.label;
            if (v.pool != PoolTag::None) vj["pool"] = to_string(v.pool);
        }
        if (v.nodes != 0) vj["nodes"] = v.nodes;
        vertices.push_back(std::move(vj));
    }
    json edges = json::array();
    for (const auto& [e, m] : g.edges())
        for (int k = 0; k < m; ++k)
            edges.push_back(json::array({g.vertex(e.first).id, g.vertex(e.second).id}));
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

TheoremFormula parse_formula(const json& j, const std::string& where) {
    check_keys(j, {"global", "clauses"}, where);
    TheoremFormula f;
    if (j.contains("global")) {
        f.global_src = j.at("global").get<std::string>();
        f.global = parse_condition(*f.global_src);
    }
    if (!j.contains("clauses") || !j.at("clauses").is_array() || j.at("clauses").empty())
        throw Error(where + ": formula needs a nonempty 'clauses' array");
    for (const auto& cj : j.at("clauses")) {
        check_keys(cj, {"guard", "body"}, where + " clause");
        TheoremClause clause;
        clause.guard_src = cj.at("guard").get<std::string>();
        clause.body_src = cj.at("body").get<std::string>();
        clause.guard = parse_condition(clause.guard_src);
        clause.body = parse_condition(clause.body_src);
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

} // namespace

CaseRecord parse_case(const json& j, const std::string& source) {
    check_keys(j,
               {"schema", "case_id", "genus_class", "model", "expected", "vertices",
                "edges", "formula", "symmetry", "theorem_diagram", "notes"},
               source);
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw Error(source + ": unsupported schema version");

    CaseRecord rec;
    rec.id = j.at("case_id").get<std::string>();
    const std::string genus = j.at("genus_class").get<std::string>();
    if (genus == "ell") rec.genus = GenusClass::Ell;
    else if (genus == "rational") rec.genus = GenusClass::Rational;
    else throw Error(source + ": genus_class must be 'ell' or 'rational'");
    rec.model = j.value("model", "");

    const json& ej = j.at("expected");
    check_keys(ej, {"a", "index", "rho_min", "rho_max", "identity_constant"},
               source + " expected");
    rec.expected.a = Rational::parse(ej.at("a").get<std::string>());
    rec.expected.index = ej.at("index").get<int>();
    rec.expected.rho_min = ej.at("rho_min").get<int>();
    rec.expected.rho_max = ej.at("rho_max").get<int>();
    rec.expected.identity_constant = ej.at("identity_constant").get<int>();

    rec.figure = parse_graph(json{{"vertices", j.at("vertices")}, {"edges", j.at("edges")}},
                             source + " figure");
    if (j.contains("theorem_diagram"))
        rec.theorem_diagram = parse_graph(j.at("theorem_diagram"), source + " diagram");

    rec.formula = parse_formula(j.at("formula"), source + " formula");

    const std::string sym = j.value("symmetry", "auto");
    if (sym == "auto") rec.symmetry = true;
    else if (sym == "off") rec.symmetry = false;
    else throw Error(source + ": symmetry must be 'auto' or 'off'");

    if (j.contains("notes"))
        for (const auto& n : j.at("notes")) rec.notes.push_back(n.get<std::string>());
    return rec;
}

json case_to_json(const CaseRecord& rec) {
    json j = graph_to_json(rec.figure);
    j["schema"] = 1;
    j["case_id"] = rec.id;
    j["genus_class"] = rec.genus == GenusClass::Ell ? "ell" : "rational";
    j["model"] = rec.model;
    j["expected"] = {{"a", rec.expected.a.str()},
                     {"index", rec.expected.index},
                     {"rho_min", rec.expected.rho_min},
                     {"rho_max", rec.expected.rho_max},
                     {"identity_constant", rec.expected.identity_constant}};
    json formula;
    if (rec.formula.global_src) formula["global"] = *rec.formula.global_src;
    formula["clauses"] = json::array();
    for (const auto& c : rec.formula.clauses)
        formula["clauses"].push_back({{"guard", c.guard_src}, {"body", c.body_src}});
    j["formula"] = std::move(formula);
    j["symmetry"] = rec.symmetry ? "auto" : "off";
    if (rec.theorem_diagram) j["theorem_diagram"] = graph_to_json(*rec.theorem_diagram);
    if (!rec.notes.empty()) j["notes"] = rec.notes;
    return j;
}

CaseRecord load_case(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open case file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("parse error in '" + path + "': " + e.what());
    }
    try {
        return parse_case(j, std::filesystem::path(path).filename().string());
    } catch (const json::exception& e) {
        throw Error("schema error in '" + path + "': " + e.what());
    }
}

WeightedCurveGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("parse error in '" + path + "': " + e.what());
    }
    const std::string name = std::filesystem::path(path).filename().string();
    try {
        if (j.contains("case_id")) return parse_case(j, name).figure;
        return parse_graph(j, name);
    } catch (const json::exception& e) {
        throw Error("schema error in '" + path + "': " + e.what());
    }
}

std::vector<std::string> list_cases(const std::string& directory) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(directory))
        throw Error("not a directory: '" + directory + "'");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<std::string> ids;
    ids.reserve(files.size());
    for (const auto& f : files) ids.push_back(load_case(f).id);
    return ids;
}

const std::vector<CaseRecord>& bundled_cases() {
    static const std::vector<CaseRecord> cases = [] {
        std::vector<CaseRecord> out;
        std::size_t count = 0;
        const auto* files = detail::bundled_files(count);
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            json j;
            try {
                j = json::parse(files[i].text);
            } catch (const json::exception& e) {
                throw Error(std::string("bundled case '") + files[i].name + "': " + e.what());
            }
            out.push_back(parse_case(j, files[i].name));
        }
        return out;
    }();
    return cases;
}

const CaseRecord* find_bundled_case(const std::string& query) {
    const auto& all = bundled_cases();
    for (const auto& rec : all)
        if (rec.id == query) return &rec;
    const CaseRecord* hit = nullptr;
    for (const auto& rec : all) {
        if (rec.id.size() > query.size() && rec.id.compare(0, query.size(), query) == 0 &&
            rec.id[query.size()] == '-') {
            if (hit) return nullptr;  // ambiguous
            hit = &rec;
        }
    }
    return hit;
}

const std::vector<CaseTableRow>& case_table() {
    static const std::vector<CaseTableRow> table = {
        {"6-2-ell", "6/7", -14, 7, 2, 9, 10},
        {"8-1-ell", "8/9", -18, 9, 1, 8, 12},
        {"9-1-ell", "9/10", -20, 10, 1, 5, 12},
        {"22-1-ell", "7/8", -16, 8, 1, 6, 12},
        {"51-2-ell", "10/11", -22, 11, 1, 11, 12},
        {"51-6-ell", "7/8", -16, 8, 1, 6, 12},
        {"52-2-ell", "6/7", -14, 7, 1, 8, 10},
        {"53-2-ell", "8/9", -18, 9, 1, 8, 12},
        {"54-ell", "6/7", -14, 7, 1, 8, 10},
        {"18-1-q1", "12/13", -26, 13, 1, 9, 10},
        {"25-1-q1", "15/17", -17, 17, 1, 6, 6},
        {"55-0", "10/11", -22, 11, 1, 11, 12},
        {"56-0", "6/7", -5, 7, 1, 3, 13},
    };
    return table;
}

namespace {

// Exceptional curves solve to coefficient 0 only over rational double
// points away from C: a component of plain -2 curves not meeting C.
bool du_val_off_c(const WeightedCurveGraph& g, std::size_t v) {
    const auto c = g.curve_c();
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < g.size(); ++i) all.push_back(i);
    for (const auto& comp : connected_components(g, all)) {
        if (std::find(comp.begin(), comp.end(), v) == comp.end()) continue;
        for (auto u : comp) {
            if (c && u == *c) return false;
            if (g.vertex(u).weight != -2) return false;
            if (g.vertex(u).kind == VertexKind::Candidate) return false;
        }
        return true;
    }
    return false;
}

} // namespace

CaseValidation validate_case(const CaseRecord& rec) {
    CaseValidation report;
    auto fail = [&](const std::string& msg) { report.failures.push_back(rec.id + ": " + msg); };
    auto info = [&](const std::string& msg) { report.infos.push_back(rec.id + ": " + msg); };

    const auto& g = rec.figure;
    try {
        g.check_invariants();
    } catch (const Error& e) {
        fail(e.what());
        return report;
    }
    if (!g.curve_c()) {
        fail("figure has no C vertex");
        return report;
    }
    if (g.vertex(*g.curve_c()).nodes != 0)
        fail("figure C must be fully resolved (nodes = 0)");
    for (const auto& v : g.vertices()) {
        if (v.kind == VertexKind::Witness) fail("figure contains witness vertex '" + v.id + "'");
        if (v.kind == VertexKind::Candidate && v.weight != -1)
            fail("candidate '" + v.id + "' has weight " + std::to_string(v.weight) +
                 ", expected -1");
        if (v.kind == VertexKind::Candidate && v.pool == PoolTag::None)
            fail("candidate '" + v.id + "' has no pool tag");
    }

    // Expected-row agreement with the frozen table.
    const CaseTableRow* row = nullptr;
    for (const auto& r : case_table())
        if (rec.id == r.id) row = &r;
    if (row) {
        if (rec.expected.a != Rational::parse(row->a) || rec.expected.index != row->index ||
            rec.expected.rho_min != row->rho_min || rec.expected.rho_max != row->rho_max ||
            rec.expected.identity_constant != row->identity_constant)
            fail("expected block disagrees with the frozen case table");
        if (g.vertex(*g.curve_c()).weight != row->c_weight)
            fail("C self-intersection " + std::to_string(g.vertex(*g.curve_c()).weight) +
                 " differs from table value " + std::to_string(row->c_weight));
    } else {
        info("case id not in the frozen table (user-supplied case)");
    }

    PairSolution sol;
    try {
        sol = solve_pair(g);
    } catch (const Error& e) {
        fail(std::string("figure does not solve: ") + e.what());
        return report;
    }

    if (sol.a != rec.expected.a)
        fail("solved a = " + sol.a.str() + ", expected " + rec.expected.a.str());
    if (sol.a <= Rational(0) || sol.a >= Rational(1))
        fail("solved a out of (0,1)");

    const Rational threshold(6, 7);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& vert = g.vertex(v);
        const auto& b = sol.coeff[v];
        if (vert.kind == VertexKind::Candidate && !b.is_zero())
            fail("candidate '" + vert.id + "' has coefficient " + b.str() + ", expected 0");
        if (vert.kind == VertexKind::Exceptional) {
            if (b.is_zero()) {
                if (!du_val_off_c(g, v))
                    fail("exceptional '" + vert.id + "' has coefficient 0 outside a Du Val "
                         "component off C");
                else
                    info("exceptional '" + vert.id + "' sits over a rational double point off C "
                         "(coefficient 0)");
            } else if (b < Rational(0) || b >= threshold) {
                fail("exceptional '" + vert.id + "' has coefficient " + b.str() +
                     " outside (0, 6/7)");
            }
        }
    }

    try {
        if (!completeness_check(g, sol))
            fail("a discrepancy-0 divisor is missing from the figure");
        for (const auto& [x, y] : saturated_edges(g, sol))
            info("edge " + g.vertex(x).id + "-" + g.vertex(y).id +
                 " has coefficient sum >= 1 (hidden divisors of negative discrepancy only)");
    } catch (const Error& e) {
        fail(std::string("completeness: ") + e.what());
    }

    try {
        if (canonical_index(sol.a) != rec.expected.index)
            fail("canonical index " + std::to_string(canonical_index(sol.a)) +
                 " differs from expected " + std::to_string(rec.expected.index));
    } catch (const Error& e) {
        fail(e.what());
    }

    if (static_cast<int>(g.candidates().size()) != rec.expected.rho_max)
        fail("candidate count " + std::to_string(g.candidates().size()) +
             " differs from rho_max " + std::to_string(rec.expected.rho_max));

    try {
        const Pools pools = candidate_pools(g, rec.genus);
        std::array<std::set<int>, 3> referenced;
        if (rec.formula.global) referenced_labels(rec.formula.global, referenced);
        for (const auto& c : rec.formula.clauses) {
            referenced_labels(c.guard, referenced);
            referenced_labels(c.body, referenced);
        }
        for (int p = 0; p < 3; ++p)
            for (int l : referenced[p])
                if (!pools.by(p + 1).count(l))
                    fail("formula references label " + std::to_string(l) + " outside pool T" +
                         std::to_string(p + 1));
    } catch (const Error& e) {
        fail(std::string("pool cross-check: ") + e.what());
    }

    if (rec.theorem_diagram) {
        try {
            rec.theorem_diagram->check_invariants();
            const auto dsol = solve_pair(*rec.theorem_diagram);
            if (dsol.a != rec.expected.a)
                fail("diagram solves to a = " + dsol.a.str() + ", expected " +
                     rec.expected.a.str());
        } catch (const Error& e) {
            fail(std::string("theorem diagram: ") + e.what());
        }
    }

    return report;
}

} // namespace enriques
