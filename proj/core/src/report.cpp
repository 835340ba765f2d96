#include "enriques/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "enriques/version.hpp"

namespace enriques {

using nlohmann::json;

namespace {

json sets_to_json(const std::vector<std::set<int>>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

json pool_to_json(const std::set<int>& s) { return json(s); }

} // namespace

json verdict_to_json(const CaseVerdict& v) {
    json j;
    j["case_id"] = v.case_id;
    j["computed"] = {{"a", v.solved_a.str()},
                     {"index", v.index},
                     {"rho_min", v.rho_min},
                     {"rho_max", v.rho_max},
                     {"admissible_count", v.admissible.size()},
                     {"delta_max", v.delta_max},
                     {"automorphisms", v.automorphism_count}};
    j["pools"] = {{"T1", pool_to_json(v.pools.t1)},
                  {"T2", pool_to_json(v.pools.t2)},
                  {"T3", pool_to_json(v.pools.t3)}};
    j["admissible"] = sets_to_json(v.admissible);
    j["accepted"] = sets_to_json(v.accepted);
    j["diffs"] = {{"only_enumerated", sets_to_json(v.only_enumerated)},
                  {"only_formula", sets_to_json(v.only_formula)}};
    j["agreement"] = {{"sets", v.agreement},
                      {"a", v.a_ok},
                      {"index", v.index_ok},
                      {"rho_range", v.rho_ok},
                      {"completeness", v.completeness_ok},
                      {"delta_all_one", v.delta_all_one},
                      {"proper_transform_negative", v.pt_all_negative},
                      {"t2_nonempty", v.t2_nonempty_ok},
                      {"rank_delta_bounds", v.rank_bounds_ok}};
    j["identity_constant"] = v.identity_constant;
    json edges = json::array();
    for (const auto& [a, b] : v.saturated_edge_ids) edges.push_back(json::array({a, b}));
    j["edges_with_unit_coefficient_sum"] = std::move(edges);
    j["warnings"] = v.warnings;
    j["ok"] = v.ok();
    return j;
}

json build_report(const std::vector<CaseVerdict>& verdicts) {
    const Summary s = invariants_summary(verdicts);
    json cases = json::array();
    for (const auto& v : verdicts) cases.push_back(verdict_to_json(v));
    json summary;
    summary["index_set"] = json(s.index_set);
    summary["cases_total"] = verdicts.size();
    std::size_t agreements = 0;
    for (const auto& v : verdicts)
        if (v.agreement) ++agreements;
    summary["agreements"] = agreements;
    summary["all_ok"] = s.all_ok;
    return json{{"schema", 1},
                {"tool", {{"name", "enriques"}, {"version", ENRIQUES_VERSION}}},
                {"summary", std::move(summary)},
                {"cases", std::move(cases)}};
}

json wrap_report(json payload, long long elapsed_ms) {
    return json{{"payload", std::move(payload)}, {"timing", {{"total_ms", elapsed_ms}}}};
}

std::string render_dot(const WeightedCurveGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (const auto& v : g.vertices()) {
        os << "  \"" << v.id << "\" [";
        switch (v.kind) {
            case VertexKind::CurveC:
                os << "shape=box, label=\"C " << v.weight << "\"";
                break;
            case VertexKind::Candidate:
                os << "shape=doublecircle, label=\"" << v.label << "\"";
                break;
            case VertexKind::Exceptional:
                os << "shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\""
                   << v.weight << "\"";
                break;
            case VertexKind::Witness:
                os << "shape=circle, style=dashed, label=\"" << v.weight << "\"";
                break;
        }
        os << "];\n";
    }
    for (const auto& [e, m] : g.edges())
        for (int k = 0; k < m; ++k)
            os << "  \"" << g.vertex(e.first).id << "\" -- \"" << g.vertex(e.second).id
               << "\";\n";
    os << "}\n";
    return os.str();
}

std::string render_ascii(const WeightedCurveGraph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        os << v.id << " (" << to_string(v.kind);
        if (v.kind == VertexKind::Candidate) os << " #" << v.label;
        os << ", w=" << v.weight;
        if (v.nodes) os << ", nodes=" << v.nodes;
        if (v.pool != PoolTag::None) os << ", " << to_string(v.pool);
        os << ")";
        bool any = false;
        for (const auto& [u, m] : g.neighbors(i)) {
            os << (any ? ", " : " -- ") << g.vertex(u).id;
            if (m > 1) os << " x" << m;
            any = true;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace enriques
