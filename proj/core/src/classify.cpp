#include "enriques/classify.hpp"

#include <algorithm>
#include <map>

namespace enriques {

Pools candidate_pools(const WeightedCurveGraph& g, GenusClass genus) {
    const auto c = g.curve_c();
    if (!c) throw Error("candidate_pools: graph has no C vertex");

    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (v != *c) rest.push_back(v);

    Pools computed;
    for (const auto& comp : connected_components(g, rest)) {
        int attach = 0;
        std::vector<std::size_t> cand;
        for (auto v : comp) {
            attach += g.multiplicity(v, *c);
            if (g.vertex(v).kind == VertexKind::Candidate) cand.push_back(v);
        }
        if (cand.empty()) continue;

        PoolTag computed_tag;
        if (genus == GenusClass::Ell) {
            computed_tag = attach >= 2 ? PoolTag::T2 : (attach == 1 ? PoolTag::T1 : PoolTag::T3);
        } else {
            // Branch = one of the three marked points; the stored tag names
            // which one. All candidates of a branch must agree.
            if (attach == 0)
                throw Error("candidate_pools: pool-mismatch: candidate component not attached "
                            "to C in a rational case");
            computed_tag = g.vertex(cand.front()).pool;
            if (computed_tag == PoolTag::None)
                throw Error("candidate_pools: pool-mismatch: untagged candidate '" +
                            g.vertex(cand.front()).id + "'");
        }
        for (auto v : cand) {
            if (g.vertex(v).pool != computed_tag)
                throw Error("candidate_pools: pool-mismatch: candidate '" + g.vertex(v).id +
                            "' tagged " + to_string(g.vertex(v).pool) + ", derived " +
                            to_string(computed_tag));
            switch (computed_tag) {
                case PoolTag::T1: computed.t1.insert(g.vertex(v).label); break;
                case PoolTag::T2: computed.t2.insert(g.vertex(v).label); break;
                case PoolTag::T3: computed.t3.insert(g.vertex(v).label); break;
                case PoolTag::None: break;
            }
        }
    }

    if (genus == GenusClass::Rational) {
        // Distinct branches may not share a pool number.
        std::map<PoolTag, std::set<std::size_t>> seen;
        for (const auto& comp : connected_components(g, rest)) {
            PoolTag tag = PoolTag::None;
            for (auto v : comp)
                if (g.vertex(v).kind == VertexKind::Candidate) tag = g.vertex(v).pool;
            if (tag == PoolTag::None) continue;
            auto& bucket = seen[tag];
            bucket.insert(comp.front());
            if (bucket.size() > 1)
                throw Error("candidate_pools: pool-mismatch: two branches share pool " +
                            std::string(to_string(tag)));
        }
    }
    return computed;
}

ChosenPools split_by_pools(const Pools& pools, const std::set<int>& members) {
    ChosenPools out;
    for (int l : members) {
        if (pools.t1.count(l)) out[0].insert(l);
        else if (pools.t2.count(l)) out[1].insert(l);
        else if (pools.t3.count(l)) out[2].insert(l);
        else throw Error("split_by_pools: label " + std::to_string(l) + " not in any pool");
    }
    return out;
}

Admissibility is_admissible(const WeightedCurveGraph& g, const std::set<int>& members) {
    std::vector<std::size_t> complement;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& vert = g.vertex(v);
        if (vert.kind == VertexKind::Candidate && members.count(vert.label)) continue;
        complement.push_back(v);
    }
    const KltReport report = klt_check(g, complement);
    Admissibility out;
    out.verdict = report.verdict;
    out.admissible = report.verdict == KltVerdict::Klt;
    out.detail = report.detail;
    return out;
}

namespace {

std::vector<int> sorted_labels(const WeightedCurveGraph& g) {
    std::vector<int> labels;
    for (auto v : g.candidates()) labels.push_back(g.vertex(v).label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

} // namespace

std::vector<std::set<int>> enumerate_admissible(const CaseRecord& rec) {
    const auto labels = sorted_labels(rec.figure);
    if (labels.size() > 20) throw Error("enumerate_admissible: too many candidates");
    std::vector<std::set<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << labels.size()); ++mask) {
        std::set<int> members;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (mask & (1u << i)) members.insert(labels[i]);
        if (is_admissible(rec.figure, members).admissible) out.push_back(std::move(members));
    }
    return out;
}

bool eval_formula(const CaseRecord& rec, const Pools& pools,
                  const std::vector<GraphMorphism>& auts, const std::set<int>& members,
                  std::vector<std::string>* warnings) {
    bool any_guard = false;
    for (const auto& sigma : auts) {
        const std::set<int> image = apply_to_labels(rec.figure, sigma, members);
        const auto outcome = eval_clauses(rec.formula, split_by_pools(pools, image));
        any_guard = any_guard || outcome.guard_matched;
        if (outcome.guard_matched && outcome.accepted) return true;
    }
    if (!any_guard && warnings) {
        std::string set = "{";
        for (int l : members) set += (set.size() > 1 ? "," : "") + std::to_string(l);
        warnings->push_back(rec.id + ": no guard covers " + set + "}");
    }
    return false;
}

CaseVerdict verify_case(const CaseRecord& rec) {
    CaseVerdict v;
    v.case_id = rec.id;
    v.identity_constant = rec.expected.identity_constant;
    v.pools = candidate_pools(rec.figure, rec.genus);

    const auto& g = rec.figure;
    const PairSolution sol = solve_pair(g);
    v.solved_a = sol.a;
    v.a_ok = sol.a == rec.expected.a;
    v.index = canonical_index(sol.a);
    v.index_ok = v.index == rec.expected.index;
    v.completeness_ok = completeness_check(g, sol);
    for (const auto& [x, y] : saturated_edges(g, sol))
        v.saturated_edge_ids.emplace_back(g.vertex(x).id, g.vertex(y).id);

    const auto auts = rec.symmetry ? automorphisms(g)
                                   : std::vector<GraphMorphism>{GraphMorphism{[&] {
                                         std::vector<std::size_t> id(g.size());
                                         for (std::size_t i = 0; i < g.size(); ++i) id[i] = i;
                                         return id;
                                     }()}};
    v.automorphism_count = auts.size();

    v.admissible = enumerate_admissible(rec);

    const auto labels = sorted_labels(g);
    for (std::uint32_t mask = 0; mask < (1u << labels.size()); ++mask) {
        std::set<int> members;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (mask & (1u << i)) members.insert(labels[i]);
        if (eval_formula(rec, v.pools, auts, members, &v.warnings))
            v.accepted.push_back(std::move(members));
    }

    {
        // Enumeration and acceptance both run in binary-counting order,
        // which is not the sets' lexicographic order; sort copies to diff.
        auto adm = v.admissible;
        auto acc = v.accepted;
        std::sort(adm.begin(), adm.end());
        std::sort(acc.begin(), acc.end());
        std::set_difference(adm.begin(), adm.end(), acc.begin(), acc.end(),
                            std::back_inserter(v.only_enumerated));
        std::set_difference(acc.begin(), acc.end(), adm.begin(), adm.end(),
                            std::back_inserter(v.only_formula));
    }
    v.agreement = v.only_enumerated.empty() && v.only_formula.empty();

    v.rho_min = 0;
    v.rho_max = 0;
    bool first = true;
    for (const auto& t : v.admissible) {
        if (t.empty()) continue;  // rho counts extracted curves; empty never admissible anyway
        const int size = static_cast<int>(t.size());
        if (first) {
            v.rho_min = v.rho_max = size;
            first = false;
        } else {
            v.rho_min = std::min(v.rho_min, size);
            v.rho_max = std::max(v.rho_max, size);
        }
    }
    v.rho_ok = !first && v.rho_min == rec.expected.rho_min && v.rho_max == rec.expected.rho_max;

    const auto c = *g.curve_c();
    v.delta_all_one = true;
    v.pt_all_negative = true;
    v.t2_nonempty_ok = true;
    v.rank_bounds_ok = true;
    for (const auto& t : v.admissible) {
        std::vector<std::size_t> contracted;
        for (std::size_t u = 0; u < g.size(); ++u) {
            const auto& vert = g.vertex(u);
            if (vert.kind == VertexKind::Candidate && t.count(vert.label)) continue;
            contracted.push_back(u);
        }
        const int delta = compute_delta(g, sol, contracted);
        v.delta_max = std::max(v.delta_max, delta);
        if (delta != 1) v.delta_all_one = false;

        // Self-intersection of the image of C inside its residual component.
        for (const auto& comp : connected_components(g, contracted)) {
            if (std::find(comp.begin(), comp.end(), c) == comp.end()) continue;
            std::vector<std::size_t> around_c;
            for (auto u : comp)
                if (u != c) around_c.push_back(u);
            if (proper_transform_self_intersection(g, around_c) >= Rational(0))
                v.pt_all_negative = false;
        }

        if (rec.genus == GenusClass::Ell) {
            const auto chosen = split_by_pools(v.pools, t);
            if (chosen[1].empty()) v.t2_nonempty_ok = false;
        }
        const int rank = rec.expected.identity_constant - static_cast<int>(t.size());
        if (rank < 0 || rank > 19) v.rank_bounds_ok = false;
    }
    return v;
}

Summary invariants_summary(const std::vector<CaseVerdict>& verdicts) {
    Summary s;
    s.all_ok = true;
    for (const auto& v : verdicts) {
        SummaryRow row;
        row.case_id = v.case_id;
        row.a = v.solved_a.str();
        row.index = v.index;
        row.rho_min = v.rho_min;
        row.rho_max = v.rho_max;
        row.identity_constant = v.identity_constant;
        row.admissible_count = v.admissible.size();
        row.ok = v.ok();
        s.rows.push_back(std::move(row));
        s.index_set.insert(v.index);
        s.all_ok = s.all_ok && v.ok();
    }
    return s;
}

} // namespace enriques
