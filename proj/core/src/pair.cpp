#include "enriques/pair.hpp"

#include <algorithm>
#include <set>

namespace enriques {

namespace {

Rational minus_k_dot(const CurveVertex& v) {
    // -K.v = weight + 2 - 2*nodes
    return Rational(v.weight + 2 - 2 * v.nodes);
}

bool is_unknown(const CurveVertex& v) { return v.kind != VertexKind::Witness; }

} // namespace

const char* to_string(KltVerdict v) {
    switch (v) {
        case KltVerdict::Klt: return "klt";
        case KltVerdict::LogCanonicalNotKlt: return "log-canonical-not-klt";
        case KltVerdict::Worse: return "worse";
        case KltVerdict::NotContractible: return "not-contractible";
    }
    return "?";
}

PairSolution solve_pair(const WeightedCurveGraph& g) {
    g.check_invariants();
    const auto c = g.curve_c();
    if (!c) throw Error("solve_pair: graph has no C vertex");

    std::vector<std::size_t> unknown;  // vertex index per column
    std::vector<std::size_t> col(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (is_unknown(g.vertex(v))) {
            col[v] = unknown.size();
            unknown.push_back(v);
        }
    }

    auto equation_row = [&](std::size_t v) {
        std::vector<Rational> row(unknown.size(), Rational(0));
        if (col[v] != static_cast<std::size_t>(-1))
            row[col[v]] = Rational(g.vertex(v).weight);
        for (const auto& [u, m] : g.neighbors(v))
            if (col[u] != static_cast<std::size_t>(-1))
                row[col[u]] += Rational(m);
        return row;
    };

    // Square subsystem indexed by the unknown vertices themselves.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    rows.reserve(unknown.size());
    for (std::size_t v : unknown) {
        rows.push_back(equation_row(v));
        rhs.push_back(minus_k_dot(g.vertex(v)));
    }
    const auto sol = solve_linear(rows, rhs);
    if (sol.status != SolveStatus::Unique)
        throw SolveError(SolveError::Kind::SingularSquare,
                         "solve_pair: singular square system (bad transcription)");

    PairSolution out;
    out.coeff.assign(g.size(), Rational(0));
    for (std::size_t k = 0; k < unknown.size(); ++k) out.coeff[unknown[k]] = sol.solution[k];
    out.a = out.coeff[*c];

    // Witness rows are consistency checks on the already-determined solution.
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (is_unknown(g.vertex(v))) continue;
        const auto row = equation_row(v);
        Rational residual = -minus_k_dot(g.vertex(v));
        for (std::size_t k = 0; k < row.size(); ++k) residual += row[k] * sol.solution[k];
        out.witness_residuals.emplace_back(g.vertex(v).id, residual);
        if (!residual.is_zero())
            throw SolveError(SolveError::Kind::InconsistentOverdetermined,
                             "solve_pair: witness '" + g.vertex(v).id +
                                 "' equation has residual " + residual.str() +
                                 " (bad transcription or bad witness marking)");
    }
    return out;
}

KltReport klt_check(const WeightedCurveGraph& g, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw Error("klt_check: empty subset");
    KltReport report;
    auto worse = [&](KltVerdict v, const std::string& detail) {
        if (static_cast<int>(v) > static_cast<int>(report.verdict)) {
            report.verdict = v;
            report.detail = detail;
        }
    };
    for (const auto& comp : connected_components(g, subset)) {
        std::string name = "{";
        for (std::size_t i = 0; i < comp.size(); ++i)
            name += (i ? "," : "") + g.vertex(comp[i]).id;
        name += "}";

        const SymMatrix m = intersection_matrix(g, comp);
        if (!is_negative_definite(m)) {
            report.negative_definite = false;
            worse(KltVerdict::NotContractible, "component " + name + " is not negative definite");
            continue;
        }
        std::vector<Rational> rhs(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) rhs[i] = minus_k_dot(g.vertex(comp[i]));
        const auto sol = solve_exact(m, rhs);
        if (sol.status != SolveStatus::Unique)
            throw Error("klt_check: negative definite component solved non-uniquely");

        KltVerdict v = KltVerdict::Klt;
        bool has_one = false;
        for (const auto& x : sol.solution) {
            if (x > Rational(1)) { v = KltVerdict::Worse; break; }
            if (x == Rational(1)) has_one = true;
        }
        if (v == KltVerdict::Klt && has_one) v = KltVerdict::LogCanonicalNotKlt;
        if (v != KltVerdict::Klt) worse(v, "component " + name + " has a coefficient >= 1");
        for (std::size_t i = 0; i < comp.size(); ++i)
            report.coefficients.emplace_back(comp[i], sol.solution[i]);
    }
    std::sort(report.coefficients.begin(), report.coefficients.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return report;
}

namespace {

// Divisors over one intersection point of curves with coefficients x and y:
// the first blow-up carries x + y - 1 and splits the point in two.
bool contains_zero(const Rational& x, const Rational& y, int depth = 0) {
    if (depth > kBlowUpCap) throw Error("completeness: exploration cap exceeded");
    const Rational c = x + y - Rational(1);
    if (c.sign() < 0) return false;
    if (c.is_zero()) return true;
    return contains_zero(x, c, depth + 1) || contains_zero(c, y, depth + 1);
}

bool node_contains_zero(const Rational& a) {
    const Rational c = a + a - Rational(1);
    if (c.sign() < 0) return false;
    if (c.is_zero()) return true;
    return contains_zero(a, c);
}

struct SaturationState {
    WeightedCurveGraph graph;
    std::vector<Rational> coeff;
    int blow_ups = 0;
    int next_label = 0;
    int next_id = 0;

    CurveVertex seed(const Rational& value) {
        CurveVertex v;
        v.id = "s" + std::to_string(++next_id);
        if (value.is_zero()) {
            v.kind = VertexKind::Candidate;
            v.label = ++next_label;
        } else {
            v.kind = VertexKind::Exceptional;
        }
        return v;
    }

    void blow_edge(std::size_t a, std::size_t b) {
        const Rational value = coeff[a] + coeff[b] - Rational(1);
        auto res = blow_up_edge(graph, a, b, seed(value));
        graph = std::move(res.graph);
        coeff.push_back(value);
        ++blow_ups;
        if (blow_ups > kBlowUpCap) throw Error("saturate: blow-up cap exceeded");
    }

    void blow_node() {
        const auto c = graph.curve_c();
        const Rational value = coeff[*c] + coeff[*c] - Rational(1);
        auto res = resolve_node(graph, seed(value));
        graph = std::move(res.graph);
        coeff.push_back(value);
        ++blow_ups;
        if (blow_ups > kBlowUpCap) throw Error("saturate: blow-up cap exceeded");
    }
};

Saturation run_saturation(const WeightedCurveGraph& g, const PairSolution& sol,
                          bool crepant_only) {
    if (sol.coeff.size() != g.size()) throw Error("saturate: solution does not fit graph");
    for (const auto& x : sol.coeff)
        if (x >= Rational(1)) throw Error("saturate: coefficient >= 1");

    SaturationState st{g, sol.coeff};
    for (const auto& v : g.vertices()) st.next_label = std::max(st.next_label, v.label);

    for (;;) {
        const auto c = st.graph.curve_c();
        if (c && st.graph.vertex(*c).nodes > 0) {
            const bool act = crepant_only ? node_contains_zero(st.coeff[*c])
                                          : st.coeff[*c] + st.coeff[*c] >= Rational(1);
            if (act) {
                st.blow_node();
                continue;
            }
        }
        bool acted = false;
        for (const auto& [e, m] : st.graph.edges()) {
            (void)m;
            const Rational sum = st.coeff[e.first] + st.coeff[e.second];
            if (sum < Rational(1)) continue;
            const bool act = crepant_only
                                 ? contains_zero(st.coeff[e.first], st.coeff[e.second])
                                 : true;
            if (act) {
                st.blow_edge(e.first, e.second);
                acted = true;
                break;  // restart from the lexicographically smallest edge
            }
        }
        if (!acted) break;
    }

    PairSolution out;
    out.coeff = std::move(st.coeff);
    if (const auto c = st.graph.curve_c()) out.a = out.coeff[*c];
    out.witness_residuals = sol.witness_residuals;
    return {std::move(st.graph), std::move(out), st.blow_ups};
}

} // namespace

Saturation saturate(const WeightedCurveGraph& g, const PairSolution& sol) {
    return run_saturation(g, sol, /*crepant_only=*/false);
}

Saturation extract_crepant(const WeightedCurveGraph& g, const PairSolution& sol) {
    return run_saturation(g, sol, /*crepant_only=*/true);
}

bool completeness_check(const WeightedCurveGraph& g, const PairSolution& sol) {
    if (sol.coeff.size() != g.size()) throw Error("completeness_check: solution does not fit");
    const auto c = g.curve_c();
    if (c && g.vertex(*c).nodes > 0 && node_contains_zero(sol.coeff[*c])) return false;
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        if (contains_zero(sol.coeff[e.first], sol.coeff[e.second])) return false;
    }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> saturated_edges(
    const WeightedCurveGraph& g, const PairSolution& sol) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        if (sol.coeff[e.first] + sol.coeff[e.second] >= Rational(1)) out.push_back(e);
    }
    return out;
}

Rational proper_transform_self_intersection(const WeightedCurveGraph& g,
                                            const std::vector<std::size_t>& contracted) {
    const auto c = g.curve_c();
    if (!c) throw Error("proper_transform: graph has no C vertex");
    for (auto v : contracted)
        if (v == *c) throw Error("proper_transform: contracted set contains C");
    Rational result(g.vertex(*c).weight);
    if (contracted.empty()) return result;

    const SymMatrix m = intersection_matrix(g, contracted);
    if (!is_negative_definite(m)) throw Error("proper_transform: set not negative definite");
    std::vector<Rational> col(contracted.size());
    for (std::size_t i = 0; i < contracted.size(); ++i)
        col[i] = Rational(-g.multiplicity(contracted[i], *c));
    const auto sol = solve_exact(m, col);
    if (sol.status != SolveStatus::Unique)
        throw Error("proper_transform: unexpected singular system");
    for (std::size_t i = 0; i < contracted.size(); ++i)
        result += Rational(g.multiplicity(contracted[i], *c)) * sol.solution[i];
    return result;
}

namespace {

const Rational kDeltaThreshold(6, 7);

int count_heavy(const Rational& x, const Rational& y, int depth) {
    if (depth > kBlowUpCap) throw Error("compute_delta: exploration cap exceeded");
    const Rational c = x + y - Rational(1);
    if (c < kDeltaThreshold) return 0;
    return 1 + count_heavy(x, c, depth + 1) + count_heavy(c, y, depth + 1);
}

} // namespace

int compute_delta(const WeightedCurveGraph& g, const PairSolution& sol,
                  const std::vector<std::size_t>& contracted) {
    const auto c = g.curve_c();
    if (!c) throw Error("compute_delta: graph has no C vertex");
    const std::set<std::size_t> in(contracted.begin(), contracted.end());
    if (!in.count(*c)) throw Error("compute_delta: contracted set must contain C");

    int count = 0;
    for (auto v : in)
        if (sol.coeff[v] >= kDeltaThreshold) ++count;
    if (g.vertex(*c).nodes > 0) {
        const Rational nodal = sol.coeff[*c] + sol.coeff[*c] - Rational(1);
        if (nodal >= kDeltaThreshold)
            count += 1 + 2 * count_heavy(sol.coeff[*c], nodal, 0);
    }
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        if (in.count(e.first) && in.count(e.second))
            count += count_heavy(sol.coeff[e.first], sol.coeff[e.second], 0);
    }
    return count;
}

Rational toric_blowup_discrepancy(int alpha, int beta, const Rational& a) {
    if (alpha < 1 || beta < 1) throw Error("toric: weights must be positive");
    if (a < Rational(0) || a >= Rational(1)) throw Error("toric: coefficient out of [0,1)");
    return Rational(alpha + beta - 1) - Rational(alpha + beta) * a;
}

long canonical_index(const Rational& a) {
    if (a <= Rational(0) || a >= Rational(1))
        throw Error("canonical_index: coefficient out of (0,1)");
    if (!a.den().fits_slong_p()) throw Error("canonical_index: denominator out of range");
    return a.den().get_si();
}

} // namespace enriques
