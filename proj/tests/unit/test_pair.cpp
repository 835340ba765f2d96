#include <doctest.h>

#include "enriques/cases.hpp"
#include "enriques/pair.hpp"

using namespace enriques;

namespace {

CurveVertex black(const std::string& id, int weight) {
    CurveVertex v;
    v.id = id;
    v.weight = weight;
    return v;
}

CurveVertex curve_c(int weight, int nodes = 0) {
    CurveVertex v;
    v.id = "c";
    v.weight = weight;
    v.kind = VertexKind::CurveC;
    v.nodes = nodes;
    return v;
}

WeightedCurveGraph two_vertex(int c_weight, int e_weight) {
    WeightedCurveGraph g;
    g.add_vertex(curve_c(c_weight));
    g.add_vertex(black("e", e_weight));
    g.add_edge(std::size_t(0), 1);
    return g;
}

PairSolution fake_solution(const WeightedCurveGraph& g, const std::vector<Rational>& coeff) {
    PairSolution s;
    s.coeff = coeff;
    if (const auto c = g.curve_c()) s.a = coeff[*c];
    return s;
}

} // namespace

TEST_CASE("solve_pair on two-vertex pairs") {
    SUBCASE("Du Val weights force the zero solution") {
        const auto sol = solve_pair(two_vertex(-2, -2));
        CHECK(sol.a == Rational(0));
        CHECK(sol.coeff[1] == Rational(0));
    }
    SUBCASE("hand-solved 2x2") {
        const auto sol = solve_pair(two_vertex(-3, -2));
        CHECK(sol.a == Rational(2, 5));
        CHECK(sol.coeff[1] == Rational(1, 5));
    }
}

TEST_CASE("solve_pair error modes") {
    SUBCASE("singular square system") {
        WeightedCurveGraph g;
        g.add_vertex(curve_c(0));
        CHECK_THROWS_AS(solve_pair(g), SolveError);
    }
    SUBCASE("inconsistent witness equation") {
        // witness meets a single -2 curve: its equation needs b = 1, but the
        // -2 curve alone solves to b = 0.
        WeightedCurveGraph g;
        g.add_vertex(curve_c(-3));
        g.add_vertex(black("e", -2));
        CurveVertex w;
        w.id = "w";
        w.kind = VertexKind::Witness;
        w.weight = -1;
        g.add_vertex(w);
        g.add_edge("c", "e");
        g.add_edge("w", "e");
        try {
            solve_pair(g);
            FAIL("expected SolveError");
        } catch (const SolveError& e) {
            CHECK(e.kind == SolveError::Kind::InconsistentOverdetermined);
        }
    }
    SUBCASE("no C vertex") {
        WeightedCurveGraph g;
        g.add_vertex(black("e", -2));
        CHECK_THROWS_AS(solve_pair(g), Error);
    }
}

TEST_CASE("solve_pair on the 6-2 figure gives 6/7 with crepant candidates") {
    const auto& rec = *find_bundled_case("6-2");
    const auto sol = solve_pair(rec.figure);
    CHECK(sol.a == Rational(6, 7));
    for (auto v : rec.figure.candidates()) CHECK(sol.coeff[v] == Rational(0));
}

TEST_CASE("witness residuals recorded as zero on minimal-resolution diagrams") {
    const auto& rec = *find_bundled_case("54");
    REQUIRE(rec.theorem_diagram.has_value());
    const auto sol = solve_pair(*rec.theorem_diagram);
    CHECK(sol.a == Rational(6, 7));
    REQUIRE(sol.witness_residuals.size() == 2);
    for (const auto& [id, r] : sol.witness_residuals) {
        (void)id;
        CHECK(r == Rational(0));
    }
}

TEST_CASE("klt verdicts") {
    SUBCASE("single -3 curve") {
        WeightedCurveGraph g;
        g.add_vertex(black("e", -3));
        const auto rep = klt_check(g, {0});
        CHECK(rep.verdict == KltVerdict::Klt);
        REQUIRE(rep.coefficients.size() == 1);
        CHECK(rep.coefficients[0].second == Rational(1, 3));
    }
    SUBCASE("Du Val chain") {
        WeightedCurveGraph g;
        g.add_vertex(black("e1", -2));
        g.add_vertex(black("e2", -2));
        g.add_edge(std::size_t(0), 1);
        const auto rep = klt_check(g, {0, 1});
        CHECK(rep.verdict == KltVerdict::Klt);
        for (const auto& [v, b] : rep.coefficients) {
            (void)v;
            CHECK(b == Rational(0));
        }
    }
    SUBCASE("star of -3 curves is log canonical but not klt") {
        WeightedCurveGraph g;
        g.add_vertex(black("mid", -3));
        for (int i = 0; i < 3; ++i) {
            g.add_vertex(black("l" + std::to_string(i), -3));
            g.add_edge(std::size_t(0), g.size() - 1);
        }
        const auto rep = klt_check(g, {0, 1, 2, 3});
        CHECK(rep.verdict == KltVerdict::LogCanonicalNotKlt);
        CHECK(rep.negative_definite);
        CHECK(rep.coefficients[0].second == Rational(1));
        CHECK(rep.coefficients[1].second == Rational(2, 3));
    }
    SUBCASE("non-contractible") {
        WeightedCurveGraph g;
        g.add_vertex(black("e", 0));
        const auto rep = klt_check(g, {0});
        CHECK(rep.verdict == KltVerdict::NotContractible);
        CHECK_FALSE(rep.negative_definite);
    }
    SUBCASE("empty subset rejected") {
        WeightedCurveGraph g;
        g.add_vertex(black("e", -2));
        CHECK_THROWS_AS(klt_check(g, {}), Error);
    }
}

TEST_CASE("saturation on two-vertex pairs") {
    WeightedCurveGraph g;
    g.add_vertex(black("u", -2));
    g.add_vertex(black("v", -2));
    g.add_edge(std::size_t(0), 1);

    SUBCASE("sum below one: untouched") {
        const auto r = saturate(g, fake_solution(g, {Rational(2, 5), Rational(1, 5)}));
        CHECK(r.blow_ups == 0);
        CHECK(r.graph.size() == 2);
    }
    SUBCASE("sum exactly one: one new candidate") {
        const auto r = saturate(g, fake_solution(g, {Rational(1, 2), Rational(1, 2)}));
        CHECK(r.blow_ups == 1);
        REQUIRE(r.graph.size() == 3);
        CHECK(r.graph.vertex(2).kind == VertexKind::Candidate);
        CHECK(r.solution.coeff[2] == Rational(0));
    }
    SUBCASE("two thirds each: three blow-ups, two candidates") {
        const auto r = saturate(g, fake_solution(g, {Rational(2, 3), Rational(2, 3)}));
        CHECK(r.blow_ups == 3);
        int candidates = 0;
        for (const auto& v : r.graph.vertices())
            if (v.kind == VertexKind::Candidate) ++candidates;
        CHECK(candidates == 2);
        CHECK(completeness_check(r.graph, r.solution));
    }
    SUBCASE("coefficient at one rejected") {
        CHECK_THROWS_AS(saturate(g, fake_solution(g, {Rational(1), Rational(0)})), Error);
    }
}

TEST_CASE("completeness check") {
    WeightedCurveGraph g;
    g.add_vertex(black("u", -2));
    g.add_vertex(black("v", -2));
    g.add_edge(std::size_t(0), 1);
    CHECK_FALSE(completeness_check(g, fake_solution(g, {Rational(1, 2), Rational(1, 2)})));
    CHECK(completeness_check(g, fake_solution(g, {Rational(2, 5), Rational(1, 5)})));

    WeightedCurveGraph one;
    one.add_vertex(black("u", -2));
    CHECK(completeness_check(one, fake_solution(one, {Rational(1, 2)})));

    // sum >= 1 with no exact zero beneath: still complete
    WeightedCurveGraph h;
    h.add_vertex(black("u", -7));
    h.add_vertex(black("v", -2));
    h.add_edge(std::size_t(0), 1);
    const auto sol = fake_solution(h, {Rational(10, 13), Rational(5, 13)});
    CHECK(completeness_check(h, sol));
    CHECK(saturated_edges(h, sol).size() == 1);
}

TEST_CASE("completeness holds on every bundled figure") {
    for (const auto& rec : bundled_cases()) {
        const auto sol = solve_pair(rec.figure);
        CHECK(completeness_check(rec.figure, sol));
    }
}

TEST_CASE("proper transform self-intersection") {
    SUBCASE("contract nothing") {
        const auto g = two_vertex(-14, -2);
        CHECK(proper_transform_self_intersection(g, {}) == Rational(-14));
    }
    SUBCASE("one -2 curve meeting C once") {
        const auto g = two_vertex(-14, -2);
        CHECK(proper_transform_self_intersection(g, {1}) == Rational(-27, 2));
    }
    SUBCASE("not negative definite rejected") {
        const auto g = two_vertex(-14, 0);
        CHECK_THROWS_AS(proper_transform_self_intersection(g, {1}), Error);
    }
    SUBCASE("6-2 with candidates 4 and 5 extracted") {
        const auto& rec = *find_bundled_case("6-2");
        const auto& g = rec.figure;
        std::vector<std::size_t> contracted;
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& vert = g.vertex(v);
            if (vert.kind == VertexKind::CurveC) continue;
            if (vert.kind == VertexKind::Candidate && (vert.label == 4 || vert.label == 5))
                continue;
            contracted.push_back(v);
        }
        // restrict to C's component after removing the extracted candidates
        std::vector<std::size_t> with_c = contracted;
        with_c.push_back(*g.curve_c());
        for (const auto& comp : connected_components(g, with_c)) {
            if (std::find(comp.begin(), comp.end(), *g.curve_c()) == comp.end()) continue;
            std::vector<std::size_t> around;
            for (auto v : comp)
                if (v != *g.curve_c()) around.push_back(v);
            CHECK(proper_transform_self_intersection(g, around) < Rational(0));
        }
    }
}

TEST_CASE("delta counting") {
    SUBCASE("Du Val configuration has none") {
        WeightedCurveGraph g;
        g.add_vertex(curve_c(-2));
        g.add_vertex(black("e", -2));
        g.add_edge(std::size_t(0), 1);
        const auto sol = solve_pair(g);
        CHECK(compute_delta(g, sol, {0, 1}) == 0);
    }
    SUBCASE("every full contraction of a bundled case counts exactly C") {
        for (const auto& rec : bundled_cases()) {
            const auto sol = solve_pair(rec.figure);
            std::vector<std::size_t> all;
            for (std::size_t v = 0; v < rec.figure.size(); ++v) all.push_back(v);
            CHECK(compute_delta(rec.figure, sol, all) == 1);
        }
    }
    SUBCASE("contracted set must contain C") {
        const auto g = two_vertex(-3, -2);
        const auto sol = solve_pair(g);
        CHECK_THROWS_AS(compute_delta(g, sol, {1}), Error);
    }
}

TEST_CASE("toric blow-up discrepancies") {
    CHECK(toric_blowup_discrepancy(1, 1, Rational(1, 2)) == Rational(0));
    CHECK(toric_blowup_discrepancy(1, 1, Rational(0)) == Rational(1));
    CHECK(toric_blowup_discrepancy(2, 3, Rational(4, 5)) == Rational(0));
    CHECK(toric_blowup_discrepancy(3, 4, Rational(1, 2)) == Rational(5, 2));
    CHECK_THROWS_AS(toric_blowup_discrepancy(0, 1, Rational(0)), Error);
    CHECK_THROWS_AS(toric_blowup_discrepancy(1, 1, Rational(1)), Error);
}

TEST_CASE("canonical index is the reduced denominator") {
    CHECK(canonical_index(Rational(6, 7)) == 7);
    CHECK(canonical_index(Rational(15, 17)) == 17);
    CHECK(canonical_index(Rational(1, 2)) == 2);
    CHECK_THROWS_AS(canonical_index(Rational(0)), Error);
    CHECK_THROWS_AS(canonical_index(Rational(1)), Error);
    CHECK_THROWS_AS(canonical_index(Rational(7, 6)), Error);
}

TEST_CASE("blow-up covariance of the pair solution") {
    const auto& rec = *find_bundled_case("52-2");
    const auto& g = rec.figure;
    const auto sol = solve_pair(g);
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        const auto up = blow_up_edge(g, e.first, e.second);
        const auto up_sol = solve_pair(up.graph);
        CHECK(up_sol.a == sol.a);
        for (std::size_t v = 0; v < g.size(); ++v) CHECK(up_sol.coeff[v] == sol.coeff[v]);
        CHECK(up_sol.coeff[up.new_vertex] ==
              sol.coeff[e.first] + sol.coeff[e.second] - Rational(1));
    }
}
