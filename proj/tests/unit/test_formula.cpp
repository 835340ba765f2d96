#include <doctest.h>

#include "enriques/formula.hpp"

using namespace enriques;

namespace {

ChosenPools chosen(std::set<int> t1, std::set<int> t2, std::set<int> t3) {
    return {std::move(t1), std::move(t2), std::move(t3)};
}

bool holds(const std::string& src, const ChosenPools& c) {
    return eval_condition(parse_condition(src), c);
}

} // namespace

TEST_CASE("atoms") {
    const auto c = chosen({1}, {4, 5}, {});
    CHECK(holds("true", c));
    CHECK(holds("size(T1)=1", c));
    CHECK_FALSE(holds("size(T1)=0", c));
    CHECK(holds("size(T2)>=2", c));
    CHECK_FALSE(holds("size(T2)>=3", c));
    CHECK(holds("T1={1}", c));
    CHECK_FALSE(holds("T1={2}", c));
    CHECK(holds("T2={4,5}", c));
    CHECK(holds("member(4,T2)", c));
    CHECK_FALSE(holds("member(9,T2)", c));
    CHECK(holds("subset({4,5},T2)", c));
    CHECK_FALSE(holds("subset({4,7},T2)", c));
    CHECK(holds("intersects({3,4},T2)", c));
    CHECK_FALSE(holds("intersects({3,7},T2)", c));
    CHECK(holds("min(T2)<=4", c));
    CHECK_FALSE(holds("min(T2)<=3", c));
    CHECK(holds("max(T2)>=5", c));
    CHECK_FALSE(holds("max(T2)>=6", c));
    CHECK(holds("nonempty(T2)", c));
    CHECK_FALSE(holds("nonempty(T3)", c));
    // min/max of an empty pool satisfy nothing
    CHECK_FALSE(holds("min(T3)<=99", c));
    CHECK_FALSE(holds("max(T3)>=0", c));
    CHECK(holds("T3={}", c));
}

TEST_CASE("connectives and precedence") {
    const auto c = chosen({}, {4}, {8});
    CHECK(holds("member(4,T2) and member(8,T3)", c));
    CHECK(holds("member(9,T2) or member(8,T3)", c));
    CHECK(holds("not member(9,T2)", c));
    // 'and' binds tighter than 'or'
    CHECK(holds("member(9,T2) or member(4,T2) and member(8,T3)", c));
    CHECK_FALSE(holds("(member(9,T2) or member(4,T2)) and member(9,T3)", c));
    CHECK(holds("not (member(9,T2) and member(8,T3))", c));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_condition(""), Error);
    CHECK_THROWS_AS(parse_condition("member(4,T4)"), Error);
    CHECK_THROWS_AS(parse_condition("size(T1)<2"), Error);
    CHECK_THROWS_AS(parse_condition("member(4,T2) trailing"), Error);
    CHECK_THROWS_AS(parse_condition("subset(4,T2)"), Error);
    CHECK_THROWS_AS(parse_condition("T1={1,}"), Error);
}

TEST_CASE("guarded clause evaluation") {
    TheoremFormula f;
    TheoremClause c1;
    c1.guard_src = "size(T1)=0";
    c1.body_src = "size(T2)>=2 and member(4,T2)";
    c1.guard = parse_condition(c1.guard_src);
    c1.body = parse_condition(c1.body_src);
    TheoremClause c2;
    c2.guard_src = "T1={1}";
    c2.body_src = "intersects({4,5},T2)";
    c2.guard = parse_condition(c2.guard_src);
    c2.body = parse_condition(c2.body_src);
    f.clauses = {c1, c2};
    f.global_src = "nonempty(T2)";
    f.global = parse_condition(*f.global_src);

    SUBCASE("first matching guard wins") {
        const auto r = eval_clauses(f, chosen({}, {4, 5}, {}));
        CHECK(r.guard_matched);
        CHECK(r.accepted);
    }
    SUBCASE("body failure rejects") {
        const auto r = eval_clauses(f, chosen({}, {4}, {}));
        CHECK(r.guard_matched);
        CHECK_FALSE(r.accepted);
    }
    SUBCASE("second guard reachable") {
        const auto r = eval_clauses(f, chosen({1}, {5}, {}));
        CHECK(r.guard_matched);
        CHECK(r.accepted);
    }
    SUBCASE("uncovered guard reported") {
        const auto r = eval_clauses(f, chosen({3}, {4, 5}, {}));
        CHECK_FALSE(r.guard_matched);
        CHECK_FALSE(r.accepted);
    }
    SUBCASE("global conjunct applies") {
        TheoremFormula g = f;
        g.clauses[0].body = parse_condition("true");
        const auto r = eval_clauses(g, chosen({}, {}, {}));
        CHECK(r.guard_matched);
        CHECK_FALSE(r.accepted);  // T2 empty violates the global conjunct
    }
}

TEST_CASE("referenced labels are collected per pool") {
    std::array<std::set<int>, 3> refs;
    referenced_labels(parse_condition("member(4,T2) or (subset({1,3},T1) and T3={8,9})"), refs);
    CHECK(refs[0] == std::set<int>{1, 3});
    CHECK(refs[1] == std::set<int>{4});
    CHECK(refs[2] == std::set<int>{8, 9});
}
