#ifndef ENRIQUES_FORMULA_HPP
#define ENRIQUES_FORMULA_HPP

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

// Condition language over a chosen extraction set split into pools:
//   size(Ti)=n  size(Ti)>=n  Ti={a,b}  member(n,Ti)  subset({a,b},Ti)
//   intersects({a,b},Ti)  min(Ti)<=n  max(Ti)>=n  nonempty(Ti)  true
// combined with and/or/not and parentheses. min/max of an empty pool
// satisfy nothing.
struct FormulaExpr;
using ExprPtr = std::shared_ptr<const FormulaExpr>;

struct FormulaExpr {
    enum class Op {
        True, And, Or, Not,
        SizeEq, SizeGe, SetEq, Member, Subset, Intersects, MinLe, MaxGe, Nonempty
    };
    Op op = Op::True;
    int pool = 0;                 // 1..3 for pool atoms
    int value = 0;                // numeric bound or member label
    std::vector<int> labels;      // literal label set
    std::vector<ExprPtr> kids;
};

ExprPtr parse_condition(const std::string& text);

// The chosen set split by pools: chosen[i] is the selection within pool i+1.
using ChosenPools = std::array<std::set<int>, 3>;

bool eval_condition(const ExprPtr& e, const ChosenPools& chosen);

// Labels literally referenced by the expression, per pool (for validation).
void referenced_labels(const ExprPtr& e, std::array<std::set<int>, 3>& out);

struct TheoremClause {
    std::string guard_src;
    std::string body_src;
    ExprPtr guard;
    ExprPtr body;
};

// Guarded clause list evaluated in document order, first matching guard
// wins; an optional global conjunct applies to every accepted set.
struct TheoremFormula {
    std::optional<std::string> global_src;
    ExprPtr global;  // null when absent
    std::vector<TheoremClause> clauses;
};

struct ClauseOutcome {
    bool guard_matched = false;
    bool accepted = false;
};

ClauseOutcome eval_clauses(const TheoremFormula& f, const ChosenPools& chosen);

} // namespace enriques

#endif
