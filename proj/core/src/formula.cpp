#include "enriques/formula.hpp"

#include <cctype>

namespace enriques {

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("condition '" + src + "' at " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (src.compare(pos, tok.size(), tok) == 0) {
            // keywords must not run into an identifier tail
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                const std::size_t end = pos + tok.size();
                if (end < src.size() &&
                    (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                    return false;
            }
            pos += tok.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& tok) {
        if (!eat(tok)) fail("expected '" + tok + "'");
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(src.substr(start, pos - start));
    }

    int pool_name() {
        skip_ws();
        for (int i = 1; i <= 3; ++i)
            if (eat("T" + std::to_string(i))) return i;
        fail("expected T1, T2 or T3");
    }

    std::vector<int> label_set() {
        expect("{");
        std::vector<int> out;
        skip_ws();
        if (eat("}")) return out;
        out.push_back(integer());
        while (eat(",")) out.push_back(integer());
        expect("}");
        return out;
    }

    ExprPtr make(FormulaExpr e) { return std::make_shared<FormulaExpr>(std::move(e)); }

    ExprPtr parse_or() {
        auto lhs = parse_and();
        while (eat("or")) {
            FormulaExpr e;
            e.op = FormulaExpr::Op::Or;
            e.kids = {lhs, parse_and()};
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_and() {
        auto lhs = parse_not();
        while (eat("and")) {
            FormulaExpr e;
            e.op = FormulaExpr::Op::And;
            e.kids = {lhs, parse_not()};
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (eat("not")) {
            FormulaExpr e;
            e.op = FormulaExpr::Op::Not;
            e.kids = {parse_not()};
            return make(std::move(e));
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (eat("(")) {
            auto e = parse_or();
            expect(")");
            return e;
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        FormulaExpr e;
        if (eat("true")) {
            e.op = FormulaExpr::Op::True;
            return make(std::move(e));
        }
        if (eat("size")) {
            expect("(");
            e.pool = pool_name();
            expect(")");
            if (eat(">=")) e.op = FormulaExpr::Op::SizeGe;
            else if (eat("=")) e.op = FormulaExpr::Op::SizeEq;
            else fail("expected '=' or '>=' after size()");
            e.value = integer();
            return make(std::move(e));
        }
        if (eat("member")) {
            expect("(");
            e.op = FormulaExpr::Op::Member;
            e.value = integer();
            expect(",");
            e.pool = pool_name();
            expect(")");
            return make(std::move(e));
        }
        if (eat("subset")) {
            expect("(");
            e.op = FormulaExpr::Op::Subset;
            e.labels = label_set();
            expect(",");
            e.pool = pool_name();
            expect(")");
            return make(std::move(e));
        }
        if (eat("intersects")) {
            expect("(");
            e.op = FormulaExpr::Op::Intersects;
            e.labels = label_set();
            expect(",");
            e.pool = pool_name();
            expect(")");
            return make(std::move(e));
        }
        if (eat("min")) {
            expect("(");
            e.op = FormulaExpr::Op::MinLe;
            e.pool = pool_name();
            expect(")");
            expect("<=");
            e.value = integer();
            return make(std::move(e));
        }
        if (eat("max")) {
            expect("(");
            e.op = FormulaExpr::Op::MaxGe;
            e.pool = pool_name();
            expect(")");
            expect(">=");
            e.value = integer();
            return make(std::move(e));
        }
        if (eat("nonempty")) {
            expect("(");
            e.op = FormulaExpr::Op::Nonempty;
            e.pool = pool_name();
            expect(")");
            return make(std::move(e));
        }
        // Ti={...} set equality
        skip_ws();
        const std::size_t save = pos;
        if (pos < src.size() && src[pos] == 'T') {
            e.pool = pool_name();
            if (eat("=")) {
                e.op = FormulaExpr::Op::SetEq;
                e.labels = label_set();
                return make(std::move(e));
            }
            pos = save;
        }
        fail("expected an atom");
    }
};

} // namespace

ExprPtr parse_condition(const std::string& text) {
    Parser p(text);
    auto e = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

bool eval_condition(const ExprPtr& e, const ChosenPools& chosen) {
    using Op = FormulaExpr::Op;
    const auto& pool = [&]() -> const std::set<int>& { return chosen[e->pool - 1]; };
    switch (e->op) {
        case Op::True: return true;
        case Op::And: return eval_condition(e->kids[0], chosen) && eval_condition(e->kids[1], chosen);
        case Op::Or: return eval_condition(e->kids[0], chosen) || eval_condition(e->kids[1], chosen);
        case Op::Not: return !eval_condition(e->kids[0], chosen);
        case Op::SizeEq: return pool().size() == static_cast<std::size_t>(e->value);
        case Op::SizeGe: return pool().size() >= static_cast<std::size_t>(e->value);
        case Op::SetEq: {
            std::set<int> s(e->labels.begin(), e->labels.end());
            return pool() == s;
        }
        case Op::Member: return pool().count(e->value) != 0;
        case Op::Subset: {
            for (int l : e->labels)
                if (!pool().count(l)) return false;
            return true;
        }
        case Op::Intersects: {
            for (int l : e->labels)
                if (pool().count(l)) return true;
            return false;
        }
        case Op::MinLe: return !pool().empty() && *pool().begin() <= e->value;
        case Op::MaxGe: return !pool().empty() && *pool().rbegin() >= e->value;
        case Op::Nonempty: return !pool().empty();
    }
    throw Error("eval_condition: bad expression");
}

void referenced_labels(const ExprPtr& e, std::array<std::set<int>, 3>& out) {
    using Op = FormulaExpr::Op;
    switch (e->op) {
        case Op::Member:
            out[e->pool - 1].insert(e->value);
            break;
        case Op::SetEq:
        case Op::Subset:
        case Op::Intersects:
            for (int l : e->labels) out[e->pool - 1].insert(l);
            break;
        default:
            break;
    }
    for (const auto& k : e->kids) referenced_labels(k, out);
}

ClauseOutcome eval_clauses(const TheoremFormula& f, const ChosenPools& chosen) {
    ClauseOutcome out;
    for (const auto& clause : f.clauses) {
        if (!eval_condition(clause.guard, chosen)) continue;
        out.guard_matched = true;
        out.accepted = eval_condition(clause.body, chosen) &&
                       (!f.global || eval_condition(f.global, chosen));
        return out;
    }
    return out;
}

} // namespace enriques
