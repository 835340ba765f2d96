#include "enriques/linalg.hpp"

#include <algorithm>

namespace enriques {

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw Error("linalg: fraction-free division was not exact");
    return q;
}

// Clears denominators row by row; row scaling preserves the solution set.
void integerize(const std::vector<std::vector<Rational>>& rows,
                const std::vector<Rational>& rhs,
                std::vector<std::vector<mpz_class>>& a,
                std::vector<mpz_class>& b) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    a.assign(m, std::vector<mpz_class>(n));
    b.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class l = rhs[i].den();
        for (const auto& x : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = rows[i][j].num() * exact_div(l, rows[i][j].den());
        b[i] = rhs[i].num() * exact_div(l, rhs[i].den());
    }
}

} // namespace

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error("SymMatrix: ragged rows");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j < i && rows[i][j] != rows[j][i])
                throw Error("SymMatrix: input not symmetric");
            m.a_[i * m.n_ + j] = rows[i][j];
        }
    }
    return m;
}

LinearSolution solve_linear(const std::vector<std::vector<Rational>>& rows,
                            const std::vector<Rational>& rhs) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw Error("solve_linear: rhs length mismatch");
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw Error("solve_linear: ragged rows");

    std::vector<std::vector<mpz_class>> a;
    std::vector<mpz_class> b;
    integerize(rows, rhs, a, b);

    // Fraction-free elimination with row pivoting; zero columns are skipped
    // and reported as free variables.
    std::vector<std::size_t> pivot_col;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            std::swap(b[p], b[r]);
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a[i][j] = exact_div(a[r][col] * a[i][j] - a[i][col] * a[r][j], prev);
            b[i] = exact_div(a[r][col] * b[i] - a[i][col] * b[r], prev);
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivot_col.push_back(col);
        ++r;
    }

    LinearSolution out;
    out.rank = r;
    for (std::size_t i = r; i < m; ++i) {
        if (b[i] != 0) {
            out.status = SolveStatus::Inconsistent;
            return out;
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    auto back_substitute = [&](const std::vector<Rational>& rhs_r,
                               std::vector<Rational>& x) {
        for (std::size_t k = r; k-- > 0;) {
            const std::size_t c = pivot_col[k];
            Rational sum = rhs_r[k];
            for (std::size_t j = c + 1; j < n; ++j) {
                if (a[k][j] == 0 || x[j].is_zero()) continue;
                sum -= Rational(mpq_class(a[k][j])) * x[j];
            }
            x[c] = sum / Rational(mpq_class(a[k][c]));
        }
    };

    std::vector<Rational> brat(r);
    for (std::size_t k = 0; k < r; ++k) brat[k] = Rational(mpq_class(b[k]));

    out.solution.assign(n, Rational(0));
    back_substitute(brat, out.solution);

    if (r == n) {
        out.status = SolveStatus::Unique;
        return out;
    }
    out.status = SolveStatus::Underdetermined;
    const std::vector<Rational> zero_rhs(r, Rational(0));
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // Free columns left of a pivot column are zero in that pivot row,
        // so presetting v[f] = 1 and back-substituting is enough.
        std::vector<Rational> v(n, Rational(0));
        v[f] = Rational(1);
        back_substitute(zero_rhs, v);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

LinearSolution solve_exact(const SymMatrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.order()) throw Error("solve_exact: dimension mismatch");
    std::vector<std::vector<Rational>> rows(m.order(), std::vector<Rational>(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
    return solve_linear(rows, rhs);
}

bool is_negative_definite(const SymMatrix& m) {
    const std::size_t n = m.order();
    // Positive global scaling preserves all minor signs.
    mpz_class l = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).num() * exact_div(l, m.at(i, j).den());

    // After k Bareiss steps a[k][k] equals the (k+1)-st leading principal
    // minor, so the Sylvester signs fall out of one elimination pass.
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const int want = (k % 2 == 0) ? -1 : 1;
        if (sgn(a[k][k]) != want) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

PivotSignSequence pivot_signs(const SymMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    PivotSignSequence out;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational d = a[k][k];
        if (d.is_zero()) {
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!a[i][j].is_zero()) return out;  // needs a row exchange
            for (std::size_t i = k; i < n; ++i) out.signs.push_back(PivotSign::Zero);
            break;
        }
        out.signs.push_back(d.sign() < 0 ? PivotSign::Negative : PivotSign::Positive);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / d;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    out.determinate = true;
    return out;
}

} // namespace enriques
