#ifndef ENRIQUES_LINALG_HPP
#define ENRIQUES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

// Dense symmetric matrix of rationals. Mutation goes through set(), which
// mirrors the entry, so the symmetry invariant cannot be broken.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : n_(order), a_(order * order) {}

    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t order() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

// Outcome of an exact solve. On Unique, `solution` is the solution.
// On Underdetermined, `solution` is one consistent witness (free variables
// set to zero) and `kernel` spans the solution space of the homogeneous
// system. On Inconsistent, both are empty.
struct LinearSolution {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Rational> solution;
    std::vector<std::vector<Rational>> kernel;
    std::size_t rank = 0;
};

// Fraction-free (Bareiss) elimination over an arbitrary rectangular system.
// rows[i] is one equation, rhs[i] its right-hand side. Residual of any
// returned solution is exactly zero.
LinearSolution solve_linear(const std::vector<std::vector<Rational>>& rows,
                            const std::vector<Rational>& rhs);

LinearSolution solve_exact(const SymMatrix& m, const std::vector<Rational>& rhs);

// Sylvester's criterion: (-1)^k * (k-th leading principal minor) > 0 for all k.
bool is_negative_definite(const SymMatrix& m);

enum class PivotSign { Negative, Zero, Positive };

// Pivot signs of the symmetric triangular (LDL^T) decomposition without row
// exchanges. Used as an independent definiteness oracle: when determinate,
// the matrix is negative definite iff every sign is Negative.
struct PivotSignSequence {
    bool determinate = false;
    std::vector<PivotSign> signs;
};

PivotSignSequence pivot_signs(const SymMatrix& m);

} // namespace enriques

#endif
