#ifndef ENRIQUES_PAIR_HPP
#define ENRIQUES_PAIR_HPP

#include <string>
#include <utility>
#include <vector>

#include "enriques/graph.hpp"

namespace enriques {

// Coefficients of the numerically trivial log pair on a configuration:
// for every vertex v,   sum_u coeff_u (u.v) = -K.v,
// with witness vertices held at coefficient 0. `a` is the coefficient of C.
struct PairSolution {
    Rational a;
    std::vector<Rational> coeff;  // one entry per vertex, graph order
    std::vector<std::pair<std::string, Rational>> witness_residuals;  // all zero
};

class SolveError : public Error {
public:
    enum class Kind { SingularSquare, InconsistentOverdetermined };
    SolveError(Kind k, const std::string& what) : Error(what), kind(k) {}
    Kind kind;
};

// Solves for the coefficient of C and of every exceptional/candidate vertex.
// Witness vertices add consistency equations only; a nonzero witness residual
// or a singular square system signals a transcription bug and throws.
PairSolution solve_pair(const WeightedCurveGraph& g);

enum class KltVerdict { Klt, LogCanonicalNotKlt, Worse, NotContractible };

const char* to_string(KltVerdict v);

struct KltReport {
    KltVerdict verdict = KltVerdict::Klt;
    bool negative_definite = true;
    // (vertex, coefficient) for vertices in contractible components.
    std::vector<std::pair<std::size_t, Rational>> coefficients;
    std::string detail;  // names the worst component on failure
};

// Contractibility + singularity type of the configuration induced by
// `subset`, per connected component: negative definite with all solved
// coefficients < 1 means klt. Aggregate verdict is the worst component's.
KltReport klt_check(const WeightedCurveGraph& g, const std::vector<std::size_t>& subset);

struct Saturation {
    WeightedCurveGraph graph;
    PairSolution solution;
    int blow_ups = 0;
};

inline constexpr int kBlowUpCap = 10000;

// Blows up every edge whose endpoint-coefficient sum is >= 1 (and every node
// of C worth 2a >= 1), assigning the new vertex coefficient b_i + b_j - 1,
// until no such edge remains. New coefficient-0 vertices become candidates.
Saturation saturate(const WeightedCurveGraph& g, const PairSolution& sol);

// Like saturate, but blows up only where an exact coefficient-0 divisor lies
// somewhere beneath the point. The result is the minimal configuration
// exhibiting every discrepancy-0 divisor of the pair.
Saturation extract_crepant(const WeightedCurveGraph& g, const PairSolution& sol);

// True iff no blow-up sequence over the configuration can produce another
// discrepancy-0 divisor. Decided by exact search over the finitely many
// intersection points whose coefficient sum reaches 1.
bool completeness_check(const WeightedCurveGraph& g, const PairSolution& sol);

// Diagnostic: edges whose endpoint-coefficient sum is >= 1 (each supports
// divisors of discrepancy > -1 not drawn in the configuration).
std::vector<std::pair<std::size_t, std::size_t>> saturated_edges(
    const WeightedCurveGraph& g, const PairSolution& sol);

// Self-intersection of the image of C after contracting `contracted`
// (which must be negative definite and must not include C).
Rational proper_transform_self_intersection(const WeightedCurveGraph& g,
                                            const std::vector<std::size_t>& contracted);

// Number of divisors over the contraction with coefficient >= 6/7, including
// infinitely-near divisors explored through blow-ups.
int compute_delta(const WeightedCurveGraph& g, const PairSolution& sol,
                  const std::vector<std::size_t>& contracted);

// Discrepancy of the (alpha,beta)-weighted blow-up at a transversal double
// point of the boundary with coefficient a: alpha+beta-1-(alpha+beta)a.
Rational toric_blowup_discrepancy(int alpha, int beta, const Rational& a);

// Least n > 0 with n*K trivial: the denominator of the pair coefficient.
long canonical_index(const Rational& a);

} // namespace enriques

#endif
