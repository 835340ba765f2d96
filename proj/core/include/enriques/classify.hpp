#ifndef ENRIQUES_CLASSIFY_HPP
#define ENRIQUES_CLASSIFY_HPP

#include <set>
#include <string>
#include <vector>

#include "enriques/cases.hpp"
#include "enriques/formula.hpp"
#include "enriques/graph.hpp"
#include "enriques/morphism.hpp"
#include "enriques/pair.hpp"

namespace enriques {

struct Pools {
    std::set<int> t1, t2, t3;

    const std::set<int>& by(int i) const {
        switch (i) {
            case 1: return t1;
            case 2: return t2;
            default: return t3;
        }
    }
};

// Partition of the candidate labels by what they contract to. For ell cases
// the split is structural: the component of G - C holding a candidate is
// attached to C twice (the node cycle, T2), once (a singular point on C,
// T1) or not at all (a point off C, T3). For rational cases each branch is
// one of the three marked points and the stored pool tags carry the figure's
// top-to-bottom numbering. Either way the result is cross-checked against
// the tags; a mismatch throws.
Pools candidate_pools(const WeightedCurveGraph& g, GenusClass genus);

ChosenPools split_by_pools(const Pools& pools, const std::set<int>& members);

struct Admissibility {
    bool admissible = false;
    KltVerdict verdict = KltVerdict::Klt;
    std::string detail;
};

// The extraction of `members` exists iff contracting everything else works:
// every connected component of the complement (the one containing C and all
// residual components alike) must be contractible to a klt point.
Admissibility is_admissible(const WeightedCurveGraph& g, const std::set<int>& members);

// All admissible subsets of the candidate labels, in binary counting order
// (lowest label = least significant bit).
std::vector<std::set<int>> enumerate_admissible(const CaseRecord& rec);

// Theorem-condition acceptance up to symmetry: t is accepted iff some
// automorphism image of t literally satisfies the clause list.
bool eval_formula(const CaseRecord& rec, const Pools& pools,
                  const std::vector<GraphMorphism>& auts, const std::set<int>& members,
                  std::vector<std::string>* warnings = nullptr);

struct CaseVerdict {
    std::string case_id;
    Rational solved_a;
    long index = 0;
    int identity_constant = 0;
    Pools pools;
    std::size_t automorphism_count = 0;

    std::vector<std::set<int>> admissible;       // enumeration (ground truth)
    std::vector<std::set<int>> accepted;         // theorem formula
    std::vector<std::set<int>> only_enumerated;  // diffs
    std::vector<std::set<int>> only_formula;
    bool agreement = false;

    int rho_min = 0;
    int rho_max = 0;
    bool a_ok = false;
    bool index_ok = false;
    bool rho_ok = false;
    bool completeness_ok = false;
    bool delta_all_one = false;
    int delta_max = 0;
    bool pt_all_negative = false;
    bool t2_nonempty_ok = false;  // ell: every admissible set meets T2
    bool rank_bounds_ok = false;  // 0 <= identity_constant - |t| <= 19
    std::vector<std::pair<std::string, std::string>> saturated_edge_ids;
    std::vector<std::string> warnings;

    bool ok() const {
        return agreement && a_ok && index_ok && rho_ok && completeness_ok &&
               delta_all_one && delta_max <= 2 && pt_all_negative && t2_nonempty_ok &&
               rank_bounds_ok;
    }
};

CaseVerdict verify_case(const CaseRecord& rec);

struct SummaryRow {
    std::string case_id;
    std::string a;
    long index = 0;
    int rho_min = 0;
    int rho_max = 0;
    int identity_constant = 0;
    std::size_t admissible_count = 0;
    bool ok = false;
};

struct Summary {
    std::vector<SummaryRow> rows;
    std::set<long> index_set;
    bool all_ok = false;
};

Summary invariants_summary(const std::vector<CaseVerdict>& verdicts);

} // namespace enriques

#endif
