#ifndef ENRIQUES_CASES_HPP
#define ENRIQUES_CASES_HPP

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

#include "enriques/formula.hpp"
#include "enriques/graph.hpp"

namespace enriques {

enum class GenusClass { Ell, Rational };

struct CaseExpected {
    Rational a;
    int index = 0;
    int rho_min = 0;
    int rho_max = 0;
    int identity_constant = 0;
};

// One case: the figure graph (extraction of all discrepancy-0 curves), an
// optional minimal-resolution diagram with witness vertices, the expected
// invariants and the classification condition.
struct CaseRecord {
    std::string id;
    GenusClass genus = GenusClass::Ell;
    std::string model;
    CaseExpected expected;
    WeightedCurveGraph figure;
    std::optional<WeightedCurveGraph> theorem_diagram;
    TheoremFormula formula;
    bool symmetry = true;  // close conditions over graph automorphisms
    std::vector<std::string> notes;
};

CaseRecord parse_case(const nlohmann::json& j, const std::string& source);
nlohmann::json case_to_json(const CaseRecord& rec);

CaseRecord load_case(const std::string& path);

// Accepts either a full case file (figure graph is used) or a bare
// {"vertices": [...], "edges": [...]} graph file.
WeightedCurveGraph load_graph_file(const std::string& path);

// Case ids of every *.json in the directory, in filename order.
std::vector<std::string> list_cases(const std::string& directory);

// The built-in library, in classification order.
const std::vector<CaseRecord>& bundled_cases();

// Resolves "56", "56-0", "6-2", ... to a bundled case. Null when unknown.
const CaseRecord* find_bundled_case(const std::string& query);

// Frozen expected values for the 13 bundled cases (classification order).
struct CaseTableRow {
    const char* id;
    const char* a;
    int c_weight;
    int index;
    int rho_min;
    int rho_max;
    int identity_constant;
};
const std::vector<CaseTableRow>& case_table();

struct CaseValidation {
    std::vector<std::string> failures;
    std::vector<std::string> infos;
    bool ok() const { return failures.empty(); }
};

// Load-time self-validation: re-derives every stored expectation from the
// figure graph and pinpoints the offending vertex/edge on mismatch, so
// the data files are self-correcting against transcription slips.
CaseValidation validate_case(const CaseRecord& rec);

} // namespace enriques

#endif
