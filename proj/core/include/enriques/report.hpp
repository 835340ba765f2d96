#ifndef ENRIQUES_REPORT_HPP
#define ENRIQUES_REPORT_HPP

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

#include "enriques/classify.hpp"

namespace enriques {

nlohmann::json verdict_to_json(const CaseVerdict& v);

// Machine-readable verification report. The payload is byte-deterministic
// for fixed input and version; timing lives next to it, never inside it.
nlohmann::json build_report(const std::vector<CaseVerdict>& verdicts);
nlohmann::json wrap_report(nlohmann::json payload, long long elapsed_ms);

// DOT rendering: candidates as double circles labeled by number,
// exceptional curves as filled circles labeled by weight, C as a box.
std::string render_dot(const WeightedCurveGraph& g, const std::string& name);

// Adjacency listing with weights, one vertex per line, insertion order.
std::string render_ascii(const WeightedCurveGraph& g);

} // namespace enriques

#endif
