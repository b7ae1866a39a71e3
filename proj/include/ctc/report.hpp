#pragma once

#include "ctc/scenarios.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ctc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// On-disk problem description: dims, unitary (row-major nested [re, im]
// pairs) and a pure or mixed CR state. Validated on load.
struct ProblemFile {
    int dim_cr = 0;
    int dim_ctc = 0;
    CMatrix unitary;
    bool cr_pure = true;
    CVector cr_pure_state;
    CMatrix cr_mixed_state;

    InteractionUnitary interaction(const Tolerances& tol = {}) const;
    DensityMatrix cr_state() const;
};

ProblemFile parse_problem(const Json& j);
ProblemFile load_problem(const std::string& path);

Json complex_to_json(const Complex& z);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json report_to_json(const ScenarioReport& r, const std::string& rule_used);
Json sweep_to_json(const SweepResult& s, const std::string& rule_used);

std::string report_to_text(const ScenarioReport& r, const std::string& rule_used);
std::string sweep_to_text(const SweepResult& s);

std::string spectrum_to_text(const Spectrum& s);
Json spectrum_to_json(const Spectrum& s);

}  // namespace ctc
