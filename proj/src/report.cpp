#include "ctc/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace ctc {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("expected a complex number as a two-element [re, im] array");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("expected a non-empty nested array");
    const Eigen::Index rows = Eigen::Index(j.size());
    const Eigen::Index cols = Eigen::Index(j[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (Eigen::Index(j[i].size()) != cols)
            throw ValidationError("ragged matrix rows in input file");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

ProblemFile parse_problem(const Json& j) {
    ProblemFile p;
    if (!j.contains("dims") || !j["dims"].contains("cr") || !j["dims"].contains("ctc"))
        throw ValidationError("problem file: missing dims.cr / dims.ctc");
    p.dim_cr = j["dims"]["cr"].get<int>();
    p.dim_ctc = j["dims"]["ctc"].get<int>();
    if (!j.contains("unitary")) throw ValidationError("problem file: missing unitary");
    p.unitary = matrix_from_json(j["unitary"]);

    if (!j.contains("cr_state")) throw ValidationError("problem file: missing cr_state");
    const Json& s = j["cr_state"];
    if (s.contains("pure")) {
        p.cr_pure = true;
        const CMatrix col = matrix_from_json(Json::array({s["pure"]})).transpose();
        p.cr_pure_state = col.col(0);
        if (p.cr_pure_state.size() != p.dim_cr)
            throw ValidationError("problem file: pure cr_state length does not match dims.cr");
        if (std::abs(p.cr_pure_state.norm() - 1.0) > 1e-8)
            throw ValidationError("problem file: pure cr_state is not normalized (norm " +
                                  std::to_string(p.cr_pure_state.norm()) + ")");
    } else if (s.contains("mixed")) {
        p.cr_pure = false;
        p.cr_mixed_state = matrix_from_json(s["mixed"]);
        if (p.cr_mixed_state.rows() != p.dim_cr)
            throw ValidationError("problem file: mixed cr_state size does not match dims.cr");
    } else {
        throw ValidationError("problem file: cr_state must contain 'pure' or 'mixed'");
    }
    // Trigger the unitarity / density-matrix checks now so load failures
    // surface as validation errors.
    p.interaction();
    p.cr_state();
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open problem file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("problem file is not valid JSON: ") + e.what());
    }
    return parse_problem(j);
}

InteractionUnitary ProblemFile::interaction(const Tolerances& tol) const {
    return InteractionUnitary::validated(dim_cr, dim_ctc, unitary, tol);
}

DensityMatrix ProblemFile::cr_state() const {
    if (cr_pure) return pure_state(cr_pure_state);
    return DensityMatrix::validated(cr_mixed_state);
}

Json spectrum_to_json(const Spectrum& s) {
    Json out = Json::object();
    Json vals = Json::array();
    for (const auto& z : s.values) vals.push_back(complex_to_json(z));
    out["values"] = std::move(vals);
    out["multiplicity"] = s.multiplicity;
    return out;
}

namespace {

Json entanglement_to_json(const EntanglementReport& e) {
    Json out = Json::object();
    out["entropy_nats"] = e.entropy_nats;
    out["entropy_bits"] = e.entropy_nats / std::log(2.0);
    out["purity"] = e.purity;
    if (e.concurrence)
        out["concurrence"] = *e.concurrence;
    else
        out["concurrence"] = nullptr;
    out["is_product"] = e.is_product;
    out["product_tol"] = e.product_tol;
    return out;
}

}  // namespace

Json report_to_json(const ScenarioReport& r, const std::string& rule_used) {
    Json out = Json::object();
    out["tool_version"] = kToolVersion;
    out["scenario"] = r.scenario_id;
    out["selection_rule"] = rule_used;
    out["spectrum"] = spectrum_to_json(r.spectrum);
    // dim ker(M - I): the trace-carrying solution plus the traceless
    // directions.
    out["fixed_subspace_dim"] = r.fixed_set.subspace_dim() + 1;
    out["particular_solution"] = matrix_to_json(r.fixed_set.particular.mat());
    Json dirs = Json::array();
    for (const auto& d : r.fixed_set.directions) dirs.push_back(matrix_to_json(d));
    out["directions"] = std::move(dirs);
    Json intervals = Json::array();
    for (const auto& [lo, hi] : r.feasible_intervals) intervals.push_back(Json::array({lo, hi}));
    out["feasible_intervals"] = std::move(intervals);
    out["selected_ctc"] = matrix_to_json(r.selected_ctc.mat());
    out["cr_output"] = r.cr_out ? matrix_to_json(r.cr_out->mat()) : Json(nullptr);
    out["entanglement"] = r.entanglement ? entanglement_to_json(*r.entanglement) : Json(nullptr);
    out["residual"] = r.residual;
    return out;
}

Json sweep_to_json(const SweepResult& s, const std::string& rule_used) {
    Json out = Json::object();
    out["tool_version"] = kToolVersion;
    out["selection_rule"] = rule_used;
    out["epsilons"] = s.epsilons;
    Json points = Json::array();
    for (const auto& p : s.points) {
        Json jp = Json::object();
        jp["epsilon"] = p.epsilon;
        jp["lambda2_a"] = p.lambda2_a;
        jp["lambda2_c"] = p.lambda2_c;
        jp["frob_a_minus_b"] = p.frob_a_minus_b;
        jp["trace_distance_ac"] = p.trace_distance_ac;
        jp["a"] = report_to_json(p.a, rule_used);
        jp["b"] = report_to_json(p.b, rule_used);
        jp["c"] = report_to_json(p.c, rule_used);
        points.push_back(std::move(jp));
    }
    out["points"] = std::move(points);
    return out;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string fmt_complex(const Complex& z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real();
    if (z.imag() >= 0)
        os << "+" << std::setprecision(12) << z.imag() << "i";
    else
        os << std::setprecision(12) << z.imag() << "i";
    return os.str();
}

std::string matrix_text(const CMatrix& m, const std::string& indent) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << fmt_complex(m(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace

std::string spectrum_to_text(const Spectrum& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) os << ", ";
        os << fmt_complex(s.values[i]);
        if (s.multiplicity[i] > 1) os << " (x" << s.multiplicity[i] << ")";
    }
    return os.str();
}

std::string report_to_text(const ScenarioReport& r, const std::string& rule_used) {
    std::ostringstream os;
    os << "scenario:            " << r.scenario_id << "\n";
    os << "selection rule:      " << rule_used << "\n";
    os << "spectrum of M:       " << spectrum_to_text(r.spectrum) << "\n";
    os << "fixed subspace dim:  " << (r.fixed_set.subspace_dim() + 1) << "\n";
    os << "particular solution:\n" << matrix_text(r.fixed_set.particular.mat(), "  ");
    for (std::size_t k = 0; k < r.feasible_intervals.size(); ++k) {
        os << "direction " << k << " feasible t in [" << fmt(r.feasible_intervals[k].first)
           << ", " << fmt(r.feasible_intervals[k].second) << "]:\n"
           << matrix_text(r.fixed_set.directions[k], "  ");
    }
    os << "selected rho_CTC:\n" << matrix_text(r.selected_ctc.mat(), "  ");
    if (r.cr_out) os << "CR output state:\n" << matrix_text(r.cr_out->mat(), "  ");
    if (r.entanglement) {
        const auto& e = *r.entanglement;
        os << "entropy (nats):      " << fmt(e.entropy_nats) << "\n";
        os << "purity:              " << fmt(e.purity) << "\n";
        if (e.concurrence) os << "concurrence:         " << fmt(*e.concurrence) << "\n";
        os << "product state:       " << (e.is_product ? "yes" : "no") << "\n";
    }
    os << "residual:            " << fmt(r.residual) << "\n";
    return os.str();
}

std::string sweep_to_text(const SweepResult& s) {
    std::ostringstream os;
    os << "      epsilon     lambda2_A     lambda2_C   |M^A-M^B|_F   tracedist(A,C)\n";
    for (const auto& p : s.points) {
        os << std::setw(13) << fmt(p.epsilon) << std::setw(14) << fmt(p.lambda2_a)
           << std::setw(14) << fmt(p.lambda2_c) << std::setw(14) << fmt(p.frob_a_minus_b)
           << std::setw(17) << fmt(p.trace_distance_ac) << "\n";
    }
    return os.str();
}

}  // namespace ctc
