#include "ctc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInfeasible = 4;

ctc::SelectionRule parse_rule(const std::string& rule) {
    ctc::SelectionRule r;
    if (rule == "max-entropy") {
        r.kind = ctc::SelectionRule::Kind::MaxEntropy;
    } else if (rule == "min-bloch-norm") {
        r.kind = ctc::SelectionRule::Kind::MinBlochNorm;
    } else if (rule.rfind("param=", 0) == 0) {
        r.kind = ctc::SelectionRule::Kind::GivenParameter;
        std::stringstream ss(rule.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                r.parameters.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ctc::ValidationError("--rule param=...: cannot parse '" + item + "'");
            }
        }
        if (r.parameters.empty())
            throw ctc::ValidationError("--rule param=...: empty parameter list");
    } else {
        throw ctc::ValidationError("--rule must be max-entropy, min-bloch-norm or param=<t1,...>");
    }
    return r;
}

std::string rule_name(const ctc::SelectionRule& r) {
    switch (r.kind) {
        case ctc::SelectionRule::Kind::MaxEntropy: return "max-entropy";
        case ctc::SelectionRule::Kind::MinBlochNorm: return "min-bloch-norm";
        case ctc::SelectionRule::Kind::GivenParameter: {
            std::string s = "param=";
            for (std::size_t i = 0; i < r.parameters.size(); ++i) {
                if (i) s += ",";
                std::ostringstream os;
                os << r.parameters[i];
                s += os.str();
            }
            return s;
        }
    }
    return "?";
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw ctc::ValidationError("cannot open output file: " + out_path);
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << "\n";
    }
}

struct CommonOpts {
    std::string rule = "max-entropy";
    std::string format = "text";
    std::string out;
    unsigned long long seed = 0;  // reserved for randomized diagnostics; recorded only
    double tol = 0.0;             // 0 = defaults

    ctc::Tolerances tolerances() const {
        ctc::Tolerances t;
        if (tol > 0.0) {
            t.eig = tol;
            t.herm = tol;
            t.nullspace = tol;
        }
        return t;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_rule = true) {
    if (with_rule)
        cmd->add_option("--rule", o.rule, "selection rule: max-entropy|min-bloch-norm|param=<t1,...>");
    cmd->add_option("--format", o.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "write report to this path instead of stdout");
    cmd->add_option("--seed", o.seed, "seed for randomized diagnostics (recorded in report)");
    cmd->add_option("--tol", o.tol, "override default numerical tolerances");
}

void emit_report(const ctc::ScenarioReport& r, const ctc::SelectionRule& rule,
                 const CommonOpts& o) {
    if (o.format == "json")
        emit(ctc::report_to_json(r, rule_name(rule)).dump(2), o.out);
    else
        emit(ctc::report_to_text(r, rule_name(rule)), o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deutsch CTC self-consistency solver (eigenvalue formulation)"};
    app.require_subcommand(1);

    CommonOpts solve_opts, scenario_opts, sweep_opts, spectrum_opts;
    std::string problem_path, spectrum_path, scenario_id, epsilons_arg;
    double epsilon = -1.0;

    auto* solve = app.add_subcommand("solve", "solve a problem file end to end");
    solve->add_option("problem", problem_path, "problem file (JSON)")->required();
    add_common(solve, solve_opts);

    auto* scenario = app.add_subcommand("scenario", "run a named case study");
    scenario->add_option("id", scenario_id, "epr | dejonghe-a | dejonghe-b | dejonghe-c")
        ->required();
    scenario->add_option("--epsilon", epsilon, "epsilon in (0,1], required for dejonghe variants");
    add_common(scenario, scenario_opts);

    auto* sweep = app.add_subcommand("sweep", "epsilon -> 0 sweep of the dejonghe variants");
    sweep->add_option("--epsilons", epsilons_arg, "comma-separated epsilon list")->required();
    add_common(sweep, sweep_opts);

    auto* spectrum = app.add_subcommand("spectrum", "print the spectrum of M for a problem file");
    spectrum->add_option("problem", spectrum_path, "problem file (JSON)")->required();
    add_common(spectrum, spectrum_opts, /*with_rule=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            const ctc::SelectionRule rule = parse_rule(solve_opts.rule);
            const ctc::ProblemFile p = ctc::load_problem(problem_path);
            const auto tol = solve_opts.tolerances();
            const ctc::ScenarioReport r =
                ctc::solve_problem(p.interaction(tol), p.cr_state(), rule, tol);
            emit_report(r, rule, solve_opts);
        } else if (scenario->parsed()) {
            const ctc::SelectionRule rule = parse_rule(scenario_opts.rule);
            const auto tol = scenario_opts.tolerances();
            ctc::ScenarioReport r;
            if (scenario_id == "epr") {
                r = ctc::run_epr_scenario(rule, tol);
            } else if (scenario_id == "dejonghe-a" || scenario_id == "dejonghe-b" ||
                       scenario_id == "dejonghe-c") {
                if (epsilon < 0.0)
                    throw ctc::ValidationError("--epsilon is required for dejonghe variants");
                const auto v = scenario_id == "dejonghe-a"   ? ctc::DejongheVariant::A
                               : scenario_id == "dejonghe-b" ? ctc::DejongheVariant::B
                                                             : ctc::DejongheVariant::C;
                r = ctc::run_dejonghe(v, epsilon, rule, tol);
            } else {
                throw ctc::ValidationError("unknown scenario id: " + scenario_id);
            }
            emit_report(r, rule, scenario_opts);
        } else if (sweep->parsed()) {
            const ctc::SelectionRule rule = parse_rule(sweep_opts.rule);
            std::vector<double> eps;
            std::stringstream ss(epsilons_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    eps.push_back(std::stod(item));
                } catch (const std::exception&) {
                    throw ctc::ValidationError("--epsilons: cannot parse '" + item + "'");
                }
            }
            const ctc::SweepResult result = ctc::sweep_epsilon(eps, rule, sweep_opts.tolerances());
            if (sweep_opts.format == "json")
                emit(ctc::sweep_to_json(result, rule_name(rule)).dump(2), sweep_opts.out);
            else
                emit(ctc::sweep_to_text(result), sweep_opts.out);
        } else if (spectrum->parsed()) {
            const ctc::ProblemFile p = ctc::load_problem(spectrum_path);
            const auto tol = spectrum_opts.tolerances();
            const ctc::Superoperator m =
                ctc::build_superoperator_mixed(p.interaction(tol), p.cr_state());
            const ctc::Spectrum s = ctc::eigenvalues(m.m, tol);
            if (spectrum_opts.format == "json") {
                ctc::Json out = ctc::Json::object();
                out["tool_version"] = ctc::kToolVersion;
                out["spectrum"] = ctc::spectrum_to_json(s);
                emit(out.dump(2), spectrum_opts.out);
            } else {
                emit(ctc::spectrum_to_text(s), spectrum_opts.out);
            }
        }
    } catch (const ctc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ctc::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ctc::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
