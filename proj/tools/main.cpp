// infopact: construct, verify, and optimize transfer schemes that implement
// target distributions over posteriors.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible / not implementable,
// 4 solver non-convergence. Diagnostics go to stderr as JSON.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "infopact/construct.hpp"
#include "infopact/errors.hpp"
#include "infopact/io.hpp"
#include "infopact/solve.hpp"
#include "infopact/verify.hpp"

namespace {

using infopact::Contract;
using infopact::CostModel;
using infopact::Error;
using infopact::InfeasibleError;
using infopact::PosteriorDistribution;
using infopact::SolverError;
using infopact::UtilityModel;
using infopact::ValidationError;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSolver = 4;

void emit_error(const std::string& code, const std::string& message,
                json data = json::object()) {
    std::cerr << infopact::io::error_to_json(code, message, std::move(data))
                     .dump()
              << "\n";
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ValidationError(infopact::Errc::io_error,
                              "cannot write " + path);
    }
    out << text << "\n";
}

struct CommonOpts {
    std::string problem_path;
    std::string output_path;
    double tolerance = 1e-9;
    unsigned seed = 0;
    bool require_ll = false;
};

int run_construct(const CommonOpts& opts, const std::string& mode) {
    const infopact::io::ProblemSpec spec =
        infopact::io::load_problem(opts.problem_path);
    const CostModel cost = spec.cost_model();
    const UtilityModel utility = spec.utility_model();
    const PosteriorDistribution& f = spec.distribution;
    const double v0 = spec.outside_option;
    const bool require_ll = spec.limited_liability || opts.require_ll;

    Contract contract;
    if (mode == "tau") {
        contract = infopact::construct_tau_contract(f, cost, v0);
    } else if (mode == "efficient") {
        contract = infopact::construct_efficient(f, cost, v0);
    } else if (mode == "ll-zero") {
        contract = infopact::construct_ll_zero(f, cost);
    } else if (mode == "efficient-ll") {
        auto res = infopact::construct_efficient_ll(f, cost, v0);
        if (!res.feasible) {
            json data;
            data["min_transfer"] = infopact::io::round12(res.min_transfer);
            data["worst_message"] = res.worst_message;
            data["worst_state"] = res.worst_state;
            if (cost.states() == 2) {
                data["eta"] = infopact::io::round12(res.eta);
                data["eta1"] = infopact::io::round12(res.eta1);
                data["eta2"] = infopact::io::round12(res.eta2);
                data["margin"] = infopact::io::round12(res.margin);
            }
            emit_error("Infeasible",
                       "efficient implementation violates limited liability",
                       data);
            return kExitInfeasible;
        }
        contract = res.contract;
    } else {
        emit_error("DomainViolation", "unknown mode: " + mode);
        return kExitInvalid;
    }

    const infopact::ImplementationReport report = infopact::verify(
        contract, f, cost, utility, v0, require_ll, opts.tolerance);
    json out = infopact::io::contract_to_json(contract, utility);
    out["report"] = infopact::io::report_to_json(report);
    write_output(opts.output_path, out.dump(2));
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& contract_path) {
    const infopact::io::ProblemSpec spec =
        infopact::io::load_problem(opts.problem_path);
    std::ifstream in(contract_path);
    if (!in) {
        throw ValidationError(infopact::Errc::io_error,
                              "cannot open " + contract_path);
    }
    json cj;
    try {
        in >> cj;
    } catch (const json::exception& e) {
        throw ValidationError(infopact::Errc::io_error,
                              std::string("bad contract JSON: ") + e.what());
    }
    const Contract contract = infopact::io::contract_from_json(cj);
    if (contract.message_count() != spec.distribution.size() ||
        contract.states() != spec.states) {
        throw ValidationError(infopact::Errc::unsupported_shape,
                              "contract shape does not match the problem");
    }
    for (std::size_t j = 0; j < contract.message_count(); ++j) {
        for (std::size_t k = 0; k < spec.states; ++k) {
            if (std::fabs(contract.messages[j][k] -
                          spec.distribution.support[j][k]) > 1e-9) {
                throw ValidationError(
                    infopact::Errc::unsupported_shape,
                    "contract messages differ from the problem support");
            }
        }
    }
    const bool require_ll = spec.limited_liability || opts.require_ll;
    const infopact::ImplementationReport report = infopact::verify(
        contract, spec.distribution, spec.cost_model(), spec.utility_model(),
        spec.outside_option, require_ll, opts.tolerance);
    write_output(opts.output_path,
                 infopact::io::report_to_json(report).dump(2));
    return report.implementable ? kExitOk : kExitInfeasible;
}

int run_solve(const CommonOpts& opts, const std::string& solver) {
    const infopact::io::ProblemSpec spec =
        infopact::io::load_problem(opts.problem_path);
    const CostModel cost = spec.cost_model();
    const UtilityModel utility = spec.utility_model();
    if (solver == "risk-averse") {
        const infopact::TangencySolution sol =
            infopact::solve_risk_averse_tangency(spec.distribution, cost,
                                                 utility, spec.outside_option,
                                                 opts.seed);
        write_output(opts.output_path,
                     infopact::io::tangency_to_json(sol, utility).dump(2));
        return kExitOk;
    }
    if (solver == "ll-two-state") {
        const infopact::RegionLabel label =
            infopact::solve_ll_risk_neutral_two_state(spec.distribution, cost,
                                                      spec.outside_option);
        write_output(opts.output_path,
                     infopact::io::region_label_to_json(label, utility).dump(2));
        return kExitOk;
    }
    emit_error("DomainViolation", "unknown solver: " + solver);
    return kExitInvalid;
}

int run_sweep(double mu, double v0_over_kappa, const std::string& cost_kind,
              std::size_t resolution, const std::string& output_path) {
    if (!(mu > 0.0 && mu < 1.0)) {
        emit_error("DomainViolation", "mu must lie in (0,1)");
        return kExitInvalid;
    }
    if (v0_over_kappa < 0.0) {
        emit_error("DomainViolation", "v0/kappa must be nonnegative");
        return kExitInvalid;
    }
    CostModel cost = [&]() {
        const infopact::Belief prior = infopact::make_belief2(mu);
        if (cost_kind == "entropy") return CostModel::entropy(1.0, prior);
        if (cost_kind == "quadratic") return CostModel::quadratic(1.0, prior);
        throw ValidationError(infopact::Errc::domain_violation,
                              "cost must be entropy or quadratic");
    }();
    const infopact::RegionGrid grid =
        infopact::sweep_regions(cost, v0_over_kappa, resolution);

    std::ofstream out(output_path);
    if (!out) {
        throw ValidationError(infopact::Errc::io_error,
                              "cannot write " + output_path);
    }
    infopact::io::write_region_csv(grid, out);

    json summary;
    summary["cells"] = grid.cells.size();
    summary["efficient"] = grid.count(infopact::RegionKind::efficient);
    summary["interior_zero_zero"] =
        grid.count(infopact::RegionKind::interior_zero_zero);
    summary["beta_zero"] = grid.count(infopact::RegionKind::beta_zero);
    summary["gamma_zero"] = grid.count(infopact::RegionKind::gamma_zero);
    summary["unresolved"] = grid.unresolved_count;
    summary["output"] = output_path;
    std::cout << summary.dump(2) << "\n";

    const double frac =
        grid.cells.empty()
            ? 0.0
            : static_cast<double>(grid.unresolved_count) /
                  static_cast<double>(grid.cells.size());
    return frac < 0.001 ? kExitOk : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contract synthesis and verification for delegated "
                 "information acquisition"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string mode = "efficient";
    std::string solver = "risk-averse";
    std::string contract_path;
    double sweep_mu = 0.5;
    double sweep_ratio = 0.05;
    std::string sweep_cost = "entropy";
    std::size_t sweep_resolution = 200;
    std::string sweep_output = "regions.csv";

    CLI::App* construct =
        app.add_subcommand("construct", "Build a contract for a problem file");
    construct->add_option("problem", opts.problem_path, "problem JSON file")
        ->required();
    construct->add_option("--mode", mode,
                          "tau | efficient | ll-zero | efficient-ll");
    construct->add_option("--tolerance", opts.tolerance,
                          "verification margin tolerance");
    construct->add_flag("--require-ll", opts.require_ll,
                        "require nonnegative transfers in verification");
    construct->add_option("--seed", opts.seed, "seed for multistart search");
    construct->add_option("--output", opts.output_path,
                          "write JSON here instead of stdout");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Verify a contract against a problem");
    verify_cmd->add_option("problem", opts.problem_path, "problem JSON file")
        ->required();
    verify_cmd->add_option("contract", contract_path, "contract JSON file")
        ->required();
    verify_cmd->add_option("--tolerance", opts.tolerance,
                           "verification margin tolerance");
    verify_cmd->add_flag("--require-ll", opts.require_ll,
                         "require nonnegative transfers");
    verify_cmd->add_option("--output", opts.output_path,
                           "write JSON here instead of stdout");

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Solve for an optimal contract");
    solve_cmd->add_option("problem", opts.problem_path, "problem JSON file")
        ->required();
    solve_cmd->add_option("--solver", solver, "risk-averse | ll-two-state");
    solve_cmd->add_option("--seed", opts.seed, "seed for multistart search");
    solve_cmd->add_option("--output", opts.output_path,
                          "write JSON here instead of stdout");

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Classify binary supports over a (x_L, x_H) grid");
    sweep_cmd->add_option("--mu", sweep_mu, "prior probability of state 1")
        ->required();
    sweep_cmd
        ->add_option("--v0-over-kappa", sweep_ratio,
                     "outside option relative to the cost scale")
        ->required();
    sweep_cmd->add_option("--cost", sweep_cost, "entropy | quadratic");
    sweep_cmd->add_option("--resolution", sweep_resolution,
                          "cells per axis (>= 2)");
    sweep_cmd->add_option("--output", sweep_output, "CSV output path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (construct->parsed()) return run_construct(opts, mode);
        if (verify_cmd->parsed()) return run_verify(opts, contract_path);
        if (solve_cmd->parsed()) return run_solve(opts, solver);
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_mu, sweep_ratio, sweep_cost,
                             sweep_resolution, sweep_output);
        }
    } catch (const ValidationError& e) {
        emit_error(e.code_name(), e.what());
        return kExitInvalid;
    } catch (const InfeasibleError& e) {
        emit_error(e.code_name(), e.what());
        return kExitInfeasible;
    } catch (const SolverError& e) {
        emit_error(e.code_name(), e.what());
        return kExitSolver;
    } catch (const Error& e) {
        emit_error(e.code_name(), e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        emit_error("Internal", e.what());
        return kExitSolver;
    }
    return kExitInvalid;
}
