#include "infopact/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "infopact/errors.hpp"

namespace infopact::io {

using nlohmann::json;

namespace {

json vec_to_json(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(round12(x));
    return out;
}

std::vector<double> json_to_vec(const json& j, const char* what) {
    if (!j.is_array()) {
        throw ValidationError(Errc::io_error,
                              std::string(what) + " must be an array");
    }
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) {
            throw ValidationError(Errc::io_error,
                                  std::string(what) + " must hold numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

json belief_to_json(const Belief& b) { return vec_to_json(b.probs); }

json matrix_to_json(const std::vector<std::vector<double>>& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(vec_to_json(row));
    return out;
}

}  // namespace

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

CostModel ProblemSpec::cost_model() const {
    switch (cost_kind) {
        case CostKind::entropy: return CostModel::entropy(kappa, prior);
        case CostKind::quadratic: return CostModel::quadratic(kappa, prior);
        case CostKind::custom:
            throw ValidationError(Errc::io_error,
                                  "custom costs cannot come from a file");
    }
    throw ValidationError(Errc::io_error, "unknown cost kind");
}

UtilityModel ProblemSpec::utility_model() const {
    switch (utility_kind) {
        case UtilityKind::risk_neutral: return UtilityModel::risk_neutral();
        case UtilityKind::log: return UtilityModel::log_utility();
        case UtilityKind::custom:
            throw ValidationError(Errc::io_error,
                                  "custom utilities cannot come from a file");
    }
    throw ValidationError(Errc::io_error, "unknown utility kind");
}

ProblemSpec parse_problem(const json& j) {
    ProblemSpec spec;
    if (!j.is_object()) {
        throw ValidationError(Errc::io_error, "problem file must be an object");
    }
    if (j.value("version", std::string()) != "1") {
        throw ValidationError(Errc::io_error,
                              "problem file version must be \"1\"");
    }
    if (!j.contains("states") || !j["states"].is_number_integer()) {
        throw ValidationError(Errc::io_error, "missing integer field: states");
    }
    spec.states = j["states"].get<std::size_t>();
    if (!j.contains("prior")) {
        throw ValidationError(Errc::io_error, "missing field: prior");
    }
    spec.prior = make_belief(json_to_vec(j["prior"], "prior"));
    if (spec.prior.states() != spec.states) {
        throw ValidationError(Errc::io_error,
                              "prior length disagrees with states");
    }

    const json& cost = j.value("cost", json::object());
    const std::string cost_kind = cost.value("kind", std::string("entropy"));
    if (cost_kind == "entropy") {
        spec.cost_kind = CostKind::entropy;
    } else if (cost_kind == "quadratic") {
        spec.cost_kind = CostKind::quadratic;
    } else {
        throw ValidationError(Errc::io_error,
                              "cost.kind must be entropy or quadratic");
    }
    spec.kappa = cost.value("kappa", 1.0);

    const json& util = j.value("utility", json::object());
    const std::string util_kind =
        util.value("kind", std::string("risk_neutral"));
    if (util_kind == "risk_neutral") {
        spec.utility_kind = UtilityKind::risk_neutral;
    } else if (util_kind == "log") {
        spec.utility_kind = UtilityKind::log;
    } else {
        throw ValidationError(Errc::io_error,
                              "utility.kind must be risk_neutral or log");
    }

    spec.outside_option = j.value("outside_option", 0.0);
    if (spec.outside_option < 0.0) {
        throw ValidationError(Errc::io_error,
                              "outside_option must be nonnegative");
    }
    spec.limited_liability = j.value("limited_liability", false);

    if (!j.contains("distribution") || !j["distribution"].is_object()) {
        throw ValidationError(Errc::io_error, "missing object: distribution");
    }
    const json& dist = j["distribution"];
    if (!dist.contains("support") || !dist["support"].is_array()) {
        throw ValidationError(Errc::io_error,
                              "distribution.support must be an array");
    }
    std::vector<Belief> support;
    for (const auto& pt : dist["support"]) {
        support.push_back(make_belief(json_to_vec(pt, "support point")));
    }
    if (dist.contains("weights")) {
        spec.distribution = make_distribution(
            std::move(support), json_to_vec(dist["weights"], "weights"),
            spec.prior);
    } else {
        spec.distribution = make_distribution(std::move(support), spec.prior);
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(Errc::io_error, "cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError(Errc::io_error,
                              "bad JSON in " + path + ": " + e.what());
    }
    return parse_problem(j);
}

json contract_to_json(const Contract& contract, const UtilityModel& utility) {
    json messages = json::array();
    for (const Belief& m : contract.messages) {
        messages.push_back(belief_to_json(m));
    }
    std::vector<std::vector<double>> money(contract.message_count());
    for (std::size_t jdx = 0; jdx < contract.message_count(); ++jdx) {
        for (double t : contract.transfers[jdx]) {
            money[jdx].push_back(utility.to_money(t));
        }
    }
    json out;
    out["messages"] = messages;
    out["transfers_utils"] = matrix_to_json(contract.transfers);
    out["transfers_money"] = matrix_to_json(money);
    return out;
}

Contract contract_from_json(const json& j) {
    if (!j.is_object() || !j.contains("messages") ||
        !j.contains("transfers_utils")) {
        throw ValidationError(Errc::io_error,
                              "contract file needs messages and "
                              "transfers_utils");
    }
    std::vector<Belief> messages;
    for (const auto& m : j["messages"]) {
        messages.push_back(make_belief(json_to_vec(m, "message")));
    }
    std::vector<std::vector<double>> transfers;
    for (const auto& row : j["transfers_utils"]) {
        transfers.push_back(json_to_vec(row, "transfer row"));
    }
    return make_contract(std::move(messages), std::move(transfers));
}

namespace {

json witness_to_json(const Witness& w) {
    json out;
    out["kind"] = w.kind;
    out["message"] = w.message;
    if (w.where.states() > 0) out["where"] = belief_to_json(w.where);
    out["amount"] = round12(w.amount);
    return out;
}

}  // namespace

json report_to_json(const ImplementationReport& report) {
    json out;
    out["implementable"] = report.implementable;
    out["honest_learning_ok"] = report.honest_learning_ok;
    out["hyperplanes_coincide"] = report.hyperplanes_coincide;
    out["hyperplane_gap"] = round12(report.hyperplane_gap);
    out["dominance_margin"] = round12(report.dominance_margin);
    out["ic_margin"] = round12(report.ic_margin);
    if (report.ic_argmin.states() > 0) {
        out["ic_argmin"] = belief_to_json(report.ic_argmin);
    }
    out["ll_required"] = report.ll_required;
    out["ll_ok"] = report.ll_ok;
    out["min_transfer"] = round12(report.min_transfer);
    out["agent_surplus"] = round12(report.agent_surplus);
    out["principal_cost"] = round12(report.principal_cost);
    out["first_best_cost"] = round12(report.first_best_cost);
    out["hyperplane"] = {{"slopes", vec_to_json(report.hyperplane.slopes)},
                         {"intercept", round12(report.hyperplane.intercept)}};
    out["certified_by"] = report.certified_by;
    json witnesses = json::array();
    for (const Witness& w : report.witnesses) witnesses.push_back(witness_to_json(w));
    out["witnesses"] = witnesses;
    json ties = json::array();
    for (const Witness& w : report.ties) ties.push_back(witness_to_json(w));
    out["ties"] = ties;
    return out;
}

json tangency_to_json(const TangencySolution& solution,
                      const UtilityModel& utility) {
    json out;
    out["solver"] = "risk-averse";
    out["x_star"] = belief_to_json(solution.x_star);
    out["contract"] = contract_to_json(solution.contract, utility);
    out["principal_cost"] = round12(solution.principal_cost);
    out["surplus"] = round12(solution.surplus);
    out["ic_margin"] = round12(solution.ic_margin);
    out["start_dispersion"] = round12(solution.start_dispersion);
    return out;
}

json region_label_to_json(const RegionLabel& label,
                          const UtilityModel& utility) {
    json out;
    out["solver"] = "ll-two-state";
    out["label"] = region_kind_name(label.label);
    out["contract"] = contract_to_json(label.contract, utility);
    out["principal_cost"] = round12(label.principal_cost);
    out["gamma"] = round12(label.gamma);
    out["beta"] = round12(label.beta);
    out["margins"] = {{"ic_margin", round12(label.ic_margin)},
                      {"eta1", round12(label.eta1)},
                      {"eta2", round12(label.eta2)},
                      {"eta", round12(label.eta)},
                      {"x_dagger", round12(label.x_dagger)}};
    return out;
}

void write_region_csv(const RegionGrid& grid, std::ostream& os) {
    os << "x_L,x_H,label,gamma,beta,principal_cost,ic_margin\n";
    char buf[48];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        os << buf;
    };
    for (const RegionCell& cell : grid.cells) {
        put(cell.x_low);
        os << ',';
        put(cell.x_high);
        os << ',' << region_kind_name(cell.label) << ',';
        put(cell.gamma);
        os << ',';
        put(cell.beta);
        os << ',';
        put(cell.principal_cost);
        os << ',';
        put(cell.ic_margin);
        os << '\n';
    }
}

json error_to_json(const std::string& code, const std::string& message,
                   json data) {
    json out;
    out["error"] = {{"code", code}, {"message", message}, {"data", data}};
    return out;
}

}  // namespace infopact::io
