#include "infopact/contract.hpp"

#include <cmath>
#include <string>

#include "infopact/errors.hpp"

namespace infopact {

namespace {

constexpr double kTieTol = 1e-10;

void require_message(const Contract& contract, std::size_t d) {
    if (d >= contract.message_count()) {
        throw ValidationError(Errc::bad_message_index,
                              "message index " + std::to_string(d) +
                                  " out of range");
    }
}

}  // namespace

UtilityModel UtilityModel::risk_neutral() {
    return UtilityModel(UtilityKind::risk_neutral);
}

UtilityModel UtilityModel::log_utility() {
    return UtilityModel(UtilityKind::log);
}

UtilityModel UtilityModel::custom(Fn v, Fn v_inverse) {
    UtilityModel m(UtilityKind::custom);
    m.v_ = std::move(v);
    m.v_inverse_ = std::move(v_inverse);
    if (std::fabs(m.v_(0.0)) > 1e-12) {
        throw ValidationError(Errc::invalid_model, "utility must satisfy v(0)=0");
    }
    double prev = -1e18;
    for (double t : {0.0, 0.25, 1.0, 3.0, 10.0}) {
        const double u = m.v_(t);
        if (!std::isfinite(u) || u <= prev) {
            throw ValidationError(Errc::invalid_model,
                                  "utility must be strictly increasing");
        }
        prev = u;
        const double back = m.v_inverse_(u);
        if (std::fabs(back - t) > 1e-9 * std::max(1.0, std::fabs(t))) {
            throw ValidationError(Errc::invalid_model,
                                  "v_inverse fails the round trip against v");
        }
    }
    return m;
}

double UtilityModel::to_utils(double money) const {
    switch (kind_) {
        case UtilityKind::risk_neutral: return money;
        case UtilityKind::log:
            if (money <= -1.0) {
                throw ValidationError(Errc::transfer_outside_utility_domain,
                                      "log utility needs money > -1");
            }
            return std::log1p(money);
        case UtilityKind::custom: return v_(money);
    }
    return money;
}

double UtilityModel::to_money(double utils) const {
    switch (kind_) {
        case UtilityKind::risk_neutral: return utils;
        case UtilityKind::log: return std::expm1(utils);
        case UtilityKind::custom: {
            const double m = v_inverse_(utils);
            if (!std::isfinite(m)) {
                throw ValidationError(Errc::transfer_outside_utility_domain,
                                      "transfer outside the utility domain");
            }
            return m;
        }
    }
    return utils;
}

Contract make_contract(std::vector<Belief> messages,
                       std::vector<std::vector<double>> transfers) {
    if (messages.empty() || transfers.size() != messages.size()) {
        throw ValidationError(Errc::domain_violation,
                              "contract needs one transfer row per message");
    }
    const std::size_t n = messages.front().states();
    if (messages.size() > n) {
        throw ValidationError(Errc::support_too_large,
                              "more messages than states");
    }
    for (const Belief& m : messages) {
        if (m.states() != n) {
            throw ValidationError(Errc::domain_violation,
                                  "message dimension mismatch");
        }
    }
    for (const auto& row : transfers) {
        if (row.size() != n) {
            throw ValidationError(Errc::domain_violation,
                                  "transfer row length mismatch");
        }
        for (double t : row) {
            if (!std::isfinite(t)) {
                throw ValidationError(Errc::non_finite,
                                      "transfers must be finite");
            }
        }
    }
    return Contract{std::move(messages), std::move(transfers)};
}

double Hyperplane::value(const Belief& x) const {
    double s = intercept;
    for (std::size_t k = 0; k < slopes.size(); ++k) s += slopes[k] * x[k];
    return s;
}

double net_utility(const Contract& contract, const Belief& x,
                   std::size_t message, const CostModel& cost) {
    require_message(contract, message);
    const auto& t = contract.transfers[message];
    double gross = 0.0;
    for (std::size_t k = 0; k < x.states(); ++k) gross += x[k] * t[k];
    return gross - cost.scaled_value(x);
}

ValueResult value_function(const Contract& contract, const Belief& x,
                           const CostModel& cost) {
    // All messages share the -kappa*c(x) term, so ties are decided on the
    // affine parts alone.
    ValueResult out;
    double best = -1e300;
    std::vector<double> gross(contract.message_count());
    for (std::size_t d = 0; d < contract.message_count(); ++d) {
        double g = 0.0;
        for (std::size_t k = 0; k < x.states(); ++k) {
            g += x[k] * contract.transfers[d][k];
        }
        gross[d] = g;
        if (g > best) best = g;
    }
    for (std::size_t d = 0; d < gross.size(); ++d) {
        if (gross[d] >= best - kTieTol) out.argmax.push_back(d);
    }
    out.value = best - cost.scaled_value(x);
    return out;
}

Hyperplane hyperplane_from_message(const Contract& contract, std::size_t j,
                                   const CostModel& cost) {
    require_message(contract, j);
    const Belief& xj = contract.messages[j];
    if (!xj.interior()) {
        throw ValidationError(Errc::boundary_point,
                              "message posterior must be interior");
    }
    const std::size_t n = xj.states();
    const std::vector<double> grad = cost.scaled_gradient_reduced(xj);
    const auto& t = contract.transfers[j];
    Hyperplane h;
    h.slopes.resize(n - 1);
    double grad_dot_x = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h.slopes[k] = t[k] - t[n - 1] - grad[k];
        grad_dot_x += grad[k] * xj[k];
    }
    h.intercept = t[n - 1] - cost.scaled_value(xj) + grad_dot_x;
    return h;
}

double strategy_value(const Contract& contract,
                      const PosteriorDistribution& f,
                      const std::vector<std::vector<double>>& reporting,
                      const CostModel& cost) {
    if (reporting.size() != f.size()) {
        throw ValidationError(Errc::incomplete_strategy,
                              "reporting must cover every support point");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto& row = reporting[j];
        if (row.size() != contract.message_count()) {
            throw ValidationError(Errc::incomplete_strategy,
                                  "reporting row length mismatch");
        }
        double row_sum = 0.0;
        for (std::size_t d = 0; d < row.size(); ++d) {
            if (row[d] < -1e-12) {
                throw ValidationError(Errc::incomplete_strategy,
                                      "reporting probabilities must be >= 0");
            }
            row_sum += row[d];
            if (row[d] > 0.0) {
                total += f.weights[j] * row[d] *
                         net_utility(contract, f.support[j], d, cost);
            }
        }
        if (std::fabs(row_sum - 1.0) > 1e-9) {
            throw ValidationError(Errc::incomplete_strategy,
                                  "reporting row must sum to one");
        }
    }
    return total;
}

double principal_cost(const Contract& contract,
                      const PosteriorDistribution& f,
                      const UtilityModel& utility) {
    if (f.size() != contract.message_count()) {
        throw ValidationError(Errc::domain_violation,
                              "distribution and contract shapes differ");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const Belief& x = f.support[j];
        const auto& t = contract.transfers[j];
        double row = 0.0;
        for (std::size_t k = 0; k < x.states(); ++k) {
            row += x[k] * utility.to_money(t[k]);
        }
        total += f.weights[j] * row;
    }
    return total;
}

double expected_transfer_utils(const Contract& contract,
                               const PosteriorDistribution& f) {
    if (f.size() != contract.message_count()) {
        throw ValidationError(Errc::domain_violation,
                              "distribution and contract shapes differ");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const Belief& x = f.support[j];
        const auto& t = contract.transfers[j];
        double row = 0.0;
        for (std::size_t k = 0; k < x.states(); ++k) row += x[k] * t[k];
        total += f.weights[j] * row;
    }
    return total;
}

double first_best_cost(const PosteriorDistribution& f, const CostModel& cost,
                       const UtilityModel& utility, double v0) {
    return utility.to_money(cost.expected_cost(f) + v0);
}

}  // namespace infopact
