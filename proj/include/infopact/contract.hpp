#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "infopact/belief.hpp"
#include "infopact/cost.hpp"

namespace infopact {

enum class UtilityKind { risk_neutral, log, custom };

// Transfers are kept in utils throughout; money appears only where v^{-1} is
// applied. Log utility: v(t) = ln(t + 1), v^{-1}(u) = e^u - 1.
class UtilityModel {
public:
    using Fn = std::function<double(double)>;

    static UtilityModel risk_neutral();
    static UtilityModel log_utility();
    static UtilityModel custom(Fn v, Fn v_inverse);

    UtilityKind kind() const { return kind_; }
    bool is_risk_neutral() const { return kind_ == UtilityKind::risk_neutral; }
    double to_utils(double money) const;
    double to_money(double utils) const;

private:
    UtilityModel(UtilityKind kind) : kind_(kind) {}
    UtilityKind kind_;
    Fn v_;
    Fn v_inverse_;
};

// Message space = support posteriors; transfers[j][k] is the util payment for
// message j when state k realizes.
struct Contract {
    std::vector<Belief> messages;
    std::vector<std::vector<double>> transfers;

    std::size_t message_count() const { return messages.size(); }
    std::size_t states() const {
        return messages.empty() ? 0 : messages.front().states();
    }
};

Contract make_contract(std::vector<Belief> messages,
                       std::vector<std::vector<double>> transfers);

// Affine function of the reduced coordinates x_1..x_{n-1}.
struct Hyperplane {
    std::vector<double> slopes;
    double intercept = 0.0;

    double value(const Belief& x) const;
};

// N(x|d): expected transfer of message d at belief x minus kappa*c(x).
double net_utility(const Contract& contract, const Belief& x,
                   std::size_t message, const CostModel& cost);

struct ValueResult {
    double value = 0.0;
    std::vector<std::size_t> argmax;  // ties within 1e-10
};

// W(x) = max_d N(x|d) with the full tie set.
ValueResult value_function(const Contract& contract, const Belief& x,
                           const CostModel& cost);

// Tangent hyperplane to N(.|j) at the message posterior x_j:
//   slope_k  = t_j^k - t_j^n - kappa c_k(x_j)
//   intercept = t_j^n - kappa c(x_j) + kappa sum_k c_k(x_j) x_j^k
Hyperplane hyperplane_from_message(const Contract& contract, std::size_t j,
                                   const CostModel& cost);

// Value of a learning-plus-reporting pair: rows of `reporting` give the
// message distribution used at each support point of f.
double strategy_value(const Contract& contract,
                      const PosteriorDistribution& f,
                      const std::vector<std::vector<double>>& reporting,
                      const CostModel& cost);

// Expected money outlay under truthful reporting.
double principal_cost(const Contract& contract,
                      const PosteriorDistribution& f,
                      const UtilityModel& utility);

// Expected transfer in utils under truthful reporting (the risk-neutral
// principal cost).
double expected_transfer_utils(const Contract& contract,
                               const PosteriorDistribution& f);

// v^{-1}(C(F) + v0): cost when the chosen distribution is contractible.
double first_best_cost(const PosteriorDistribution& f, const CostModel& cost,
                       const UtilityModel& utility, double v0);

}  // namespace infopact
