#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infopact/belief.hpp"

namespace infopact {

enum class CostKind { entropy, quadratic, custom };

// Posterior-separable information cost: expected cost of a distribution F is
// kappa * sum_j p_j c(x_j), with c strictly convex and c(prior) = 0.
//
// Entropy:   c(x) = sum_i x_i ln x_i - sum_i mu_i ln mu_i.
// Quadratic: two states use the scalar form c(x) = (x_1 - mu_1)^2; with more
//            states c(x) = sum_i (x_i - mu_i)^2.
// Gradients are reduced: partials with respect to the first n-1 entries after
// substituting x_n = 1 - sum_{i<n} x_i.
class CostModel {
public:
    using ValueFn = std::function<double(const Belief&)>;
    using GradientFn = std::function<std::vector<double>(const Belief&)>;

    static CostModel entropy(double kappa, Belief prior);
    static CostModel quadratic(double kappa, Belief prior);
    // Caller supplies c and its reduced gradient; c(prior) = 0, convexity,
    // and gradient consistency are spot-checked at construction.
    static CostModel custom(double kappa, Belief prior, ValueFn value,
                            GradientFn gradient_reduced,
                            bool boundary_safe_value = false);

    CostKind kind() const { return kind_; }
    double kappa() const { return kappa_; }
    const Belief& prior() const { return prior_; }
    std::size_t states() const { return prior_.states(); }

    // c(x), before kappa scaling. Entropy rejects zero coordinates.
    double value(const Belief& x) const;
    // kappa * c(x).
    double scaled_value(const Belief& x) const { return kappa_ * value(x); }
    // Reduced gradient of c; requires an interior point.
    std::vector<double> gradient_reduced(const Belief& x) const;
    std::vector<double> scaled_gradient_reduced(const Belief& x) const;

    // Two-state scalar shortcuts; x is the first-state probability.
    double value1(double x) const;
    double gradient1(double x) const;

    // kappa * sum_j p_j c(x_j).
    double expected_cost(const PosteriorDistribution& f) const;

    // min over the simplex of c (unscaled); golden section at n = 2,
    // projected convex descent with a grid polish otherwise.
    double min_value_on_simplex() const;

    // Whether value() tolerates boundary points (entropy extends
    // continuously, quadratic is total).
    bool boundary_safe_value() const { return boundary_safe_value_; }

    // A full-coordinate gradient representative for simplex minimizers.
    std::vector<double> gradient_full(const Belief& x) const;

private:
    CostModel(CostKind kind, double kappa, Belief prior);

    CostKind kind_;
    double kappa_;
    Belief prior_;
    ValueFn custom_value_;
    GradientFn custom_gradient_;
    bool boundary_safe_value_ = false;
};

}  // namespace infopact
