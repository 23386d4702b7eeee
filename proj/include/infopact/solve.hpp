#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infopact/belief.hpp"
#include "infopact/construct.hpp"
#include "infopact/contract.hpp"
#include "infopact/cost.hpp"
#include "infopact/verify.hpp"

namespace infopact {

// Contract whose concavifying hyperplane is tangent to v0 - kappa*c at the
// given interior point; reduces to construct_efficient at the prior.
Contract tangency_contract(const PosteriorDistribution& f,
                           const CostModel& cost, double v0,
                           const Belief& x_star);

struct TangencySolution {
    Belief x_star;
    Contract contract;
    double principal_cost = 0.0;  // money
    double surplus = 0.0;         // f_H(mu) - v0 >= 0
    double ic_margin = 0.0;       // ~0: the walk-away constraint binds
    double start_dispersion = 0.0;  // spread across multistarts (n > 2)
};

// Minimizes the money cost of implementing f over the tangency point.
// Risk-neutral utility short-circuits to x* = prior (the efficient
// construction); two states use a scan plus golden section, more states a
// multistart projected descent on finite-difference gradients.
TangencySolution solve_risk_averse_tangency(const PosteriorDistribution& f,
                                            const CostModel& cost,
                                            const UtilityModel& utility,
                                            double v0, unsigned seed = 0);

// Closed-form principal objective for two states, entropy cost, and
// logarithmic utility at zero outside option, as a function of the tangency
// point x. Strictly convex on (0,1) and unbounded at both ends.
double entropy_log_objective(double x, double x_low, double x_high, double mu,
                             double kappa);
// Residual of the first-order condition of the same objective.
double entropy_log_foc(double x, double x_low, double x_high, double mu,
                       double kappa);

enum class RegionKind {
    efficient,
    interior_zero_zero,
    beta_zero,
    gamma_zero,
    unresolved,
};

const char* region_kind_name(RegionKind kind);

// Optimal risk-neutral limited-liability implementation of a binary support.
// gamma/beta are the floor transfers: gamma for the high message in the
// second state, beta for the low message in the first state (both zero in
// the interior region, both positive never).
struct RegionLabel {
    RegionKind label = RegionKind::unresolved;
    Contract contract;
    double principal_cost = 0.0;
    double gamma = 0.0;
    double beta = 0.0;
    double ic_margin = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta = 0.0;
    double x_dagger = 0.0;  // minimizer of the zero-floor walk-away gap
};

RegionLabel solve_ll_risk_neutral_two_state(const PosteriorDistribution& f,
                                            const CostModel& cost, double v0);

struct RegionCell {
    double x_low = 0.0;
    double x_high = 0.0;
    RegionKind label = RegionKind::unresolved;
    double gamma = 0.0;
    double beta = 0.0;
    double principal_cost = 0.0;
    double ic_margin = 0.0;
    bool resolved = false;
};

struct RegionGrid {
    double mu = 0.0;
    double v0_over_kappa = 0.0;
    std::size_t resolution = 0;
    std::vector<RegionCell> cells;
    std::size_t unresolved_count = 0;

    std::size_t count(RegionKind kind) const;
};

// Classifies every (x_low, x_high) cell of a resolution x resolution grid
// over (0, mu) x (mu, 1); cells within 1e-4 of the prior or the boundary are
// left out.
RegionGrid sweep_regions(const CostModel& cost, double v0_over_kappa,
                         std::size_t resolution);

}  // namespace infopact
