#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infopact/belief.hpp"
#include "infopact/contract.hpp"
#include "infopact/cost.hpp"

namespace infopact {

struct Witness {
    std::string kind;
    std::size_t message = 0;
    Belief where;
    double amount = 0.0;
};

struct DominanceCheck {
    bool ok = false;
    bool hyperplanes_coincide = false;
    double hyperplane_gap = 0.0;  // worst slope/intercept spread across tangents
    double margin = 0.0;          // min over d of min_x f_H(x) - N(x|d)
    Hyperplane hyperplane;        // candidate concavifying hyperplane
    std::vector<Witness> witnesses;
    std::vector<Witness> ties;  // off-support contact points (knife edges)
    std::string certified_by;
};

// Honest-learning check: all message tangents must agree, the common
// hyperplane must dominate every N(.|d) globally, and it must touch W at
// every support point.
DominanceCheck check_hyperplane_dominance(const Contract& contract,
                                          const PosteriorDistribution& f,
                                          const CostModel& cost,
                                          double tol = 1e-9);

struct WalkawayCheck {
    bool ok = false;
    double margin = 0.0;  // min_x f_H(x) - (v0 - kappa c(x))
    Belief argmin;
    std::string certified_by;
};

// Walk-away constraint: f_H >= v0 - kappa*c on the whole simplex, decided by
// minimizing the convex gap with a dense-grid cross-check.
WalkawayCheck check_ic_walkaway(const Contract& contract,
                                const PosteriorDistribution& f,
                                const CostModel& cost, double v0,
                                double tol = 1e-9);

struct ImplementationReport {
    bool implementable = false;
    bool honest_learning_ok = false;
    bool hyperplanes_coincide = false;
    double hyperplane_gap = 0.0;
    double dominance_margin = 0.0;
    double ic_margin = 0.0;
    Belief ic_argmin;
    bool ll_required = false;
    bool ll_ok = true;
    double min_transfer = 0.0;
    double agent_surplus = 0.0;  // f_H(mu) - v0
    double principal_cost = 0.0;
    double first_best_cost = 0.0;
    Hyperplane hyperplane;
    std::vector<Witness> witnesses;
    std::vector<Witness> ties;
    std::string certified_by;
};

ImplementationReport verify(const Contract& contract,
                            const PosteriorDistribution& f,
                            const CostModel& cost,
                            const UtilityModel& utility, double v0,
                            bool require_ll, double tol = 1e-9);

struct Concavification {
    std::vector<double> contacts;  // first-state probabilities, ascending
    Hyperplane hyperplane;         // the segment supporting the prior
};

// Upper concave envelope of W on the unit interval via the upper hull of
// sampled points, refined around the prior's segment endpoints.
Concavification concavify_two_state(const Contract& contract,
                                    const CostModel& cost,
                                    std::size_t resolution);

struct OracleResult {
    double best_value = 0.0;
    std::vector<Belief> best_support;
    std::vector<double> best_weights;
    bool walkaway_used = false;
};

// Independent ground truth for the agent's problem: exhaustive over grid
// pairs spanning the prior (two states), sampled supports otherwise. The
// value of stopping at belief x is max(W(x), v0).
OracleResult brute_force_agent_oracle(const Contract& contract,
                                      const CostModel& cost, double v0,
                                      std::size_t resolution,
                                      unsigned seed = 0);

struct EtaValues {
    double eta1 = 0.0;  // threshold driven by the high posterior
    double eta2 = 0.0;  // threshold driven by the low posterior
    double eta = 0.0;   // max of the two
};

// Efficiency-under-limited-liability threshold for a binary support
// {x_low, x_high} given in first-state probabilities:
//   eta1 = -mu c'(mu) - c(x_high) + c'(x_high) x_high
//   eta2 = (1-mu) c'(mu) - c(x_low) - (1-x_low) c'(x_low)
EtaValues eta(double x_low, double x_high, const CostModel& cost);

// Mean-preserving-contraction test for binary two-state experiments with a
// common prior: true iff the first support nests inside the second.
bool blackwell_leq_two_state(const PosteriorDistribution& f1,
                             const PosteriorDistribution& f2);

}  // namespace infopact
