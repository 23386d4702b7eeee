#pragma once

#include <cstddef>
#include <vector>

#include "infopact/belief.hpp"
#include "infopact/contract.hpp"
#include "infopact/cost.hpp"

namespace infopact {

// Kernel of the transfer algebra: tangent-intercept core
//   base(x) = kappa*c(x) - sum_k kappa*c_k(x) x_k
// and the cross-message offsets
//   Xi(i,j)   = base(x_i) - base(x_j)
//   X^k(i,j)  = kappa*c_k(x_i) - kappa*c_k(x_j) + Xi(i,j)   (k < n)
//   X^n(i,j)  = Xi(i,j)
// Any contract whose message hyperplanes coincide satisfies
// t_i^k = t_j^k + X^k(i,j).
double tangent_intercept_core(const Belief& x, const CostModel& cost);
std::vector<double> cross_message_offset(const Belief& xi, const Belief& xj,
                                         const CostModel& cost);

// Flat-hyperplane contract: every message tangent is the constant
// tau* = v0 - kappa * min_simplex c, the smallest level satisfying the
// walk-away constraint.
Contract construct_tau_contract(const PosteriorDistribution& f,
                                const CostModel& cost, double v0);

// Completes a full transfer matrix from the benchmark row (last support
// point) so that all message hyperplanes coincide.
Contract expand_benchmark(const std::vector<double>& benchmark_transfers,
                          const PosteriorDistribution& f,
                          const CostModel& cost);

// Efficient implementation: concavifying hyperplane tangent to
// v0 - kappa*c at the prior, so the agent's surplus is exactly v0 and the
// risk-neutral expected transfer is C(F) + v0.
Contract construct_efficient(const PosteriorDistribution& f,
                             const CostModel& cost, double v0);

// Zero-outside-option limited-liability optimum: one zero transfer per
// state, everything else pinned by optimal learning; all transfers >= 0.
Contract construct_ll_zero(const PosteriorDistribution& f,
                           const CostModel& cost);

struct EfficientLLResult {
    bool feasible = false;
    Contract contract;        // meaningful only when feasible
    double min_transfer = 0.0;
    std::size_t worst_message = 0;
    std::size_t worst_state = 0;
    // Two-state diagnostics (NaN when n > 2, where no closed threshold
    // exists and feasibility is decided entry-wise).
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta = 0.0;
    double margin = 0.0;  // v0 - kappa * eta
};

// Efficient implementation under limited liability: feasible exactly when
// every efficient transfer clears -1e-9.
EfficientLLResult construct_efficient_ll(const PosteriorDistribution& f,
                                         const CostModel& cost, double v0);

}  // namespace infopact
