#include "infopact/construct.hpp"

#include <cmath>
#include <limits>

#include "infopact/errors.hpp"
#include "infopact/verify.hpp"

namespace infopact {

namespace {

constexpr double kLLTol = 1e-9;

void require_interior_support(const PosteriorDistribution& f) {
    for (const Belief& x : f.support) {
        if (!x.interior()) {
            throw ValidationError(Errc::boundary_support,
                                  "support must be interior to the simplex");
        }
    }
}

}  // namespace

double tangent_intercept_core(const Belief& x, const CostModel& cost) {
    const std::vector<double> grad = cost.scaled_gradient_reduced(x);
    double core = cost.scaled_value(x);
    for (std::size_t k = 0; k < grad.size(); ++k) core -= grad[k] * x[k];
    return core;
}

std::vector<double> cross_message_offset(const Belief& xi, const Belief& xj,
                                         const CostModel& cost) {
    const std::size_t n = xi.states();
    const double xi_offset =
        tangent_intercept_core(xi, cost) - tangent_intercept_core(xj, cost);
    const std::vector<double> gi = cost.scaled_gradient_reduced(xi);
    const std::vector<double> gj = cost.scaled_gradient_reduced(xj);
    std::vector<double> x(n);
    for (std::size_t k = 0; k + 1 < n; ++k) x[k] = gi[k] - gj[k] + xi_offset;
    x[n - 1] = xi_offset;
    return x;
}

Contract construct_tau_contract(const PosteriorDistribution& f,
                                const CostModel& cost, double v0) {
    require_interior_support(f);
    const std::size_t n = cost.states();
    const double tau = v0 - cost.kappa() * cost.min_value_on_simplex();
    std::vector<std::vector<double>> transfers(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const Belief& xj = f.support[j];
        const double core = tangent_intercept_core(xj, cost);
        const std::vector<double> grad = cost.scaled_gradient_reduced(xj);
        std::vector<double> row(n);
        for (std::size_t k = 0; k + 1 < n; ++k) row[k] = core + grad[k] + tau;
        row[n - 1] = core + tau;
        transfers[j] = std::move(row);
    }
    return make_contract(f.support, std::move(transfers));
}

Contract expand_benchmark(const std::vector<double>& benchmark_transfers,
                          const PosteriorDistribution& f,
                          const CostModel& cost) {
    require_interior_support(f);
    const std::size_t n = cost.states();
    const std::size_t m = f.size();
    if (benchmark_transfers.size() != n) {
        throw ValidationError(Errc::domain_violation,
                              "benchmark row needs one transfer per state");
    }
    const Belief& bench = f.support[m - 1];
    std::vector<std::vector<double>> transfers(m);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const std::vector<double> offset =
            cross_message_offset(f.support[j], bench, cost);
        std::vector<double> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = benchmark_transfers[k] + offset[k];
        }
        transfers[j] = std::move(row);
    }
    transfers[m - 1] = benchmark_transfers;
    return make_contract(f.support, std::move(transfers));
}

Contract construct_efficient(const PosteriorDistribution& f,
                             const CostModel& cost, double v0) {
    require_interior_support(f);
    const std::size_t n = cost.states();
    const Belief& bench = f.support[f.size() - 1];
    const Belief& mu = cost.prior();
    const std::vector<double> grad_bench = cost.scaled_gradient_reduced(bench);
    const std::vector<double> grad_mu = cost.scaled_gradient_reduced(mu);

    // Level pinned by f_H(mu) = v0, slopes by the tangency at the prior.
    double t_last = v0 + tangent_intercept_core(bench, cost);
    for (std::size_t k = 0; k + 1 < n; ++k) t_last += mu[k] * grad_mu[k];

    std::vector<double> bench_row(n);
    bench_row[n - 1] = t_last;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        bench_row[k] = t_last + grad_bench[k] - grad_mu[k];
    }
    return expand_benchmark(bench_row, f, cost);
}

Contract construct_ll_zero(const PosteriorDistribution& f,
                           const CostModel& cost) {
    require_interior_support(f);
    const std::size_t n = cost.states();
    const std::size_t m = f.size();
    const Belief& bench = f.support[m - 1];

    // X^k(j, m) for every message j against the benchmark.
    std::vector<std::vector<double>> offsets(m);
    for (std::size_t j = 0; j < m; ++j) {
        offsets[j] = (j + 1 == m) ? std::vector<double>(n, 0.0)
                                  : cross_message_offset(f.support[j], bench,
                                                         cost);
    }

    std::vector<std::vector<double>> transfers(m, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        // Lowest-index minimizer among the strictly negative offsets; the
        // benchmark itself when none are negative.
        std::size_t j_star = m - 1;
        double lowest = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (offsets[j][k] < lowest - 0.0) {
                lowest = offsets[j][k];
                j_star = j;
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            const double t = offsets[j][k] - offsets[j_star][k];
            transfers[j][k] = (j == j_star) ? 0.0 : t;
        }
    }
    return make_contract(f.support, std::move(transfers));
}

EfficientLLResult construct_efficient_ll(const PosteriorDistribution& f,
                                         const CostModel& cost, double v0) {
    EfficientLLResult out;
    Contract contract = construct_efficient(f, cost, v0);

    out.min_transfer = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < contract.message_count(); ++j) {
        for (std::size_t k = 0; k < contract.states(); ++k) {
            if (contract.transfers[j][k] < out.min_transfer) {
                out.min_transfer = contract.transfers[j][k];
                out.worst_message = j;
                out.worst_state = k;
            }
        }
    }
    out.feasible = out.min_transfer >= -kLLTol;

    if (cost.states() == 2) {
        // Sorted two-state support; degenerate distributions count both
        // bounds at the prior.
        double x_low = f.support.front()[0];
        double x_high = x_low;
        for (const Belief& x : f.support) {
            x_low = std::min(x_low, x[0]);
            x_high = std::max(x_high, x[0]);
        }
        const EtaValues e = eta(x_low, x_high, cost);
        out.eta1 = e.eta1;
        out.eta2 = e.eta2;
        out.eta = e.eta;
        out.margin = v0 - cost.kappa() * e.eta;
    } else {
        out.eta1 = out.eta2 = out.eta = out.margin =
            std::numeric_limits<double>::quiet_NaN();
    }
    if (out.feasible) out.contract = std::move(contract);
    return out;
}

}  // namespace infopact
