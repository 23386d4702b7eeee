#include "infopact/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "infopact/errors.hpp"
#include "infopact/numeric.hpp"

namespace infopact {

namespace {

constexpr double kICMarginTol = 1e-10;

void require_interior_support(const PosteriorDistribution& f) {
    for (const Belief& x : f.support) {
        if (!x.interior()) {
            throw ValidationError(Errc::boundary_support,
                                  "support must be interior to the simplex");
        }
    }
}

// Monotone solve of c'(x) = target on [lo, hi]; clamps to the nearer end
// when the target is outside the attained range.
double invert_cost_slope(const CostModel& cost, double target, double lo,
                         double hi) {
    const double glo = cost.gradient1(lo);
    const double ghi = cost.gradient1(hi);
    if (target <= glo) return lo;
    if (target >= ghi) return hi;
    auto fn = [&](double x) { return cost.gradient1(x) - target; };
    return numeric::bisect_root_increasing(fn, lo, hi);
}

}  // namespace

Contract tangency_contract(const PosteriorDistribution& f,
                           const CostModel& cost, double v0,
                           const Belief& x_star) {
    require_interior_support(f);
    if (!x_star.interior()) {
        throw ValidationError(Errc::boundary_point,
                              "tangency point must be interior");
    }
    const std::size_t n = cost.states();
    const Belief& bench = f.support[f.size() - 1];
    const std::vector<double> grad_bench = cost.scaled_gradient_reduced(bench);
    const std::vector<double> grad_star = cost.scaled_gradient_reduced(x_star);

    double t_last = v0 - cost.scaled_value(x_star) +
                    tangent_intercept_core(bench, cost);
    for (std::size_t k = 0; k + 1 < n; ++k) t_last += grad_star[k] * x_star[k];

    std::vector<double> bench_row(n);
    bench_row[n - 1] = t_last;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        bench_row[k] = t_last + grad_bench[k] - grad_star[k];
    }
    return expand_benchmark(bench_row, f, cost);
}

TangencySolution solve_risk_averse_tangency(const PosteriorDistribution& f,
                                            const CostModel& cost,
                                            const UtilityModel& utility,
                                            double v0, unsigned seed) {
    require_interior_support(f);
    const std::size_t n = cost.states();

    auto solution_at = [&](const Belief& x_star) {
        TangencySolution s;
        s.x_star = x_star;
        s.contract = tangency_contract(f, cost, v0, x_star);
        s.principal_cost = principal_cost(s.contract, f, utility);
        const Hyperplane h = hyperplane_from_message(s.contract, 0, cost);
        s.surplus = h.value(f.prior) - v0;
        s.ic_margin = h.value(x_star) - v0 + cost.scaled_value(x_star);
        return s;
    };

    if (utility.is_risk_neutral()) {
        return solution_at(cost.prior());
    }

    if (n == 2) {
        const double band = 1e-7;
        auto objective = [&](double x) {
            return principal_cost(tangency_contract(f, cost, v0,
                                                    Belief{{x, 1.0 - x}}),
                                  f, utility);
        };
        // Coarse scan to bracket the minimum, then golden section.
        const int scan = 256;
        int best_i = 0;
        double best_val = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= scan; ++i) {
            const double x =
                band + (1.0 - 2.0 * band) * static_cast<double>(i) / scan;
            const double val = objective(x);
            if (val < best_val) {
                best_val = val;
                best_i = i;
            }
        }
        const double step = (1.0 - 2.0 * band) / scan;
        const double lo =
            std::max(band, band + step * static_cast<double>(best_i - 1));
        const double hi =
            std::min(1.0 - band, band + step * static_cast<double>(best_i + 1));
        auto res = numeric::golden_section_min(objective, lo, hi, 1e-13, 300);
        if (res.x < 2.0 * band || res.x > 1.0 - 2.0 * band) {
            throw SolverError(Errc::boundary_drift,
                              "tangency optimum at the simplex boundary, x=" +
                                  std::to_string(res.x));
        }
        return solution_at(Belief{{res.x, 1.0 - res.x}});
    }

    // Multistart projected descent on finite-difference gradients.
    const double band = 1e-7;
    auto objective = [&](const std::vector<double>& p) {
        return principal_cost(tangency_contract(f, cost, v0, Belief{p}), f,
                              utility);
    };
    auto fd_grad = [&](const std::vector<double>& p) {
        const double h = 1e-7;
        std::vector<double> g(n, 0.0);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::vector<double> hi = p, lo_v = p;
            hi[k] += h;
            hi[n - 1] -= h;
            lo_v[k] -= h;
            lo_v[n - 1] += h;
            g[k] = (objective(hi) - objective(lo_v)) / (2.0 * h);
        }
        return g;
    };
    std::vector<std::vector<double>> starts;
    starts.push_back(cost.prior().probs);
    starts.push_back(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    while (starts.size() < 9) {
        std::vector<double> p(n);
        double s = 0.0;
        for (double& v : p) {
            v = unif(rng);
            s += v;
        }
        for (double& v : p) v /= s;
        starts.push_back(std::move(p));
    }
    double best_val = 0.0, worst_val = 0.0;
    std::vector<double> best_x;
    bool have = false;
    for (const auto& start : starts) {
        auto res = numeric::minimize_convex_on_simplex(n, objective, fd_grad,
                                                       band, {start});
        if (!have || res.value < best_val) {
            best_val = res.value;
            best_x = res.x;
        }
        worst_val = have ? std::max(worst_val, res.value) : res.value;
        have = true;
    }
    for (double p : best_x) {
        if (p < 10.0 * band) {
            throw SolverError(Errc::boundary_drift,
                              "tangency optimum at the simplex boundary");
        }
    }
    TangencySolution s = solution_at(Belief{best_x});
    s.start_dispersion = worst_val - best_val;
    return s;
}

double entropy_log_objective(double x, double x_low, double x_high, double mu,
                             double kappa) {
    if (!(x > 0.0 && x < 1.0) || !(x_low > 0.0 && x_low < mu) ||
        !(x_high > mu && x_high < 1.0)) {
        throw ValidationError(Errc::domain_violation,
                              "entropy_log_objective needs 0<x<1 and "
                              "0<x_low<mu<x_high<1");
    }
    const double span = x_high - x_low;
    const double hi_term = std::pow(x_high, kappa + 1.0) / x +
                           std::pow(1.0 - x_high, kappa + 1.0) / (1.0 - x);
    const double lo_term = std::pow(x_low, kappa + 1.0) / x +
                           std::pow(1.0 - x_low, kappa + 1.0) / (1.0 - x);
    return -1.0 + ((mu - x_low) * hi_term + (x_high - mu) * lo_term) / span;
}

double entropy_log_foc(double x, double x_low, double x_high, double mu,
                       double kappa) {
    if (!(x > 0.0 && x < 1.0) || !(x_low > 0.0 && x_low < mu) ||
        !(x_high > mu && x_high < 1.0)) {
        throw ValidationError(Errc::domain_violation,
                              "entropy_log_foc needs 0<x<1 and "
                              "0<x_low<mu<x_high<1");
    }
    const double one_minus = 1.0 - x;
    return (mu - x_low) * (std::pow(1.0 - x_high, kappa + 1.0) /
                               (one_minus * one_minus) -
                           std::pow(x_high, kappa + 1.0) / (x * x)) +
           (x_high - mu) * (std::pow(1.0 - x_low, kappa + 1.0) /
                                (one_minus * one_minus) -
                            std::pow(x_low, kappa + 1.0) / (x * x));
}

const char* region_kind_name(RegionKind kind) {
    switch (kind) {
        case RegionKind::efficient: return "efficient";
        case RegionKind::interior_zero_zero: return "interior_zero_zero";
        case RegionKind::beta_zero: return "beta_zero";
        case RegionKind::gamma_zero: return "gamma_zero";
        case RegionKind::unresolved: return "unresolved";
    }
    return "unresolved";
}

RegionLabel solve_ll_risk_neutral_two_state(const PosteriorDistribution& f,
                                            const CostModel& cost, double v0) {
    if (cost.states() != 2) {
        throw ValidationError(Errc::unsupported_shape,
                              "this solver handles two states");
    }
    if (v0 < 0.0) {
        throw ValidationError(Errc::domain_violation,
                              "outside option must be nonnegative");
    }
    require_interior_support(f);
    const double mu = cost.prior()[0];
    const double kappa = cost.kappa();

    // Sorted binary support; a degenerate distribution is its own bounds.
    double x_low = f.support.front()[0];
    double x_high = x_low;
    for (const Belief& x : f.support) {
        x_low = std::min(x_low, x[0]);
        x_high = std::max(x_high, x[0]);
    }
    PosteriorDistribution sorted =
        f.degenerate() ? f
                       : make_binary_distribution(x_low, x_high, mu);

    RegionLabel out;
    const EtaValues e = eta(x_low, x_high, cost);
    out.eta1 = e.eta1;
    out.eta2 = e.eta2;
    out.eta = e.eta;

    if (v0 / kappa >= e.eta - 1e-9) {
        out.label = RegionKind::efficient;
        out.contract = construct_efficient(sorted, cost, v0);
        out.principal_cost = expected_transfer_utils(out.contract, sorted);
        out.ic_margin = 0.0;  // binds at the prior by construction
        if (sorted.degenerate()) {
            out.gamma = out.beta = v0;
        } else {
            out.beta = out.contract.transfers[0][0];   // = v0 - kappa*eta2
            out.gamma = out.contract.transfers[1][1];  // = v0 - kappa*eta1
        }
        out.x_dagger = mu;
        return out;
    }

    // Zero floors: walk-away gap g(x) = f0(x) - v0 + kappa*c(x) is convex
    // with its minimum right of x_low.
    Contract zeros = construct_ll_zero(sorted, cost);
    const Hyperplane f0 = hyperplane_from_message(zeros, 0, cost);
    const double lo_eval = kInteriorEps, hi_eval = 1.0 - kInteriorEps;
    auto gap_at = [&](double x, double beta_lift, double gamma_lift) {
        return f0.value(Belief{{x, 1.0 - x}}) + beta_lift * x +
               gamma_lift * (1.0 - x) - v0 + cost.value1(x) * kappa;
    };
    auto min_gap = [&](double beta_lift, double gamma_lift) {
        const double target = (gamma_lift - beta_lift - f0.slopes[0]) / kappa;
        const double x_hat = invert_cost_slope(cost, target, lo_eval, hi_eval);
        return std::pair<double, double>{gap_at(x_hat, beta_lift, gamma_lift),
                                         x_hat};
    };

    const auto [g_dagger, x_dagger] = min_gap(0.0, 0.0);
    out.x_dagger = x_dagger;
    if (g_dagger >= -kICMarginTol) {
        out.label = RegionKind::interior_zero_zero;
        out.contract = zeros;
        out.principal_cost = expected_transfer_utils(zeros, sorted);
        out.ic_margin = g_dagger;
        out.gamma = out.beta = 0.0;
        return out;
    }

    // One-sided floors: the minimal lift making the gap vanish, found by
    // monotone bisection (the concavifying line rises pointwise in the lift).
    auto solve_side = [&](bool lift_beta, double& lift_out, double& margin_out,
                          bool& feasible) {
        auto phi = [&](double s) {
            return min_gap(lift_beta ? s : 0.0, lift_beta ? 0.0 : s).first;
        };
        double hi = 1e-3;
        const double cap = 1e6 * (1.0 + v0 + kappa);
        while (phi(hi) < 0.0) {
            hi *= 2.0;
            if (hi > cap) {
                feasible = false;
                return;
            }
        }
        double lo = 0.0;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (phi(mid) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lift_out = hi;
        margin_out = phi(hi);
        feasible = true;
    };

    double beta_lift = 0.0, beta_margin = 0.0;
    bool beta_feasible = false;
    solve_side(true, beta_lift, beta_margin, beta_feasible);
    double gamma_lift = 0.0, gamma_margin = 0.0;
    bool gamma_feasible = false;
    solve_side(false, gamma_lift, gamma_margin, gamma_feasible);

    if (!beta_feasible && !gamma_feasible) {
        throw SolverError(Errc::non_convergence,
                          "no one-sided floor restores the walk-away "
                          "constraint; inconsistent with the two-state "
                          "characterization");
    }

    auto lifted = [&](double beta_l, double gamma_l) {
        Contract c = zeros;
        for (auto& row : c.transfers) {
            row[0] += beta_l;
            row[1] += gamma_l;
        }
        return c;
    };
    const double beta_cost = beta_feasible ? beta_lift * mu : 1e300;
    const double gamma_cost =
        gamma_feasible ? gamma_lift * (1.0 - mu) : 1e300;

    if (beta_cost <= gamma_cost) {
        out.label = RegionKind::gamma_zero;  // gamma stays at zero
        out.beta = beta_lift;
        out.gamma = 0.0;
        out.contract = lifted(beta_lift, 0.0);
        out.ic_margin = beta_margin;
    } else {
        out.label = RegionKind::beta_zero;
        out.beta = 0.0;
        out.gamma = gamma_lift;
        out.contract = lifted(0.0, gamma_lift);
        out.ic_margin = gamma_margin;
    }
    out.principal_cost = expected_transfer_utils(out.contract, sorted);
    return out;
}

std::size_t RegionGrid::count(RegionKind kind) const {
    std::size_t total = 0;
    for (const RegionCell& cell : cells) {
        if (cell.label == kind) ++total;
    }
    return total;
}

RegionGrid sweep_regions(const CostModel& cost, double v0_over_kappa,
                         std::size_t resolution) {
    if (cost.states() != 2) {
        throw ValidationError(Errc::unsupported_shape,
                              "region sweep handles two states");
    }
    if (resolution < 2) {
        throw ValidationError(Errc::domain_violation,
                              "sweep resolution must be at least 2");
    }
    const double mu = cost.prior()[0];
    const double v0 = v0_over_kappa * cost.kappa();
    constexpr double kEdge = 1e-4;

    RegionGrid grid;
    grid.mu = mu;
    grid.v0_over_kappa = v0_over_kappa;
    grid.resolution = resolution;
    for (std::size_t i = 0; i < resolution; ++i) {
        const double x_low =
            mu * (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
        if (x_low < kEdge || mu - x_low < kEdge) continue;
        for (std::size_t j = 0; j < resolution; ++j) {
            const double x_high =
                mu + (1.0 - mu) * (static_cast<double>(j) + 0.5) /
                         static_cast<double>(resolution);
            if (x_high - mu < kEdge || 1.0 - x_high < kEdge) continue;
            RegionCell cell;
            cell.x_low = x_low;
            cell.x_high = x_high;
            try {
                const PosteriorDistribution f =
                    make_binary_distribution(x_low, x_high, mu);
                const RegionLabel lab =
                    solve_ll_risk_neutral_two_state(f, cost, v0);
                cell.label = lab.label;
                cell.gamma = lab.gamma;
                cell.beta = lab.beta;
                cell.principal_cost = lab.principal_cost;
                cell.ic_margin = lab.ic_margin;
                cell.resolved = true;
            } catch (const Error&) {
                cell.label = RegionKind::unresolved;
                cell.resolved = false;
                ++grid.unresolved_count;
            }
            grid.cells.push_back(cell);
        }
    }
    return grid;
}

}  // namespace infopact
