#include "infopact/belief.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infopact/errors.hpp"
#include "infopact/numeric.hpp"

namespace infopact {

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kBayesTol = 1e-10;

bool same_point(const Belief& a, const Belief& b) {
    for (std::size_t i = 0; i < a.states(); ++i) {
        if (std::fabs(a[i] - b[i]) > 1e-12) return false;
    }
    return true;
}

}  // namespace

bool Belief::interior(double eps) const {
    // Slack of one ulp-of-one absorbs round-off in complements like
    // 1.0 - (1.0 - eps).
    for (double p : probs) {
        if (p < eps - 1e-15) return false;
    }
    return true;
}

Belief make_belief(std::vector<double> probs) {
    if (probs.size() < 2) {
        throw ValidationError(Errc::too_few_states,
                              "belief needs at least two states");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p)) {
            throw ValidationError(Errc::non_finite, "belief entry not finite");
        }
        if (p < 0.0) {
            throw ValidationError(Errc::negative_entry,
                                  "belief entry below zero");
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kSumTol) {
        throw ValidationError(Errc::sum_not_one,
                              "belief entries sum to " + std::to_string(sum));
    }
    return Belief{std::move(probs)};
}

Belief make_belief2(double p_first_state) {
    return make_belief({p_first_state, 1.0 - p_first_state});
}

PosteriorDistribution make_distribution(std::vector<Belief> support,
                                        std::vector<double> weights,
                                        Belief prior) {
    const std::size_t n = prior.states();
    const std::size_t m = support.size();
    if (m == 0 || weights.size() != m) {
        throw ValidationError(Errc::domain_violation,
                              "support/weight length mismatch");
    }
    if (m > n) {
        throw ValidationError(Errc::support_too_large,
                              "support larger than the state count");
    }
    for (const Belief& x : support) {
        if (x.states() != n) {
            throw ValidationError(Errc::domain_violation,
                                  "support point dimension mismatch");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (same_point(support[i], support[j])) {
                throw ValidationError(Errc::domain_violation,
                                      "support points must be distinct");
            }
        }
    }
    double wsum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < -1e-12) {
            throw ValidationError(Errc::not_bayes_plausible,
                                  "weights must be nonnegative");
        }
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-12) {
        throw ValidationError(Errc::not_bayes_plausible,
                              "weights must sum to one");
    }
    for (std::size_t k = 0; k < n; ++k) {
        double mean = 0.0;
        for (std::size_t j = 0; j < m; ++j) mean += weights[j] * support[j][k];
        if (std::fabs(mean - prior[k]) > kBayesTol) {
            throw ValidationError(
                Errc::not_bayes_plausible,
                "support mean differs from the prior in coordinate " +
                    std::to_string(k));
        }
    }
    return PosteriorDistribution{std::move(support), std::move(weights),
                                 std::move(prior)};
}

PosteriorDistribution make_distribution(std::vector<Belief> support,
                                        Belief prior) {
    const std::size_t n = prior.states();
    const std::size_t m = support.size();
    if (m == 0) {
        throw ValidationError(Errc::domain_violation, "empty support");
    }
    if (m > n) {
        throw ValidationError(Errc::support_too_large,
                              "support larger than the state count");
    }
    std::vector<double> weights;
    if (m == 1) {
        weights = {1.0};
    } else {
        // Rows: the n coordinates of the mean constraint plus normalization.
        std::vector<std::vector<double>> a(n + 1, std::vector<double>(m));
        std::vector<double> b(n + 1);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < m; ++j) a[k][j] = support[j][k];
            b[k] = prior[k];
        }
        for (std::size_t j = 0; j < m; ++j) a[n][j] = 1.0;
        b[n] = 1.0;
        if (!numeric::solve_least_squares(a, b, weights)) {
            throw ValidationError(Errc::weight_solve_singular,
                                  "support is affinely dependent");
        }
        for (double& w : weights) {
            if (w < 0.0 && w > -1e-12) w = 0.0;
        }
    }
    return make_distribution(std::move(support), std::move(weights),
                             std::move(prior));
}

PosteriorDistribution make_binary_distribution(double x_low, double x_high,
                                               double prior_first_state) {
    return make_distribution({make_belief2(x_low), make_belief2(x_high)},
                             make_belief2(prior_first_state));
}

namespace {

void enumerate_grid(std::size_t n, std::size_t remaining, std::size_t coord,
                    std::vector<std::size_t>& counts, double resolution,
                    double band, std::vector<Belief>& out) {
    if (coord + 1 == n) {
        counts[coord] = remaining;
        std::vector<double> probs(n);
        for (std::size_t i = 0; i < n; ++i) {
            probs[i] = static_cast<double>(counts[i]) / resolution;
        }
        // Clip into the interior band; settle the mass difference on the
        // largest coordinate so the point still sums to one.
        double shift = 0.0;
        for (double& p : probs) {
            const double clipped = std::clamp(p, band, 1.0 - band);
            shift += clipped - p;
            p = clipped;
        }
        if (shift != 0.0) {
            auto top = std::max_element(probs.begin(), probs.end());
            *top -= shift;
        }
        out.push_back(Belief{std::move(probs)});
        return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
        counts[coord] = k;
        enumerate_grid(n, remaining - k, coord + 1, counts, resolution, band,
                       out);
    }
}

}  // namespace

std::vector<Belief> simplex_grid(std::size_t n, std::size_t resolution,
                                 double interior_band) {
    if (n < 2) {
        throw ValidationError(Errc::too_few_states,
                              "simplex_grid needs at least two states");
    }
    if (resolution < 1) {
        throw ValidationError(Errc::domain_violation,
                              "simplex_grid resolution must be positive");
    }
    std::vector<Belief> out;
    std::vector<std::size_t> counts(n, 0);
    enumerate_grid(n, resolution, 0, counts,
                   static_cast<double>(resolution), interior_band, out);
    return out;
}

}  // namespace infopact
