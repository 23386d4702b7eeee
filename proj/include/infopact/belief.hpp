#pragma once

#include <cstddef>
#include <vector>

namespace infopact {

// Interior band: a belief is "interior" when every entry is at least this.
inline constexpr double kInteriorEps = 1e-9;

// Point of the probability simplex over n states.
struct Belief {
    std::vector<double> probs;

    std::size_t states() const { return probs.size(); }
    double operator[](std::size_t i) const { return probs[i]; }
    bool interior(double eps = kInteriorEps) const;
};

// Validating constructor. No silent renormalization: inputs with
// |sum - 1| > 1e-9, negative entries, non-finite entries, or fewer than two
// states are rejected.
Belief make_belief(std::vector<double> probs);

// Two-state convenience: p is the probability of the first state.
Belief make_belief2(double p_first_state);

// Finite-support Bayes-plausible distribution over posteriors.
struct PosteriorDistribution {
    std::vector<Belief> support;
    std::vector<double> weights;
    Belief prior;

    std::size_t size() const { return support.size(); }
    bool degenerate() const { return support.size() == 1; }
};

// Validates support size (m <= n), pairwise-distinct support, weight
// normalization, and Bayes plausibility (componentwise 1e-10).
PosteriorDistribution make_distribution(std::vector<Belief> support,
                                        std::vector<double> weights,
                                        Belief prior);

// Weights solved from Bayes plausibility; requires an affinely independent
// support (two-state case reduces to p = (mu - x_L)/(x_H - x_L)).
PosteriorDistribution make_distribution(std::vector<Belief> support,
                                        Belief prior);

// Two-state convenience: support {x_L, x_H} given as first-state
// probabilities, prior likewise.
PosteriorDistribution make_binary_distribution(double x_low, double x_high,
                                               double prior_first_state);

// All rational grid points with denominator `resolution`, clipped into the
// interior band, in lexicographic order. Count is C(resolution+n-1, n-1).
std::vector<Belief> simplex_grid(std::size_t n, std::size_t resolution,
                                 double interior_band = kInteriorEps);

}  // namespace infopact
