#include <cmath>
#include <random>

#include "doctest.h"
#include "infopact/belief.hpp"
#include "infopact/errors.hpp"

using namespace infopact;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_SUITE("belief") {

TEST_CASE("make_belief accepts valid points") {
    const Belief b = make_belief({0.5, 0.5});
    CHECK(b.states() == 2);
    CHECK(b.interior());

    const double mu = 1.0 / (1.0 + std::exp(1.0));
    const Belief prior = make_belief({mu, 1.0 - mu});
    CHECK(prior[0] == doctest::Approx(0.2689414213699951).epsilon(1e-14));
}

TEST_CASE("make_belief rejects bad inputs") {
    CHECK_THROWS_AS(make_belief({0.6, 0.5}), ValidationError);
    CHECK_THROWS_AS(make_belief({-0.1, 1.1}), ValidationError);
    CHECK_THROWS_AS(make_belief({1.0}), ValidationError);
    CHECK_THROWS_AS(make_belief({0.5, std::nan("")}), ValidationError);

    try {
        make_belief({0.6, 0.5});
        FAIL("expected a throw");
    } catch (const ValidationError& e) {
        CHECK(e.code() == Errc::sum_not_one);
    }
}

TEST_CASE("binary weights solve from the prior") {
    const PosteriorDistribution f = make_binary_distribution(0.25, 0.75, 0.5);
    CHECK(f.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.weights[1] == doctest::Approx(0.5).epsilon(1e-12));

    const PosteriorDistribution tilted =
        make_binary_distribution(0.25, 0.75, 0.4);
    CHECK(tilted.weights[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("degenerate distribution at the prior") {
    const Belief mu = make_belief2(0.37);
    const PosteriorDistribution f = make_distribution({mu}, mu);
    CHECK(f.degenerate());
    CHECK(f.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("prior outside the support hull is rejected") {
    CHECK_THROWS_AS(make_binary_distribution(0.1, 0.2, 0.5), ValidationError);
    try {
        make_binary_distribution(0.1, 0.2, 0.5);
        FAIL("expected a throw");
    } catch (const ValidationError& e) {
        CHECK(e.code() == Errc::not_bayes_plausible);
    }
}

TEST_CASE("oversized and duplicated supports are rejected") {
    const Belief mu = make_belief2(0.5);
    CHECK_THROWS_AS(make_distribution({make_belief2(0.2), make_belief2(0.5),
                                       make_belief2(0.8)},
                                      mu),
                    ValidationError);
    CHECK_THROWS_AS(
        make_distribution({make_belief2(0.5), make_belief2(0.5)}, mu),
        ValidationError);
}

TEST_CASE("simplex_grid two states") {
    const auto grid = simplex_grid(2, 4);
    REQUIRE(grid.size() == 5);
    CHECK(grid[1][0] == doctest::Approx(0.25));
    CHECK(grid[2][0] == doctest::Approx(0.5));
    // Endpoints clipped into the interior band.
    CHECK(grid[0][0] == doctest::Approx(kInteriorEps));
    CHECK(grid[4][1] == doctest::Approx(kInteriorEps));
    for (const Belief& b : grid) CHECK(b.interior());

    const auto ends = simplex_grid(2, 1);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0][0] == doctest::Approx(kInteriorEps));
    CHECK(ends[1][0] == doctest::Approx(1.0 - kInteriorEps));
}

TEST_CASE("simplex_grid counts are stars-and-bars") {
    CHECK(simplex_grid(3, 2).size() == 6);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t r = 1; r <= 6; ++r) {
            CHECK(simplex_grid(n, r).size() == binomial(r + n - 1, n - 1));
        }
    }
}

TEST_CASE("grid points satisfy the belief invariants") {
    for (const Belief& b : simplex_grid(4, 7)) {
        double sum = 0.0;
        for (double p : b.probs) {
            CHECK(p >= kInteriorEps);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("weight solve round trip on random supports") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % n;
        std::vector<Belief> support;
        std::vector<double> weights(m);
        double wsum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<double> p(n);
            double s = 0.0;
            for (double& v : p) {
                v = unif(rng);
                s += v;
            }
            for (double& v : p) v /= s;
            support.push_back(Belief{std::move(p)});
            weights[j] = 0.1 + unif(rng);
            wsum += weights[j];
        }
        for (double& w : weights) w /= wsum;
        std::vector<double> prior(n, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                prior[k] += weights[j] * support[j][k];
            }
        }
        PosteriorDistribution f;
        try {
            f = make_distribution(support, Belief{prior});
        } catch (const ValidationError& e) {
            // Nearly coincident random points can make the solve singular.
            CHECK(e.code() == Errc::weight_solve_singular);
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
            CHECK(f.weights[j] == doctest::Approx(weights[j]).epsilon(1e-8));
        }
    }
}

}  // TEST_SUITE
