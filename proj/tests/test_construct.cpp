#include <cmath>
#include <random>

#include "doctest.h"
#include "infopact/belief.hpp"
#include "infopact/construct.hpp"
#include "infopact/contract.hpp"
#include "infopact/cost.hpp"
#include "infopact/errors.hpp"
#include "infopact/verify.hpp"

using namespace infopact;

namespace {

const double kLn3 = std::log(3.0);

Belief random_interior(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unif(0.08, 0.92);
    std::vector<double> p(n);
    double s = 0.0;
    for (double& v : p) {
        v = unif(rng);
        s += v;
    }
    for (double& v : p) v /= s;
    return Belief{std::move(p)};
}

// Random distribution built support-first; the prior is the support mean, so
// Bayes plausibility holds by construction.
PosteriorDistribution random_distribution(std::mt19937_64& rng, std::size_t n,
                                          std::size_t m) {
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    while (true) {
        std::vector<Belief> support;
        std::vector<double> weights(m);
        double wsum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            support.push_back(random_interior(rng, n));
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
        try {
            return make_distribution(support, weights, Belief{prior});
        } catch (const ValidationError&) {
            continue;  // coincident support points, draw again
        }
    }
}

double max_abs_diff(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            worst = std::max(worst, std::fabs(a[i][k] - b[i][k]));
        }
    }
    return worst;
}

// Slope consistency across messages: t_i^k - t_i^n - kappa c_k(x_i) must not
// depend on i.
double equal_hyperplane_residual(const Contract& c, const CostModel& cost) {
    const std::size_t n = c.states();
    double worst = 0.0;
    std::vector<double> reference;
    for (std::size_t j = 0; j < c.message_count(); ++j) {
        const auto grad = cost.scaled_gradient_reduced(c.messages[j]);
        std::vector<double> slopes(n - 1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            slopes[k] = c.transfers[j][k] - c.transfers[j][n - 1] - grad[k];
        }
        if (j == 0) {
            reference = slopes;
        } else {
            for (std::size_t k = 0; k + 1 < n; ++k) {
                worst = std::max(worst, std::fabs(slopes[k] - reference[k]));
            }
        }
    }
    return worst;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("flat-level contract transfers") {
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.5));
    const auto f = make_binary_distribution(0.25, 0.75, 0.5);
    const Contract c = construct_tau_contract(f, ent, 0.0);
    // Level tau* = 0 at the symmetric prior.
    CHECK(c.transfers[1][0] == doctest::Approx(std::log(1.5)).epsilon(1e-10));
    CHECK(c.transfers[1][1] == doctest::Approx(std::log(0.5)).epsilon(1e-10));
    CHECK(c.transfers[0][0] == doctest::Approx(std::log(0.5)).epsilon(1e-10));
    CHECK(c.transfers[0][1] == doctest::Approx(std::log(1.5)).epsilon(1e-10));
    for (std::size_t j = 0; j < 2; ++j) {
        const Hyperplane h = hyperplane_from_message(c, j, ent);
        CHECK(h.slopes[0] == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(h.intercept == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("flat-level contract on a degenerate distribution") {
    const Belief mu = make_belief2(0.5);
    const CostModel ent = CostModel::entropy(1.0, mu);
    const Contract c =
        construct_tau_contract(make_distribution({mu}, mu), ent, 0.0);
    CHECK(c.transfers[0][0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(c.transfers[0][1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("flat level rises when the cost dips below zero") {
    // Prior 0.3: the cost minimum sits at the uniform point, below zero.
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.3));
    const auto f = make_binary_distribution(0.2, 0.4, 0.3);
    const Contract c = construct_tau_contract(f, ent, 0.0);
    const Hyperplane h = hyperplane_from_message(c, 0, ent);
    CHECK(h.slopes[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(h.intercept ==
          doctest::Approx(0.08228287850505178).epsilon(1e-9));
}

TEST_CASE("benchmark expansion reproduces the full matrix") {
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.5));
    const auto f = make_binary_distribution(0.25, 0.75, 0.5);
    const Contract c = expand_benchmark(
        {std::log(1.5), std::log(0.5)}, f, ent);
    CHECK(c.transfers[0][0] == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(c.transfers[0][1] == doctest::Approx(std::log(1.5)).epsilon(1e-12));

    const Belief mu = make_belief2(0.4);
    const Contract z = expand_benchmark(
        {0.0, 0.0}, make_distribution({mu}, mu),
        CostModel::entropy(1.0, mu));
    CHECK(z.transfers[0][0] == doctest::Approx(0.0));
}

TEST_CASE("benchmark round trip is the identity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % n;
        const auto f = random_distribution(rng, n, m);
        const CostModel cost =
            trial % 2 == 0 ? CostModel::entropy(1.4, f.prior)
                           : CostModel::quadratic(0.8, f.prior);
        const Contract built = construct_efficient(f, cost, 0.3);
        const Contract again =
            expand_benchmark(built.transfers.back(), f, cost);
        CHECK(max_abs_diff(built.transfers, again.transfers) < 1e-12);
    }
}

TEST_CASE("efficient construction on the symmetric instance") {
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.5));
    const auto f = make_binary_distribution(0.25, 0.75, 0.5);
    const Contract c = construct_efficient(f, ent, 0.0);
    CHECK(c.transfers[0][0] == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(c.transfers[0][1] == doctest::Approx(std::log(1.5)).epsilon(1e-12));
    CHECK(c.transfers[1][0] == doctest::Approx(std::log(1.5)).epsilon(1e-12));
    CHECK(c.transfers[1][1] == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(expected_transfer_utils(c, f) ==
          doctest::Approx(0.130812035941137).epsilon(1e-10));
}

TEST_CASE("efficient construction on a degenerate distribution") {
    const Belief mu = make_belief2(0.5);
    const CostModel ent = CostModel::entropy(1.0, mu);
    const Contract c =
        construct_efficient(make_distribution({mu}, mu), ent, 0.7);
    CHECK(c.transfers[0][0] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(c.transfers[0][1] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("efficient construction meets the surplus and cost targets") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> v0_draw(0.0, 1.5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % n;
        const auto f = random_distribution(rng, n, m);
        const CostModel cost =
            trial % 2 == 0 ? CostModel::entropy(1.2, f.prior)
                           : CostModel::quadratic(0.9, f.prior);
        const double v0 = v0_draw(rng);
        const Contract c = construct_efficient(f, cost, v0);

        const Hyperplane h = hyperplane_from_message(c, 0, cost);
        CHECK(h.value(f.prior) == doctest::Approx(v0).epsilon(1e-10));
        CHECK(expected_transfer_utils(c, f) ==
              doctest::Approx(cost.expected_cost(f) + v0).epsilon(1e-9));
        CHECK(equal_hyperplane_residual(c, cost) < 1e-9);
    }
}

TEST_CASE("zero-floor contract closed forms") {
    const auto f = make_binary_distribution(0.25, 0.75, 0.5);
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.5));
    const Contract ce = construct_ll_zero(f, ent);
    CHECK(ce.transfers[0][0] == doctest::Approx(0.0));
    CHECK(ce.transfers[0][1] == doctest::Approx(kLn3).epsilon(1e-12));
    CHECK(ce.transfers[1][0] == doctest::Approx(kLn3).epsilon(1e-12));
    CHECK(ce.transfers[1][1] == doctest::Approx(0.0));

    const CostModel quad = CostModel::quadratic(1.0, make_belief2(0.5));
    const Contract cq = construct_ll_zero(f, quad);
    CHECK(cq.transfers[0][1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cq.transfers[1][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cq.transfers[0][0] == doctest::Approx(0.0));
    CHECK(cq.transfers[1][1] == doctest::Approx(0.0));

    const Belief mu = make_belief2(0.5);
    const Contract cd = construct_ll_zero(make_distribution({mu}, mu), ent);
    CHECK(cd.transfers[0][0] == doctest::Approx(0.0));
    CHECK(cd.transfers[0][1] == doctest::Approx(0.0));
}

TEST_CASE("zero-floor closed forms hold off the symmetric point") {
    // Entropy: high message earns kappa ln(x_H/x_L) in the first state, the
    // low message kappa ln((1-x_L)/(1-x_H)) in the second.
    const double x_l = 0.3, x_h = 0.6, mu = 0.45, kappa = 1.7;
    const auto f = make_binary_distribution(x_l, x_h, mu);
    const CostModel ent = CostModel::entropy(kappa, make_belief2(mu));
    const Contract c = construct_ll_zero(f, ent);
    CHECK(c.transfers[1][0] ==
          doctest::Approx(kappa * std::log(x_h / x_l)).epsilon(1e-12));
    CHECK(c.transfers[0][1] ==
          doctest::Approx(kappa * std::log((1 - x_l) / (1 - x_h)))
              .epsilon(1e-12));

    const CostModel quad = CostModel::quadratic(kappa, make_belief2(mu));
    const Contract q = construct_ll_zero(f, quad);
    CHECK(q.transfers[0][1] ==
          doctest::Approx(kappa * (x_h * x_h - x_l * x_l)).epsilon(1e-12));
    CHECK(q.transfers[1][0] ==
          doctest::Approx(kappa * (x_l * (x_l - 2) - x_h * (x_h - 2)))
              .epsilon(1e-12));
}

TEST_CASE("zero-floor contract has one zero per state") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % n;
        const auto f = random_distribution(rng, n, m);
        const CostModel cost =
            trial % 2 == 0 ? CostModel::entropy(1.0, f.prior)
                           : CostModel::quadratic(1.3, f.prior);
        const Contract c = construct_ll_zero(f, cost);
        for (std::size_t k = 0; k < n; ++k) {
            double col_min = 1e300;
            for (std::size_t j = 0; j < m; ++j) {
                CHECK(c.transfers[j][k] >= 0.0);
                col_min = std::min(col_min, c.transfers[j][k]);
            }
            CHECK(col_min == doctest::Approx(0.0));
        }
        CHECK(equal_hyperplane_residual(c, cost) < 1e-9);
    }
}

TEST_CASE("two-state learning equations hold for constructed contracts") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unif(0.05, 0.45);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = 0.3 + 0.4 * unif(rng);
        const double x_l = mu - unif(rng) * (mu - 0.03);
        const double x_h = mu + unif(rng) * (0.97 - mu);
        const double kappa = 0.5 + unif(rng);
        const auto f = make_binary_distribution(x_l, x_h, mu);
        const CostModel cost = trial % 2 == 0
                                   ? CostModel::entropy(kappa, f.prior)
                                   : CostModel::quadratic(kappa, f.prior);
        const Contract c = construct_ll_zero(f, cost);
        const double gap_second = c.transfers[0][1] - c.transfers[1][1];
        const double gap_first = c.transfers[1][0] - c.transfers[0][0];
        const double cp_l = cost.gradient1(x_l), cp_h = cost.gradient1(x_h);
        CHECK(kappa * (cp_h - cp_l) ==
              doctest::Approx(gap_second + gap_first).epsilon(1e-9));
        CHECK(gap_second + kappa * (cost.value1(x_h) - cost.value1(x_l)) ==
              doctest::Approx(kappa * (cp_h * x_h - cp_l * x_l))
                  .epsilon(1e-9));
    }
}

TEST_CASE("efficient under limited liability at the exact threshold") {
    const double mu = 1.0 / (1.0 + std::exp(1.0));
    const double v0 = std::log(9.0 / (1.0 + std::exp(1.0)));
    const auto f = make_binary_distribution(1.0 / 9.0, 5.0 / 9.0, mu);
    const CostModel ent = CostModel::entropy(1.0, f.prior);

    const EfficientLLResult res = construct_efficient_ll(f, ent, v0);
    REQUIRE(res.feasible);
    CHECK(std::fabs(res.contract.transfers[0][0]) <= 1e-9);
    CHECK(res.contract.transfers[1][1] ==
          doctest::Approx(0.3862943611198905).epsilon(1e-9));
    CHECK(res.min_transfer >= -1e-9);
    CHECK(res.eta == doctest::Approx(0.8839628898179965).epsilon(1e-12));

    const EfficientLLResult below = construct_efficient_ll(f, ent, 0.5);
    CHECK(!below.feasible);
    CHECK(below.margin ==
          doctest::Approx(0.5 - 0.8839628898179965).epsilon(1e-9));
    CHECK(below.min_transfer < -1e-9);
}

TEST_CASE("degenerate distributions are efficient at any outside option") {
    const Belief mu = make_belief2(0.35);
    const CostModel ent = CostModel::entropy(1.0, mu);
    const auto f = make_distribution({mu}, mu);
    for (double v0 : {0.0, 0.01, 1.0}) {
        const EfficientLLResult res = construct_efficient_ll(f, ent, v0);
        CHECK(res.feasible);
        CHECK(res.contract.transfers[0][0] == doctest::Approx(v0));
        CHECK(res.contract.transfers[0][1] == doctest::Approx(v0));
    }
}

TEST_CASE("binding transfers equal the threshold gaps") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double mu = 0.25 + 0.5 * unif(rng);
        const double x_l = 0.05 + (mu - 0.1) * unif(rng);
        const double x_h = mu + 0.05 + (0.9 - mu) * unif(rng);
        const double kappa = 0.5 + unif(rng);
        const double v0 = 2.0 * unif(rng);
        const auto f = make_binary_distribution(x_l, x_h, mu);
        const CostModel cost = trial % 2 == 0
                                   ? CostModel::entropy(kappa, f.prior)
                                   : CostModel::quadratic(kappa, f.prior);
        const Contract c = construct_efficient(f, cost, v0);
        const EtaValues e = eta(x_l, x_h, cost);
        CHECK(c.transfers[0][0] ==
              doctest::Approx(v0 - kappa * e.eta2).epsilon(1e-9));
        CHECK(c.transfers[1][1] ==
              doctest::Approx(v0 - kappa * e.eta1).epsilon(1e-9));
    }
}

TEST_CASE("boundary support is rejected") {
    const Belief mu = make_belief2(0.5);
    const CostModel quad = CostModel::quadratic(1.0, mu);
    const auto f = make_distribution(
        {Belief{{0.0, 1.0}}, Belief{{1.0, 0.0}}}, {0.5, 0.5}, mu);
    CHECK_THROWS_AS(construct_efficient(f, quad, 0.0), ValidationError);
    CHECK_THROWS_AS(construct_ll_zero(f, quad), ValidationError);
    CHECK_THROWS_AS(construct_tau_contract(f, quad, 0.0), ValidationError);
}

}  // TEST_SUITE
