#include <cmath>
#include <random>

#include "doctest.h"
#include "infopact/belief.hpp"
#include "infopact/cost.hpp"
#include "infopact/errors.hpp"

using namespace infopact;

namespace {

Belief random_interior(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    std::vector<double> p(n);
    double s = 0.0;
    for (double& v : p) {
        v = unif(rng);
        s += v;
    }
    for (double& v : p) v /= s;
    return Belief{std::move(p)};
}

// Independent evaluation of the anchored two-state entropy cost.
double entropy2_oracle(double x, double mu) {
    auto xlx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
    return xlx(x) + xlx(1.0 - x) - xlx(mu) - xlx(1.0 - mu);
}

}  // namespace

TEST_SUITE("cost") {

TEST_CASE("entropy value matches the anchored formula") {
    const CostModel m = CostModel::entropy(1.0, make_belief2(0.5));
    CHECK(m.value1(0.75) ==
          doctest::Approx(0.130812035941137).epsilon(1e-12));
    CHECK(m.value1(0.75) ==
          doctest::Approx(entropy2_oracle(0.75, 0.5)).epsilon(1e-14));
    CHECK(m.value1(0.5) == doctest::Approx(0.0));
    // Off-prior anchoring makes the value negative near the uniform point.
    const CostModel tilted = CostModel::entropy(1.0, make_belief2(0.3));
    CHECK(tilted.value1(0.5) < 0.0);
    CHECK(tilted.value1(0.3) == doctest::Approx(0.0));
}

TEST_CASE("quadratic value uses the scalar form at two states") {
    const CostModel m = CostModel::quadratic(1.0, make_belief2(0.5));
    CHECK(m.value1(0.75) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(m.value1(0.5) == doctest::Approx(0.0));

    const CostModel m3 = CostModel::quadratic(
        1.0, make_belief({0.2, 0.3, 0.5}));
    CHECK(m3.value(make_belief({0.3, 0.2, 0.5})) ==
          doctest::Approx(0.02).epsilon(1e-14));
}

TEST_CASE("gradients match the closed forms") {
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.5));
    CHECK(ent.gradient1(0.75) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(ent.gradient1(0.5) == doctest::Approx(0.0));

    const CostModel quad = CostModel::quadratic(1.0, make_belief2(0.5));
    CHECK(quad.gradient1(0.75) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("entropy slope does not depend on the anchor") {
    const CostModel a = CostModel::entropy(1.0, make_belief2(0.5));
    const CostModel b = CostModel::entropy(1.0, make_belief2(0.3));
    for (double x : {0.1, 0.4, 0.6, 0.9}) {
        CHECK(a.gradient1(x) == doctest::Approx(b.gradient1(x)).epsilon(1e-13));
        CHECK(a.gradient1(x) ==
              doctest::Approx(std::log(x / (1.0 - x))).epsilon(1e-13));
    }
}

TEST_CASE("gradients agree with central differences") {
    std::mt19937_64 rng(11);
    const double h = 1e-6;
    for (std::size_t n : {2, 3, 4}) {
        std::vector<CostModel> models;
        const Belief prior = random_interior(rng, n);
        models.push_back(CostModel::entropy(1.3, prior));
        models.push_back(CostModel::quadratic(0.7, prior));
        for (const CostModel& m : models) {
            for (int trial = 0; trial < 8; ++trial) {
                const Belief x = random_interior(rng, n);
                const auto g = m.gradient_reduced(x);
                for (std::size_t k = 0; k + 1 < n; ++k) {
                    std::vector<double> up = x.probs, dn = x.probs;
                    up[k] += h;
                    up[n - 1] -= h;
                    dn[k] -= h;
                    dn[n - 1] += h;
                    const double fd =
                        (m.value(Belief{up}) - m.value(Belief{dn})) / (2 * h);
                    CHECK(g[k] ==
                          doctest::Approx(fd).epsilon(1e-5).scale(
                              std::max(1.0, std::fabs(fd))));
                }
            }
        }
    }
}

TEST_CASE("expected cost of a distribution") {
    const Belief mu = make_belief2(0.5);
    const auto f = make_binary_distribution(0.25, 0.75, 0.5);
    const CostModel ent = CostModel::entropy(1.0, mu);
    CHECK(ent.expected_cost(f) ==
          doctest::Approx(0.130812035941137).epsilon(1e-12));

    const auto degenerate = make_distribution({mu}, mu);
    CHECK(ent.expected_cost(degenerate) == doctest::Approx(0.0));

    const CostModel quad = CostModel::quadratic(2.0, mu);
    CHECK(quad.expected_cost(f) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("built-in costs pass convexity spot checks") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t n : {2, 3, 4}) {
        const Belief prior = random_interior(rng, n);
        for (const CostModel& m : {CostModel::entropy(1.0, prior),
                                   CostModel::quadratic(1.0, prior)}) {
            for (int trial = 0; trial < 20; ++trial) {
                const Belief a = random_interior(rng, n);
                const Belief b = random_interior(rng, n);
                const double lam = unif(rng);
                std::vector<double> mid(n);
                for (std::size_t i = 0; i < n; ++i) {
                    mid[i] = lam * a[i] + (1.0 - lam) * b[i];
                }
                CHECK(m.value(Belief{mid}) <=
                      lam * m.value(a) + (1.0 - lam) * m.value(b) + 1e-9);
            }
        }
    }
}

TEST_CASE("expected cost is nonnegative under Bayes plausibility") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % n;
        std::vector<Belief> support;
        std::vector<double> weights(m);
        double wsum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            support.push_back(random_interior(rng, n));
            weights[j] = 0.05 + unif(rng);
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
            f = make_distribution(support, weights, Belief{prior});
        } catch (const ValidationError&) {
            continue;  // coincident support points
        }
        const CostModel ent = CostModel::entropy(1.1, Belief{prior});
        const CostModel quad = CostModel::quadratic(0.9, Belief{prior});
        CHECK(ent.expected_cost(f) >= -1e-10);
        CHECK(quad.expected_cost(f) >= -1e-10);
    }
}

TEST_CASE("entropy rejects boundary points where required") {
    const CostModel m = CostModel::entropy(1.0, make_belief2(0.5));
    CHECK_THROWS_AS(m.value(Belief{{0.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(m.gradient_reduced(Belief{{0.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(m.gradient1(1e-12), ValidationError);
    // Quadratic is total.
    const CostModel quad = CostModel::quadratic(1.0, make_belief2(0.5));
    CHECK(quad.value(Belief{{0.0, 1.0}}) == doctest::Approx(0.25));
}

TEST_CASE("minimum of the cost over the simplex") {
    const CostModel ent = CostModel::entropy(1.0, make_belief2(0.3));
    CHECK(ent.min_value_on_simplex() ==
          doctest::Approx(-0.08228287850505178).epsilon(1e-9));
    const CostModel sym = CostModel::entropy(1.0, make_belief2(0.5));
    CHECK(sym.min_value_on_simplex() == doctest::Approx(0.0).scale(1.0));
    const CostModel quad = CostModel::quadratic(1.0, make_belief2(0.3));
    CHECK(quad.min_value_on_simplex() == doctest::Approx(0.0).scale(1.0));

    const CostModel ent3 =
        CostModel::entropy(1.0, make_belief({0.2, 0.3, 0.5}));
    CHECK(ent3.min_value_on_simplex() ==
          doctest::Approx(-0.06895927460353612).epsilon(1e-7));
}

TEST_CASE("custom models are spot-checked at construction") {
    const Belief mu = make_belief2(0.4);
    auto quartic_value = [mu](const Belief& x) {
        const double d = x[0] - mu[0];
        return d * d * d * d;
    };
    auto quartic_grad = [mu](const Belief& x) {
        const double d = x[0] - mu[0];
        return std::vector<double>{4.0 * d * d * d};
    };
    const CostModel ok = CostModel::custom(1.0, mu, quartic_value,
                                           quartic_grad, true);
    CHECK(ok.value1(0.9) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(ok.gradient1(0.9) == doctest::Approx(0.5).epsilon(1e-9));

    // Wrong gradient is caught by the finite-difference check.
    auto bad_grad = [mu](const Belief& x) {
        return std::vector<double>{x[0] - mu[0]};
    };
    CHECK_THROWS_AS(CostModel::custom(1.0, mu, quartic_value, bad_grad),
                    ValidationError);
    // Concave "cost" is caught by the chord check.
    auto concave_value = [mu](const Belief& x) {
        const double d = x[0] - mu[0];
        return -d * d;
    };
    auto concave_grad = [mu](const Belief& x) {
        return std::vector<double>{-2.0 * (x[0] - mu[0])};
    };
    CHECK_THROWS_AS(CostModel::custom(1.0, mu, concave_value, concave_grad),
                    ValidationError);
    CHECK_THROWS_AS(CostModel::entropy(0.0, mu), ValidationError);
}

}  // TEST_SUITE
