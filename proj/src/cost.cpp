#include "infopact/cost.hpp"

#include <cmath>
#include <random>

#include "infopact/errors.hpp"
#include "infopact/numeric.hpp"

namespace infopact {

namespace {

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

double negentropy(const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p) s += xlogx(v);
    return s;
}

void require_states_match(const CostModel& m, const Belief& x) {
    if (x.states() != m.states()) {
        throw ValidationError(Errc::domain_violation,
                              "belief dimension does not match the cost model");
    }
}

}  // namespace

CostModel::CostModel(CostKind kind, double kappa, Belief prior)
    : kind_(kind), kappa_(kappa), prior_(std::move(prior)) {
    if (!(kappa_ > 0.0) || !std::isfinite(kappa_)) {
        throw ValidationError(Errc::invalid_model, "kappa must be positive");
    }
    if (!prior_.interior()) {
        throw ValidationError(Errc::boundary_point,
                              "cost models need an interior prior");
    }
}

CostModel CostModel::entropy(double kappa, Belief prior) {
    CostModel m(CostKind::entropy, kappa, std::move(prior));
    m.boundary_safe_value_ = true;
    return m;
}

CostModel CostModel::quadratic(double kappa, Belief prior) {
    CostModel m(CostKind::quadratic, kappa, std::move(prior));
    m.boundary_safe_value_ = true;
    return m;
}

CostModel CostModel::custom(double kappa, Belief prior, ValueFn value,
                            GradientFn gradient_reduced,
                            bool boundary_safe_value) {
    CostModel m(CostKind::custom, kappa, std::move(prior));
    m.custom_value_ = std::move(value);
    m.custom_gradient_ = std::move(gradient_reduced);
    m.boundary_safe_value_ = boundary_safe_value;

    const std::size_t n = m.states();
    if (std::fabs(m.custom_value_(m.prior_)) > 1e-12) {
        throw ValidationError(Errc::invalid_model,
                              "custom cost must vanish at the prior");
    }
    // Spot checks: convexity on random chords, gradient against central
    // differences at random interior points.
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    auto random_interior = [&]() {
        std::vector<double> p(n);
        double s = 0.0;
        for (double& v : p) {
            v = unif(rng);
            s += v;
        }
        for (double& v : p) v /= s;
        return Belief{std::move(p)};
    };
    for (int trial = 0; trial < 16; ++trial) {
        const Belief a = random_interior();
        const Belief b = random_interior();
        const double lam = unif(rng);
        std::vector<double> mid(n);
        for (std::size_t i = 0; i < n; ++i) {
            mid[i] = lam * a[i] + (1.0 - lam) * b[i];
        }
        const double chord =
            lam * m.custom_value_(a) + (1.0 - lam) * m.custom_value_(b);
        if (m.custom_value_(Belief{mid}) > chord + 1e-9) {
            throw ValidationError(Errc::invalid_model,
                                  "custom cost failed a convexity spot check");
        }
    }
    const double h = 1e-6;
    for (int trial = 0; trial < 8; ++trial) {
        const Belief x = random_interior();
        const std::vector<double> g = m.custom_gradient_(x);
        if (g.size() != n - 1) {
            throw ValidationError(Errc::invalid_model,
                                  "custom gradient has the wrong length");
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::vector<double> hi = x.probs, lo = x.probs;
            hi[k] += h;
            hi[n - 1] -= h;
            lo[k] -= h;
            lo[n - 1] += h;
            const double fd =
                (m.custom_value_(Belief{hi}) - m.custom_value_(Belief{lo})) /
                (2.0 * h);
            const double scale = std::max(1.0, std::fabs(fd));
            if (std::fabs(fd - g[k]) > 1e-5 * scale) {
                throw ValidationError(
                    Errc::invalid_model,
                    "custom gradient disagrees with finite differences");
            }
        }
    }
    return m;
}

double CostModel::value(const Belief& x) const {
    require_states_match(*this, x);
    switch (kind_) {
        case CostKind::entropy: {
            for (double p : x.probs) {
                if (p <= 0.0) {
                    throw ValidationError(Errc::boundary_point,
                                          "entropy cost needs positive entries");
                }
            }
            return negentropy(x.probs) - negentropy(prior_.probs);
        }
        case CostKind::quadratic: {
            if (states() == 2) {
                const double d = x[0] - prior_[0];
                return d * d;
            }
            double s = 0.0;
            for (std::size_t i = 0; i < states(); ++i) {
                const double d = x[i] - prior_[i];
                s += d * d;
            }
            return s;
        }
        case CostKind::custom:
            return custom_value_(x);
    }
    return 0.0;
}

std::vector<double> CostModel::gradient_reduced(const Belief& x) const {
    require_states_match(*this, x);
    if (!x.interior()) {
        throw ValidationError(Errc::boundary_point,
                              "cost gradient needs an interior point");
    }
    const std::size_t n = states();
    switch (kind_) {
        case CostKind::entropy: {
            std::vector<double> g(n - 1);
            const double log_last = std::log(x[n - 1]);
            for (std::size_t k = 0; k + 1 < n; ++k) {
                g[k] = std::log(x[k]) - log_last;
            }
            return g;
        }
        case CostKind::quadratic: {
            if (n == 2) {
                return {2.0 * (x[0] - prior_[0])};
            }
            std::vector<double> g(n - 1);
            const double last = 2.0 * (x[n - 1] - prior_[n - 1]);
            for (std::size_t k = 0; k + 1 < n; ++k) {
                g[k] = 2.0 * (x[k] - prior_[k]) - last;
            }
            return g;
        }
        case CostKind::custom:
            return custom_gradient_(x);
    }
    return {};
}

std::vector<double> CostModel::scaled_gradient_reduced(const Belief& x) const {
    std::vector<double> g = gradient_reduced(x);
    for (double& v : g) v *= kappa_;
    return g;
}

double CostModel::value1(double x) const {
    return value(Belief{{x, 1.0 - x}});
}

double CostModel::gradient1(double x) const {
    return gradient_reduced(Belief{{x, 1.0 - x}})[0];
}

double CostModel::expected_cost(const PosteriorDistribution& f) const {
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        s += f.weights[j] * value(f.support[j]);
    }
    return kappa_ * s;
}

std::vector<double> CostModel::gradient_full(const Belief& x) const {
    const std::size_t n = states();
    switch (kind_) {
        case CostKind::entropy: {
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = std::log(x[i]) + 1.0;
            return g;
        }
        case CostKind::quadratic: {
            if (n == 2) {
                return {2.0 * (x[0] - prior_[0]), 0.0};
            }
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * (x[i] - prior_[i]);
            return g;
        }
        case CostKind::custom: {
            std::vector<double> g = custom_gradient_(x);
            g.push_back(0.0);
            return g;
        }
    }
    return {};
}

double CostModel::min_value_on_simplex() const {
    const std::size_t n = states();
    if (n == 2) {
        const double band = boundary_safe_value_ ? 1e-12 : kInteriorEps;
        auto f = [this](double t) { return value1(t); };
        return numeric::golden_section_min(f, band, 1.0 - band).value;
    }
    auto f = [this](const std::vector<double>& p) {
        return value(Belief{p});
    };
    auto grad = [this](const std::vector<double>& p) {
        return gradient_full(Belief{p});
    };
    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    starts.push_back(prior_.probs);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> s(n, 0.2 / static_cast<double>(n - 1));
        s[i] = 0.8;
        starts.push_back(std::move(s));
    }
    auto res = numeric::minimize_convex_on_simplex(n, f, grad, kInteriorEps,
                                                   starts);
    // Grid polish guards against a stalled descent.
    const std::size_t grid_res = n == 3 ? 48 : 20;
    for (const Belief& p : simplex_grid(n, grid_res)) {
        const double v = value(p);
        if (v < res.value) {
            auto polished = numeric::minimize_convex_on_simplex(
                n, f, grad, kInteriorEps, {p.probs});
            if (polished.value < res.value) res = polished;
        }
    }
    return res.value;
}

}  // namespace infopact
