#include "infopact/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "infopact/errors.hpp"
#include "infopact/numeric.hpp"

namespace infopact {

namespace {

double value_band(const CostModel& cost) {
    return cost.boundary_safe_value() ? 1e-12 : kInteriorEps;
}

struct ConvexMin {
    double value = 0.0;
    Belief argmin;
    bool descent_converged = false;
};

// Minimize a(.)x + b + kappa*c(x) over the simplex. The affine coefficients
// are per full coordinate. Convex, so a descent plus a grid sweep certifies
// the global minimum.
ConvexMin minimize_affine_plus_cost(const std::vector<double>& affine,
                                    double constant, const CostModel& cost) {
    const std::size_t n = cost.states();
    auto eval = [&](const Belief& x) {
        double s = constant;
        for (std::size_t i = 0; i < n; ++i) s += affine[i] * x[i];
        return s + cost.scaled_value(x);
    };

    ConvexMin out;
    if (n == 2) {
        const double band = value_band(cost);
        auto f1 = [&](double t) { return eval(Belief{{t, 1.0 - t}}); };
        auto res = numeric::golden_section_min(f1, band, 1.0 - band);
        out.value = res.value;
        out.argmin = Belief{{res.x, 1.0 - res.x}};
        out.descent_converged = true;
        return out;
    }

    auto f = [&](const std::vector<double>& p) { return eval(Belief{p}); };
    auto grad = [&](const std::vector<double>& p) {
        std::vector<double> g = cost.gradient_full(Belief{p});
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = cost.kappa() * g[i] + affine[i];
        }
        return g;
    };
    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    starts.push_back(cost.prior().probs);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> s(n, 0.15 / static_cast<double>(n - 1));
        s[i] = 0.85;
        starts.push_back(std::move(s));
    }
    auto res = numeric::minimize_convex_on_simplex(n, f, grad, kInteriorEps,
                                                   starts);
    out.value = res.value;
    out.argmin = Belief{res.x};
    out.descent_converged = res.converged;
    return out;
}

std::size_t grid_resolution_for(std::size_t n) {
    switch (n) {
        case 2: return 4000;
        case 3: return 60;
        case 4: return 24;
        default: return 10;
    }
}

// Dense-grid floor of the same objective; used to cross-check the descent.
ConvexMin grid_min_affine_plus_cost(const std::vector<double>& affine,
                                    double constant, const CostModel& cost,
                                    const std::vector<Belief>& grid) {
    ConvexMin out;
    out.value = std::numeric_limits<double>::infinity();
    for (const Belief& x : grid) {
        double s = constant;
        for (std::size_t i = 0; i < x.states(); ++i) s += affine[i] * x[i];
        s += cost.scaled_value(x);
        if (s < out.value) {
            out.value = s;
            out.argmin = x;
        }
    }
    return out;
}

ConvexMin certified_min(const std::vector<double>& affine, double constant,
                        const CostModel& cost, const std::vector<Belief>& grid,
                        std::string& certificate) {
    ConvexMin descent;
    bool descent_ok = true;
    try {
        descent = minimize_affine_plus_cost(affine, constant, cost);
    } catch (const Error&) {
        descent_ok = false;
    }
    ConvexMin coarse = grid_min_affine_plus_cost(affine, constant, cost, grid);
    if (!descent_ok) {
        certificate = "grid-only";
        return coarse;
    }
    if (cost.states() > 2 && coarse.value < descent.value - 1e-10) {
        // The descent stalled; restart it from the better grid point.
        try {
            auto f = [&](const std::vector<double>& p) {
                double s = constant;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    s += affine[i] * p[i];
                }
                return s + cost.scaled_value(Belief{p});
            };
            auto grad = [&](const std::vector<double>& p) {
                std::vector<double> g = cost.gradient_full(Belief{p});
                for (std::size_t i = 0; i < p.size(); ++i) {
                    g[i] = cost.kappa() * g[i] + affine[i];
                }
                return g;
            };
            auto res = numeric::minimize_convex_on_simplex(
                cost.states(), f, grad, kInteriorEps, {coarse.argmin.probs});
            if (res.value < descent.value) {
                descent.value = res.value;
                descent.argmin = Belief{res.x};
                descent.descent_converged = res.converged;
            }
        } catch (const Error&) {
        }
    }
    if (coarse.value < descent.value) {
        descent.value = coarse.value;
        descent.argmin = coarse.argmin;
    }
    certificate = descent.descent_converged ? "convex+grid" : "grid-only";
    return descent;
}

bool planes_match(const Hyperplane& a, const Hyperplane& b, double tol,
                  double* gap_out) {
    double gap = std::fabs(a.intercept - b.intercept);
    double scale = std::max({1.0, std::fabs(a.intercept), std::fabs(b.intercept)});
    for (std::size_t k = 0; k < a.slopes.size(); ++k) {
        gap = std::max(gap, std::fabs(a.slopes[k] - b.slopes[k]));
        scale = std::max({scale, std::fabs(a.slopes[k]), std::fabs(b.slopes[k])});
    }
    if (gap_out) *gap_out = gap;
    return gap <= tol * scale;
}

double distance_to_support(const Belief& x, const PosteriorDistribution& f) {
    double best = std::numeric_limits<double>::infinity();
    for (const Belief& s : f.support) {
        double d = 0.0;
        for (std::size_t i = 0; i < x.states(); ++i) {
            d = std::max(d, std::fabs(x[i] - s[i]));
        }
        best = std::min(best, d);
    }
    return best;
}

}  // namespace

DominanceCheck check_hyperplane_dominance(const Contract& contract,
                                          const PosteriorDistribution& f,
                                          const CostModel& cost, double tol) {
    const std::size_t n = cost.states();
    const std::size_t m = contract.message_count();
    if (f.size() != m) {
        throw ValidationError(Errc::domain_violation,
                              "distribution and contract shapes differ");
    }
    for (const Belief& x : f.support) {
        if (!x.interior()) {
            throw ValidationError(Errc::boundary_support,
                                  "support must be interior");
        }
    }

    DominanceCheck out;
    out.hyperplane = hyperplane_from_message(contract, 0, cost);
    out.hyperplanes_coincide = true;
    out.hyperplane_gap = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
        const Hyperplane hj = hyperplane_from_message(contract, j, cost);
        double gap = 0.0;
        if (!planes_match(out.hyperplane, hj, tol, &gap)) {
            out.hyperplanes_coincide = false;
            out.witnesses.push_back(
                Witness{"hyperplane_mismatch", j, contract.messages[j], gap});
        }
        out.hyperplane_gap = std::max(out.hyperplane_gap, gap);
    }

    // Contact at every support point: f_H(x_j) = N(x_j | x_j).
    bool contacts_ok = true;
    for (std::size_t j = 0; j < m; ++j) {
        const double fh = out.hyperplane.value(f.support[j]);
        const double nj = net_utility(contract, f.support[j], j, cost);
        const double scale = std::max({1.0, std::fabs(fh), std::fabs(nj)});
        if (std::fabs(fh - nj) > tol * scale) {
            contacts_ok = false;
            out.witnesses.push_back(
                Witness{"support_not_on_hyperplane", j, f.support[j], fh - nj});
        }
    }

    // Global dominance of the hyperplane over every message's net utility.
    const std::vector<Belief> grid = simplex_grid(n, grid_resolution_for(n));
    out.margin = std::numeric_limits<double>::infinity();
    std::string worst_certificate = "convex+grid";
    for (std::size_t d = 0; d < m; ++d) {
        // f_H - N(.|d) = (slopes - (t_d - t_d^n e)) . x + intercept - t_d^n
        //              + kappa c(x) over full coordinates.
        std::vector<double> affine(n, 0.0);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            affine[k] = out.hyperplane.slopes[k];
        }
        for (std::size_t k = 0; k < n; ++k) {
            affine[k] -= contract.transfers[d][k];
        }
        std::string cert;
        ConvexMin res =
            certified_min(affine, out.hyperplane.intercept, cost, grid, cert);
        if (cert == "grid-only") worst_certificate = cert;
        if (res.value < out.margin) out.margin = res.value;
        if (res.value < -tol) {
            out.witnesses.push_back(
                Witness{"dominance_violation", d, res.argmin, res.value});
        } else if (res.value <= tol &&
                   distance_to_support(res.argmin, f) > 1e-6) {
            out.ties.push_back(Witness{"off_support_contact", d, res.argmin,
                                       res.value});
        }
    }
    out.certified_by = worst_certificate;
    out.ok = out.hyperplanes_coincide && contacts_ok && out.margin >= -tol;
    return out;
}

WalkawayCheck check_ic_walkaway(const Contract& contract,
                                const PosteriorDistribution& f,
                                const CostModel& cost, double v0, double tol) {
    if (f.size() != contract.message_count()) {
        throw ValidationError(Errc::domain_violation,
                              "distribution and contract shapes differ");
    }
    const std::size_t n = cost.states();
    const Hyperplane h = hyperplane_from_message(contract, 0, cost);
    std::vector<double> affine(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) affine[k] = h.slopes[k];
    const std::vector<Belief> grid = simplex_grid(n, grid_resolution_for(n));
    WalkawayCheck out;
    ConvexMin res =
        certified_min(affine, h.intercept - v0, cost, grid, out.certified_by);
    out.margin = res.value;
    out.argmin = res.argmin;
    out.ok = out.margin >= -tol;
    return out;
}

ImplementationReport verify(const Contract& contract,
                            const PosteriorDistribution& f,
                            const CostModel& cost,
                            const UtilityModel& utility, double v0,
                            bool require_ll, double tol) {
    ImplementationReport report;
    DominanceCheck dom = check_hyperplane_dominance(contract, f, cost, tol);
    report.honest_learning_ok = dom.ok;
    report.hyperplanes_coincide = dom.hyperplanes_coincide;
    report.hyperplane_gap = dom.hyperplane_gap;
    report.dominance_margin = dom.margin;
    report.hyperplane = dom.hyperplane;
    report.witnesses = dom.witnesses;
    report.ties = dom.ties;

    WalkawayCheck walk = check_ic_walkaway(contract, f, cost, v0, tol);
    report.ic_margin = walk.margin;
    report.ic_argmin = walk.argmin;
    report.certified_by = dom.certified_by == "grid-only" ||
                                  walk.certified_by == "grid-only"
                              ? "grid-only"
                              : "convex+grid";
    if (!walk.ok) {
        report.witnesses.push_back(
            Witness{"walkaway_violation", 0, walk.argmin, walk.margin});
    }

    report.ll_required = require_ll;
    report.min_transfer = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < contract.message_count(); ++j) {
        for (double t : contract.transfers[j]) {
            report.min_transfer = std::min(report.min_transfer, t);
        }
    }
    report.ll_ok = report.min_transfer >= -tol;
    if (require_ll && !report.ll_ok) {
        report.witnesses.push_back(Witness{"negative_transfer", 0, Belief{},
                                           report.min_transfer});
    }

    report.agent_surplus = dom.hyperplane.value(f.prior) - v0;
    report.principal_cost = principal_cost(contract, f, utility);
    report.first_best_cost = first_best_cost(f, cost, utility, v0);
    report.implementable = report.honest_learning_ok && walk.ok &&
                           (!require_ll || report.ll_ok);
    return report;
}

Concavification concavify_two_state(const Contract& contract,
                                    const CostModel& cost,
                                    std::size_t resolution) {
    if (cost.states() != 2) {
        throw ValidationError(Errc::unsupported_shape,
                              "concavification is implemented for two states");
    }
    if (resolution < 8) {
        throw ValidationError(Errc::resolution_too_coarse,
                              "concavification grid too coarse");
    }
    const double band = value_band(cost);
    const double lo = band, hi = 1.0 - band;
    const std::size_t count = resolution + 1;
    const double step = (hi - lo) / static_cast<double>(resolution);

    auto w = [&](double x) {
        return value_function(contract, Belief{{x, 1.0 - x}}, cost).value;
    };

    std::vector<double> xs(count), ws(count);
    for (std::size_t i = 0; i < count; ++i) {
        xs[i] = lo + static_cast<double>(i) * step;
        ws[i] = w(xs[i]);
    }

    // Upper hull by the monotone chain (points already sorted in x).
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < count; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const double cross = (xs[b] - xs[a]) * (ws[i] - ws[a]) -
                                 (ws[b] - ws[a]) * (xs[i] - xs[a]);
            if (cross >= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }

    const double mu = cost.prior()[0];
    std::size_t seg = 0;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        if (xs[hull[i]] <= mu && mu <= xs[hull[i + 1]]) {
            seg = i;
            break;
        }
    }
    double left = xs[hull[seg]];
    double right = xs[hull[std::min(seg + 1, hull.size() - 1)]];

    // The hull vertices support the envelope line; refine each endpoint by a
    // shrinking local scan of W(x) - line(x).
    auto refine = [&](double center, double slope, double intercept) {
        double c = center, h = 2.0 * step;
        for (int round = 0; round < 6; ++round) {
            double best_x = c;
            double best_gap = (slope * c + intercept) - w(c);
            for (int i = -16; i <= 16; ++i) {
                const double x =
                    std::clamp(c + h * static_cast<double>(i) / 16.0, lo, hi);
                const double gap = (slope * x + intercept) - w(x);
                if (gap < best_gap) {
                    best_gap = gap;
                    best_x = x;
                }
            }
            c = best_x;
            h /= 8.0;
        }
        return c;
    };

    Concavification out;
    if (right - left < 0.5 * step) {
        // Prior sits on a hull vertex: no learning, single contact point.
        const double slope = (w(std::min(left + step, hi)) -
                              w(std::max(left - step, lo))) /
                             (std::min(left + step, hi) -
                              std::max(left - step, lo));
        const double contact = refine(left, slope, w(left) - slope * left);
        out.contacts.push_back(contact);
        out.hyperplane.slopes = {slope};
        out.hyperplane.intercept = w(contact) - slope * contact;
    } else {
        double slope = (ws[hull[seg + 1]] - ws[hull[seg]]) / (right - left);
        double intercept = ws[hull[seg]] - slope * left;
        left = refine(left, slope, intercept);
        right = refine(right, slope, intercept);
        slope = (w(right) - w(left)) / (right - left);
        intercept = w(left) - slope * left;
        out.hyperplane.slopes = {slope};
        out.hyperplane.intercept = intercept;
        out.contacts.push_back(left);
        out.contacts.push_back(right);
        // Flat stretches (all tangents equal): report every touching grid
        // point as a contact.
        for (std::size_t i = 0; i < count; ++i) {
            const double gap = (slope * xs[i] + intercept) - ws[i];
            if (gap <= 1e-9 * std::max(1.0, std::fabs(ws[i]))) {
                out.contacts.push_back(xs[i]);
            }
        }
    }
    std::sort(out.contacts.begin(), out.contacts.end());
    out.contacts.erase(
        std::unique(out.contacts.begin(), out.contacts.end(),
                    [](double a, double b) { return std::fabs(a - b) < 1e-6; }),
        out.contacts.end());
    return out;
}

OracleResult brute_force_agent_oracle(const Contract& contract,
                                      const CostModel& cost, double v0,
                                      std::size_t resolution, unsigned seed) {
    const std::size_t n = cost.states();
    if (resolution < 10) {
        throw ValidationError(Errc::resolution_too_coarse,
                              "oracle resolution below 10");
    }
    const Belief& mu = cost.prior();
    auto w_of = [&](const Belief& x) {
        return value_function(contract, x, cost).value;
    };
    // Stopping at a realized posterior x yields max(W(x), v0 - kappa c(x)):
    // the learning cost is sunk whether the agent reports or exits. This is
    // exactly what the walk-away constraint bounds by f_H.
    auto exit_of = [&](const Belief& x) {
        return v0 - cost.scaled_value(x);
    };
    auto stop_value = [&](const Belief& x) {
        return std::max(w_of(x), exit_of(x));
    };

    // Indifference is generic here: flat-level contracts tie the target
    // support against exiting at the cost minimizer. Among candidates within
    // grid accuracy of the maximum, the one with the largest expected W
    // (most reporting, least exiting) is selected; the value reported is the
    // exact grid maximum either way.
    constexpr double kGridTie = 1e-6;

    OracleResult out;
    const double w_mu = w_of(mu);
    out.best_value = std::max(w_mu, v0);
    double selected_value = out.best_value;
    double selected_reporting = w_mu;
    out.best_support = {mu};
    out.best_weights = {1.0};
    out.walkaway_used = v0 > w_mu + 1e-9;

    if (n == 2) {
        const double lo = 1e-6, hi = 1.0 - 1e-6;
        const std::size_t count = resolution + 1;
        const double step = (hi - lo) / static_cast<double>(resolution);
        std::vector<double> xs(count), u(count), wv(count), ex(count);
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = lo + static_cast<double>(i) * step;
            const Belief x{{xs[i], 1.0 - xs[i]}};
            wv[i] = w_of(x);
            ex[i] = exit_of(x);
            u[i] = std::max(wv[i], ex[i]);
        }
        const double mu1 = mu[0];

        // Pass 1: the exact optimum over the grid.
        for (std::size_t i = 0; i < count && xs[i] <= mu1; ++i) {
            for (std::size_t j = count; j-- > 0 && xs[j] >= mu1;) {
                if (xs[j] <= xs[i]) break;
                const double p = (mu1 - xs[i]) / (xs[j] - xs[i]);
                const double val = p * u[j] + (1.0 - p) * u[i];
                if (val > out.best_value) out.best_value = val;
            }
        }
        // Pass 2: the most-reporting strategy within the tie band.
        std::size_t best_i = 0, best_j = 0;
        bool pair_selected = false;
        if (selected_value < out.best_value - kGridTie) {
            selected_reporting = -1e300;
        }
        for (std::size_t i = 0; i < count && xs[i] <= mu1; ++i) {
            for (std::size_t j = count; j-- > 0 && xs[j] >= mu1;) {
                if (xs[j] <= xs[i]) break;
                const double p = (mu1 - xs[i]) / (xs[j] - xs[i]);
                const double val = p * u[j] + (1.0 - p) * u[i];
                if (val < out.best_value - kGridTie) continue;
                const double reporting = p * wv[j] + (1.0 - p) * wv[i];
                if (reporting > selected_reporting + 1e-15) {
                    selected_reporting = reporting;
                    best_i = i;
                    best_j = j;
                    pair_selected = true;
                }
            }
        }
        if (pair_selected) {
            out.best_support = {Belief{{xs[best_i], 1.0 - xs[best_i]}},
                                Belief{{xs[best_j], 1.0 - xs[best_j]}}};
            const double p = (mu1 - xs[best_i]) / (xs[best_j] - xs[best_i]);
            out.best_weights = {1.0 - p, p};
            out.walkaway_used = ex[best_i] > wv[best_i] + 1e-9 ||
                                ex[best_j] > wv[best_j] + 1e-9;
        }
        return out;
    }
    if (n > 4) {
        throw ValidationError(Errc::unsupported_shape,
                              "oracle supports at most four states");
    }

    // Sampled mode: random affinely independent supports of n points whose
    // weights solve Bayes plausibility with nonnegative mass, plus the
    // contract's own message set. Enumeration is replayed for the two-pass
    // tie handling above.
    auto weights_for = [&](const std::vector<Belief>& pts,
                           std::vector<double>& weights) {
        const std::size_t m = pts.size();
        std::vector<std::vector<double>> a(n + 1, std::vector<double>(m));
        std::vector<double> b(n + 1);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < m; ++j) a[k][j] = pts[j][k];
            b[k] = mu[k];
        }
        for (std::size_t j = 0; j < m; ++j) a[n][j] = 1.0;
        b[n] = 1.0;
        if (!numeric::solve_least_squares(a, b, weights)) return false;
        for (double w : weights) {
            if (w < -1e-10) return false;
        }
        return true;
    };
    auto for_each_candidate = [&](auto&& visit) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.02, 0.98);
        const std::size_t trials = resolution * 50;
        std::vector<double> weights;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            std::vector<Belief> pts;
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<double> p(n);
                double s = 0.0;
                for (double& v : p) {
                    v = unif(rng);
                    s += v;
                }
                for (double& v : p) v /= s;
                pts.push_back(Belief{std::move(p)});
            }
            if (weights_for(pts, weights)) visit(pts, weights);
        }
        if (weights_for(contract.messages, weights)) {
            visit(contract.messages, weights);
        }
    };
    auto value_of = [&](const std::vector<Belief>& pts,
                        const std::vector<double>& weights, double* reporting) {
        double val = 0.0, rep = 0.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (weights[j] <= 0.0) continue;
            val += weights[j] * stop_value(pts[j]);
            rep += weights[j] * w_of(pts[j]);
        }
        if (reporting) *reporting = rep;
        return val;
    };

    for_each_candidate([&](const std::vector<Belief>& pts,
                           const std::vector<double>& weights) {
        const double val = value_of(pts, weights, nullptr);
        if (val > out.best_value) out.best_value = val;
    });
    if (std::max(w_mu, v0) < out.best_value - kGridTie) {
        selected_reporting = -1e300;
    }
    for_each_candidate([&](const std::vector<Belief>& pts,
                           const std::vector<double>& weights) {
        double reporting = 0.0;
        const double val = value_of(pts, weights, &reporting);
        if (val < out.best_value - kGridTie) return;
        if (reporting > selected_reporting + 1e-15) {
            selected_reporting = reporting;
            out.best_support = pts;
            out.best_weights = weights;
            out.walkaway_used = false;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (weights[j] > 0.0 &&
                    exit_of(pts[j]) > w_of(pts[j]) + 1e-9) {
                    out.walkaway_used = true;
                }
            }
        }
    });
    return out;
}

EtaValues eta(double x_low, double x_high, const CostModel& cost) {
    if (cost.states() != 2) {
        throw ValidationError(Errc::unsupported_shape,
                              "eta is a two-state threshold");
    }
    const double mu = cost.prior()[0];
    if (x_low < kInteriorEps || x_high > 1.0 - kInteriorEps) {
        throw ValidationError(Errc::boundary_point,
                              "eta needs interior posteriors");
    }
    if (x_low > mu + 1e-12 || x_high < mu - 1e-12) {
        throw ValidationError(Errc::domain_violation,
                              "eta needs x_low <= prior <= x_high");
    }
    EtaValues out;
    const double dmu = cost.gradient1(mu);
    out.eta1 = -mu * dmu - cost.value1(x_high) +
               cost.gradient1(x_high) * x_high;
    out.eta2 = (1.0 - mu) * dmu - cost.value1(x_low) -
               (1.0 - x_low) * cost.gradient1(x_low);
    out.eta = std::max(out.eta1, out.eta2);
    return out;
}

bool blackwell_leq_two_state(const PosteriorDistribution& f1,
                             const PosteriorDistribution& f2) {
    auto interval = [](const PosteriorDistribution& f) {
        if (f.prior.states() != 2 || f.size() > 2) {
            throw ValidationError(Errc::unsupported_shape,
                                  "blackwell test needs binary two-state "
                                  "distributions");
        }
        double lo = f.support.front()[0], hi = lo;
        for (const Belief& x : f.support) {
            lo = std::min(lo, x[0]);
            hi = std::max(hi, x[0]);
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [lo1, hi1] = interval(f1);
    const auto [lo2, hi2] = interval(f2);
    if (std::fabs(f1.prior[0] - f2.prior[0]) > 1e-9) {
        throw ValidationError(Errc::unsupported_shape,
                              "blackwell test needs a common prior");
    }
    return lo1 >= lo2 - 1e-12 && hi1 <= hi2 + 1e-12;
}

}  // namespace infopact
