#include "infopact/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infopact/errors.hpp"

namespace infopact::numeric {

ScalarMin golden_section_min(const std::function<double(double)>& f,
                             double lo, double hi,
                             double x_tol, int max_iter) {
    if (!(lo <= hi)) {
        throw ValidationError(Errc::domain_violation,
                              "golden_section_min: empty interval");
    }
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int it = 0;
    while (b - a > x_tol && it < max_iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    ScalarMin out;
    out.x = 0.5 * (a + b);
    out.value = f(out.x);
    out.iterations = it;
    // Flat or boundary minima: keep whichever candidate is lowest.
    const double f_lo = f(lo), f_hi = f(hi);
    if (f_lo < out.value) {
        out.x = lo;
        out.value = f_lo;
    }
    if (f_hi < out.value) {
        out.x = hi;
        out.value = f_hi;
    }
    return out;
}

double bisect_root_increasing(const std::function<double(double)>& f,
                              double lo, double hi,
                              double x_tol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0) {
        throw SolverError(Errc::root_find_failure,
                          "bisect_root_increasing: no sign change on bracket");
    }
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int it = 0; it < max_iter && hi - lo > x_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> project_to_simplex(std::vector<double> y, double band) {
    const std::size_t n = y.size();
    const double mass = 1.0 - static_cast<double>(n) * band;
    // Shift so the problem becomes projection onto {z >= 0, sum z = mass}.
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = y[i] - band;

    std::vector<double> u = z;
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0;
    std::size_t rho = 0;
    double partial = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        css += u[k];
        if (u[k] - (css - mass) / static_cast<double>(k + 1) > 0.0) {
            rho = k + 1;
            partial = css;
        }
    }
    const double theta = (partial - mass) / static_cast<double>(rho);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::max(z[i] - theta, 0.0) + band;
    }
    return out;
}

SimplexMin minimize_convex_on_simplex(
    std::size_t n,
    const std::function<double(const std::vector<double>&)>& f,
    const std::function<std::vector<double>(const std::vector<double>&)>& grad,
    double band,
    const std::vector<std::vector<double>>& starts,
    int max_iter) {
    SimplexMin best;
    bool have_best = false;
    for (const auto& start : starts) {
        std::vector<double> x = project_to_simplex(start, band);
        double fx = f(x);
        double step = 1.0;
        int it = 0;
        bool converged = false;
        for (; it < max_iter; ++it) {
            std::vector<double> g = grad(x);
            // Backtracking line search on the projected step.
            bool improved = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> y(n);
                for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - step * g[i];
                y = project_to_simplex(std::move(y), band);
                const double fy = f(y);
                if (fy < fx - 1e-16) {
                    double move = 0.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        move = std::max(move, std::fabs(y[i] - x[i]));
                    }
                    x = std::move(y);
                    const double drop = fx - fy;
                    fx = fy;
                    improved = true;
                    if (move < 1e-13 && drop < 1e-15) converged = true;
                    step *= 1.6;
                    break;
                }
                step *= 0.5;
                if (step < 1e-18) break;
            }
            if (!improved || converged) {
                converged = true;
                break;
            }
        }
        if (!have_best || fx < best.value) {
            best.x = x;
            best.value = fx;
            best.converged = converged;
            best.iterations = it;
            have_best = true;
        }
    }
    if (!have_best) {
        throw SolverError(Errc::minimization_failure,
                          "minimize_convex_on_simplex: no start point given");
    }
    return best;
}

bool solve_least_squares(const std::vector<std::vector<double>>& a,
                         const std::vector<double>& b,
                         std::vector<double>& x) {
    const std::size_t rows = a.size();
    if (rows == 0) return false;
    const std::size_t cols = a[0].size();
    // Normal equations: (A^T A) x = A^T b.
    std::vector<std::vector<double>> m(cols, std::vector<double>(cols, 0.0));
    std::vector<double> rhs(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < cols; ++i) {
            rhs[i] += a[r][i] * b[r];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] += a[r][i] * a[r][j];
        }
    }
    // Gaussian elimination with partial pivoting.
    std::vector<std::size_t> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < cols; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        }
        if (std::fabs(m[pivot][col]) < 1e-13) return false;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < cols; ++r) {
            const double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    x.assign(cols, 0.0);
    for (std::size_t i = cols; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < cols; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return true;
}

}  // namespace infopact::numeric
