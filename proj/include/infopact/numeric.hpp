#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace infopact::numeric {

struct ScalarMin {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

// Minimize a unimodal (in practice convex) function on [lo, hi].
// Endpoints are compared against the interior optimum.
ScalarMin golden_section_min(const std::function<double(double)>& f,
                             double lo, double hi,
                             double x_tol = 1e-12, int max_iter = 200);

// Root of a nondecreasing function on [lo, hi]; requires f(lo) <= 0 <= f(hi).
double bisect_root_increasing(const std::function<double(double)>& f,
                              double lo, double hi,
                              double x_tol = 1e-14, int max_iter = 200);

// Euclidean projection onto {x : x_i >= band, sum x_i = 1}.
std::vector<double> project_to_simplex(std::vector<double> y, double band);

struct SimplexMin {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Projected gradient descent with backtracking for a convex objective on the
// banded probability simplex. `grad` returns any full-coordinate gradient
// representative; the component along (1,...,1) is immaterial after
// projection.
SimplexMin minimize_convex_on_simplex(
    std::size_t n,
    const std::function<double(const std::vector<double>&)>& f,
    const std::function<std::vector<double>(const std::vector<double>&)>& grad,
    double band,
    const std::vector<std::vector<double>>& starts,
    int max_iter = 2000);

// Least-squares solve of A x = b via normal equations (A is rows x cols,
// row-major). Returns false when the normal matrix is numerically singular.
bool solve_least_squares(const std::vector<std::vector<double>>& a,
                         const std::vector<double>& b,
                         std::vector<double>& x);

}  // namespace infopact::numeric
