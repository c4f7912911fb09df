#include "qcs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qcs {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    auto wrapped = [&f](double x) { return std::array<double, 1>{f(x)}; };
    return integrate_adaptive<1>(wrapped, a, b, {abs_tol}, max_depth)[0];
}

double angular_mean(const std::function<double(double)>& f, double tol,
                    int min_nodes, int max_nodes) {
    int n = 4;
    while (n < min_nodes) n *= 2;

    const double two_pi = 2.0 * std::numbers::pi;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(two_pi * j / n);
    double mean = sum / n;

    int streak = 0;
    while (n < max_nodes) {
        // midpoints of the current nodes; the union is the doubled grid
        double mid_sum = 0.0;
        for (int j = 0; j < n; ++j) mid_sum += f(two_pi * (j + 0.5) / n);
        const double next = 0.5 * (mean + mid_sum / n);
        const double change = std::abs(next - mean);
        mean = next;
        n *= 2;
        if (change <= tol * (std::abs(mean) + 1e-300)) {
            if (++streak >= 2) return mean;
        } else {
            streak = 0;
        }
    }
    if (streak >= 1) return mean;  // converged on the final doubling
    throw QuadratureNotConverged("angular mean: trapezoid refinement exhausted");
}

}  // namespace qcs
