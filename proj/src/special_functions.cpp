#include "qcs/special_functions.hpp"

#include <cmath>

namespace qcs {

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) return;
    constexpr double inv_pi_quarter = 0.7511255444649425;  // pi^{-1/4}
    const double psi0 = inv_pi_quarter * std::exp(-0.5 * x * x);
    out[0] = psi0;
    if (out.size() == 1) return;
    out[1] = std::sqrt(2.0) * x * psi0;
    for (std::size_t n = 1; n + 1 < out.size(); ++n) {
        const double dn = static_cast<double>(n);
        out[n + 1] = std::sqrt(2.0 / (dn + 1.0)) * x * out[n]
                   - std::sqrt(dn / (dn + 1.0)) * out[n - 1];
    }
}

double laguerre(int n, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

void displacement_radial(int k, double x, std::span<double> out) {
    if (out.empty()) return;
    double t0;
    if (x == 0.0) {
        t0 = (k == 0) ? 1.0 : 0.0;
    } else {
        t0 = std::exp(0.5 * (k * std::log(x) - x) - 0.5 * log_factorial(k));
    }
    out[0] = t0;
    if (out.size() == 1) return;
    out[1] = (1.0 + k - x) / std::sqrt(1.0 + k) * t0;
    for (std::size_t j = 1; j + 1 < out.size(); ++j) {
        const double dj = static_cast<double>(j);
        const double denom = std::sqrt((dj + 1.0) * (dj + 1.0 + k));
        out[j + 1] = (2.0 * dj + 1.0 + k - x) / denom * out[j]
                   - std::sqrt(dj * (dj + k) / ((dj + 1.0) * (dj + 1.0 + k))) * out[j - 1];
    }
}

}  // namespace qcs
