#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "qcs/errors.hpp"

namespace qcs {

namespace detail {

// Gauss-Kronrod 15(7) abscissae/weights on [-1, 1] (positive half, symmetric).
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kGk15WeightsK = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// 7-point Gauss weights matching the odd Kronrod abscissae (indices 1,3,5,7).
inline constexpr std::array<double, 4> kGk15WeightsG = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace detail

/// One Gauss-Kronrod 15(7) panel: returns the K15 value per component and an
/// error estimate |K15 - G7| (max over components, scaled by component size is
/// left to the caller).
template <std::size_t N, typename F>
void gk15_panel(F&& f, double a, double b, std::array<double, N>& value,
                std::array<double, N>& err) {
    using detail::kGk15Nodes;
    using detail::kGk15WeightsG;
    using detail::kGk15WeightsK;

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, N> sum_k{};
    std::array<double, N> sum_g{};

    for (std::size_t i = 0; i < kGk15Nodes.size(); ++i) {
        const double offset = half * kGk15Nodes[i];
        std::array<double, N> fv;
        if (i == kGk15Nodes.size() - 1) {
            fv = f(mid);
        } else {
            const std::array<double, N> f_plus = f(mid + offset);
            const std::array<double, N> f_minus = f(mid - offset);
            for (std::size_t c = 0; c < N; ++c) fv[c] = f_plus[c] + f_minus[c];
        }
        for (std::size_t c = 0; c < N; ++c) sum_k[c] += kGk15WeightsK[i] * fv[c];
        if (i % 2 == 1) {
            for (std::size_t c = 0; c < N; ++c) sum_g[c] += kGk15WeightsG[i / 2] * fv[c];
        }
    }
    for (std::size_t c = 0; c < N; ++c) {
        value[c] = half * sum_k[c];
        err[c] = std::abs(half * (sum_k[c] - sum_g[c]));
    }
}

/// Adaptive bisection of [a, b] with per-panel tolerance proportional to
/// width.  Deterministic: panels are traversed depth-first left to right and
/// accumulated in that order.  Throws QuadratureNotConverged when a panel
/// still fails its budget at max_depth.
template <std::size_t N, typename F>
std::array<double, N> integrate_adaptive(F&& f, double a, double b,
                                         const std::array<double, N>& abs_tol,
                                         int max_depth = 32) {
    std::array<double, N> total{};

    struct Frame {
        double a, b;
        int depth;
    };

    // Explicit stack, pushed right-half-first so the left half is processed
    // first (deterministic accumulation order).
    std::array<Frame, 512> stack;
    int top = 0;
    stack[top++] = {a, b, 0};
    const double full_width = b - a;

    while (top > 0) {
        const Frame fr = stack[--top];
        std::array<double, N> value, err;
        gk15_panel<N>(f, fr.a, fr.b, value, err);

        const double frac = (fr.b - fr.a) / full_width;
        bool ok = true;
        for (std::size_t c = 0; c < N; ++c) {
            if (err[c] > abs_tol[c] * frac) ok = false;
        }
        if (ok || fr.depth >= max_depth) {
            if (!ok) {
                throw QuadratureNotConverged(
                    "adaptive quadrature: panel error above tolerance at max depth");
            }
            for (std::size_t c = 0; c < N; ++c) total[c] += value[c];
            continue;
        }
        if (top + 2 > static_cast<int>(stack.size())) {
            throw QuadratureNotConverged("adaptive quadrature: panel stack overflow");
        }
        const double mid = 0.5 * (fr.a + fr.b);
        stack[top++] = {mid, fr.b, fr.depth + 1};
        stack[top++] = {fr.a, mid, fr.depth + 1};
    }
    return total;
}

/// Scalar convenience wrapper.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 32);

/// Mean of a smooth 2*pi-periodic function over one period, uniform trapezoid
/// with node doubling (exact for trigonometric polynomials once the node
/// count exceeds the bandwidth).  min_nodes seeds the refinement; pass the
/// known oscillation count when available.
double angular_mean(const std::function<double(double)>& f, double tol,
                    int min_nodes = 16, int max_nodes = 1 << 15);

}  // namespace qcs
