#pragma once

#include <functional>

#include "qcs/channel_params.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// Unnormalized integrals I_k = int |xi|^{2k} |chi(xi; t)|^2 d^2 xi, k = 0, 1, 2.
/// Purity is i0/pi, QCS^2 is i1/i0, kappa is i2*i0/i1^2 - 1.
struct RadialMoments {
    double i0 = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
};

struct MomentOptions {
    /// Absolute tolerance on the normalized moments i1/i0, i2/i0.
    double quad_tol = 1e-8;
    /// Diagnostic only: drops the "+1" of the (2 nbar_inf + 1) factor in the
    /// I1 time-weight, leaving I0 and I2 untouched.  Exists for the
    /// weight-factor differential check in the acceptance suite.
    bool reduced_i1_weight = false;
};

/// chi(xi) = Tr[rho D(xi)], D(xi) = exp(xi a^dag - conj(xi) a).
/// Closed forms for the analytic families; number-basis Laguerre sums for
/// fock_matrix states (O(dim^2) per point, safe for dim in the hundreds).
complexd char_at(const State& state, complexd xi);

/// Moment integrals of the exactly evolved characteristic function at time t
/// (t = 0 gives the static moments; the weight is then identically 1).
RadialMoments radial_moments_at(const State& state, const ChannelParams& channel,
                                double t, const MomentOptions& opts = {});

/// Static moments, no channel involved.
RadialMoments radial_moments(const State& state, const MomentOptions& opts = {});

/// 2D integral  int f(r, phi) r dr dphi  over r in [0, r_max], phi in [0, 2pi).
/// Adaptive Gauss-Kronrod panels in r; uniform trapezoid doubling in phi
/// unless rotation_invariant, which short-circuits to a single angle.
double integrate_polar(const std::function<double(double, double)>& f,
                       bool rotation_invariant, double r_max, double abs_tol,
                       int angular_min_nodes = 16);

}  // namespace qcs
