#include "qcs/charfn.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qcs/quadrature.hpp"
#include "qcs/special_functions.hpp"

namespace qcs {

namespace {

constexpr double kPi = std::numbers::pi;

/// chi of a fock_matrix state decomposed by diagonal offset:
/// chi(r e^{i phi}) = G_0(r) + sum_{k>=1} [G_k(r) e^{i k phi}
///                                          + (-1)^k conj(G_k(r)) e^{-i k phi}]
/// with G_k(r) = sum_j rho_{j, j+k} t_j^{(k)}(r^2).  The angular mean of
/// |chi|^2 is then exact: |G_0|^2 + 2 sum_{k>=1} |G_k|^2.
class MatrixChi {
public:
    explicit MatrixChi(const FockDensityMatrix& mat) : mat_(&mat), dim_(mat.dim()) {
        band_nonzero_.assign(dim_, false);
        for (int k = 0; k < dim_; ++k) {
            for (int j = 0; j + k < dim_; ++j) {
                if (mat.entry(j, j + k) != complexd(0.0, 0.0)) {
                    band_nonzero_[k] = true;
                    break;
                }
            }
        }
    }

    int dim() const { return dim_; }

    void bands_at(double r, std::vector<complexd>& g) const {
        const double x = r * r;
        g.assign(dim_, complexd(0.0, 0.0));
        std::vector<double> t(dim_);
        for (int k = 0; k < dim_; ++k) {
            if (!band_nonzero_[k]) continue;
            std::span<double> tk(t.data(), dim_ - k);
            displacement_radial(k, x, tk);
            complexd acc(0.0, 0.0);
            for (int j = 0; j + k < dim_; ++j) acc += mat_->entry(j, j + k) * tk[j];
            g[k] = acc;
        }
    }

    double angular_mean_sq(double r) const {
        std::vector<complexd> g;
        bands_at(r, g);
        double s = std::norm(g[0]);
        for (int k = 1; k < dim_; ++k) s += 2.0 * std::norm(g[k]);
        return s;
    }

    complexd value(complexd xi) const {
        const double r = std::abs(xi);
        const double phi = std::arg(xi);
        std::vector<complexd> g;
        bands_at(r, g);
        complexd chi = g[0];
        for (int k = 1; k < dim_; ++k) {
            if (g[k] == complexd(0.0, 0.0)) continue;
            const complexd up = std::polar(1.0, k * phi);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            chi += g[k] * up + sign * std::conj(g[k]) / up;
        }
        return chi;
    }

private:
    const FockDensityMatrix* mat_;
    int dim_;
    std::vector<char> band_nonzero_;
};

complexd chi_gaussian(const GaussianMoments& m, complexd xi) {
    // chi_G = exp(-1/2 xi^T Omega V Omega^T xi) times the mean phase;
    // Omega V Omega^T = [[V22, -V12], [-V12, V11]].
    const double x1 = xi.real(), x2 = xi.imag();
    const double quad = m.V(1, 1) * x1 * x1 - 2.0 * m.V(0, 1) * x1 * x2 +
                        m.V(0, 0) * x2 * x2;
    const double phase = std::sqrt(2.0) * (x2 * m.mean(0) - x1 * m.mean(1));
    return std::exp(-0.5 * quad) * std::polar(1.0, phase);
}

complexd chi_cat(complexd alpha, complexd xi) {
    const double a = std::norm(alpha);
    const double norm2 = 2.0 * (1.0 + std::exp(-2.0 * a));
    const double x = std::norm(xi);
    const double im = (xi * std::conj(alpha)).imag();
    const double direct = 2.0 * std::exp(-0.5 * x) * std::cos(2.0 * im);
    const double cross = std::exp(-0.5 * std::norm(2.0 * alpha + xi)) +
                         std::exp(-0.5 * std::norm(2.0 * alpha - xi));
    return complexd((direct + cross) / norm2, 0.0);
}

double chi_fock(int n, double x) {
    std::vector<double> t(n + 1);
    displacement_radial(0, x, t);
    return t[n];
}

double chi_even(int m, double x) {
    std::vector<double> t(2 * m + 1);
    displacement_radial(0, x, t);
    double s = 0.0;
    for (int k = 1; k <= m; ++k) s += t[2 * k];
    return s / m;
}

// ---------------------------------------------------------------------------
// moment integrals

struct WeightSet {
    double tau = 0.0;        // t / t_rel
    double beta = 0.0;       // (2 nbar_inf + 1)(e^tau - 1), I0 and I2 weight
    double beta1 = 0.0;      // I1 weight (differs only in diagnostic mode)
};

struct RadialSetup {
    double lambda_env = 1.0;   // decay rate of |chi|^2
    double poly_halfdeg = 3.0; // polynomial degree in r^2 riding the envelope
    double offset = 0.0;       // radial shift of the envelope (cat lobes)
    double hard_cap = 0.0;     // optional cap on r_max^2 (0 = none)
};

double initial_rmax(const RadialSetup& setup, double beta_min) {
    const double lam = setup.lambda_env + beta_min;
    double r2 = 45.0 / lam;
    for (int it = 0; it < 5; ++it) {
        r2 = (39.0 + setup.poly_halfdeg * std::log1p(r2)) / lam;
    }
    if (setup.hard_cap > 0.0) r2 = std::min(r2, setup.hard_cap);
    return std::sqrt(r2) + setup.offset;
}

RadialSetup radial_setup(const State& state) {
    RadialSetup s;
    switch (state.family()) {
        case Family::fock:
            s.poly_halfdeg = 2.0 * std::get<FockSpec>(state.spec()).n + 4.0;
            break;
        case Family::even_mixture:
            s.poly_halfdeg = 4.0 * std::get<EvenMixtureSpec>(state.spec()).m + 4.0;
            break;
        case Family::thermal:
            s.lambda_env = 1.0 + 2.0 * std::get<ThermalSpec>(state.spec()).nbar;
            break;
        case Family::cat:
            s.offset = 2.0 * std::abs(std::get<CatSpec>(state.spec()).alpha);
            s.poly_halfdeg = 4.0;
            break;
        case Family::fock_matrix: {
            const int d = std::get<FockMatrixSpec>(state.spec()).matrix->dim();
            s.poly_halfdeg = 2.0 * d + 4.0;
            // classical turning point of the highest Laguerre mode
            s.hard_cap = 4.0 * d + 20.0 * std::sqrt(static_cast<double>(d)) + 60.0;
            break;
        }
        default:
            break;
    }
    return s;
}

/// Integrate the three weighted components over [0, rmax] with tail
/// extensions, two-pass (coarse scale estimate, then tolerance-driven).
std::array<double, 3> integrate_components(
    const std::function<double(double)>& mean_sq, const WeightSet& w,
    double rmax, double quad_tol) {
    auto f = [&](double r) -> std::array<double, 3> {
        const double a = mean_sq(r);
        const double r2 = r * r;
        const double base = 2.0 * kPi * r * a;
        return {base * std::exp(-w.beta * r2),
                base * r2 * std::exp(-w.beta1 * r2),
                base * r2 * r2 * std::exp(-w.beta * r2)};
    };

    // coarse pass for component scales
    std::array<double, 3> coarse{};
    {
        const int panels = 8;
        for (int p = 0; p < panels; ++p) {
            std::array<double, 3> v, e;
            gk15_panel<3>(f, rmax * p / panels, rmax * (p + 1) / panels, v, e);
            for (int c = 0; c < 3; ++c) coarse[c] += v[c];
        }
    }
    std::array<double, 3> tol;
    for (int c = 0; c < 3; ++c) {
        tol[c] = 0.2 * quad_tol * std::max(std::abs(coarse[c]), 1e-8 * std::abs(coarse[0]));
        if (tol[c] <= 0.0) tol[c] = 1e-300;
    }

    std::array<double, 3> total = integrate_adaptive<3>(f, 0.0, rmax, tol);

    // extend while the tail still contributes
    double lo = rmax;
    for (int ext = 0; ext < 24; ++ext) {
        const double hi = lo * 1.5;
        const std::array<double, 3> piece = integrate_adaptive<3>(f, lo, hi, tol);
        bool negligible = true;
        for (int c = 0; c < 3; ++c) {
            total[c] += piece[c];
            if (std::abs(piece[c]) > tol[c] / 8.0) negligible = false;
        }
        if (negligible) return total;
        lo = hi;
    }
    throw QuadratureNotConverged("radial moments: tail did not settle");
}

/// 1D even-axis moments  {int u^0, u^2, u^4  e^{-lambda u^2} du}  over the
/// whole axis, numerically.
std::array<double, 3> gauss_axis_moments(double lambda, double quad_tol) {
    double r2 = 45.0 / lambda;
    for (int it = 0; it < 5; ++it) r2 = (39.0 + 3.0 * std::log1p(r2)) / lambda;
    const double rmax = std::sqrt(r2);

    auto f = [lambda](double u) -> std::array<double, 3> {
        const double u2 = u * u;
        const double e = std::exp(-lambda * u2);
        return {e, u2 * e, u2 * u2 * e};
    };
    std::array<double, 3> coarse{};
    for (int p = 0; p < 8; ++p) {
        std::array<double, 3> v, e;
        gk15_panel<3>(f, rmax * p / 8.0, rmax * (p + 1) / 8.0, v, e);
        for (int c = 0; c < 3; ++c) coarse[c] += v[c];
    }
    std::array<double, 3> tol;
    for (int c = 0; c < 3; ++c) tol[c] = std::max(0.1 * quad_tol * coarse[c], 1e-300);
    const std::array<double, 3> half = integrate_adaptive<3>(f, 0.0, rmax, tol);
    return {2.0 * half[0], 2.0 * half[1], 2.0 * half[2]};
}

/// Anisotropic Gaussian path: |chi|^2 = e^{-v1 u1^2 - v2 u2^2} in the frame
/// of the covariance eigenvectors; the moment integrals separate into 1D
/// factors, each integrated numerically.
RadialMoments gaussian_moments_numeric(const GaussianMoments& m, const WeightSet& w,
                                       double quad_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m.V);
    const double v1 = es.eigenvalues()(0);
    const double v2 = es.eigenvalues()(1);

    const auto a1 = gauss_axis_moments(v1 + w.beta, quad_tol);
    const auto a2 = gauss_axis_moments(v2 + w.beta, quad_tol);
    std::array<double, 3> b1 = a1, b2 = a2;
    if (w.beta1 != w.beta) {
        b1 = gauss_axis_moments(v1 + w.beta1, quad_tol);
        b2 = gauss_axis_moments(v2 + w.beta1, quad_tol);
    }

    RadialMoments out;
    const double e1 = std::exp(w.tau);
    out.i0 = e1 * a1[0] * a2[0];
    out.i1 = e1 * e1 * (b1[1] * b2[0] + b1[0] * b2[1]);
    out.i2 = e1 * e1 * e1 * (a1[2] * a2[0] + 2.0 * a1[1] * a2[1] + a1[0] * a2[2]);
    return out;
}

bool isotropic_modulus(const State& state) {
    // |chi|^2 depends on |xi| only: rotation-invariant states, plus coherent
    // states (the displacement phase drops out of the modulus).
    return state.rotation_invariant() || state.family() == Family::coherent;
}

}  // namespace

complexd char_at(const State& state, complexd xi) {
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag())) {
        throw InvalidSpec("char_at: xi must be finite");
    }
    const double x = std::norm(xi);
    switch (state.family()) {
        case Family::fock:
            return complexd(chi_fock(std::get<FockSpec>(state.spec()).n, x), 0.0);
        case Family::coherent: {
            const complexd alpha = std::get<CoherentSpec>(state.spec()).alpha;
            const double im = (xi * std::conj(alpha)).imag();
            return std::exp(-0.5 * x) * std::polar(1.0, 2.0 * im);
        }
        case Family::cat:
            return chi_cat(std::get<CatSpec>(state.spec()).alpha, xi);
        case Family::thermal: {
            const double nbar = std::get<ThermalSpec>(state.spec()).nbar;
            return complexd(std::exp(-0.5 * (1.0 + 2.0 * nbar) * x), 0.0);
        }
        case Family::even_mixture:
            return complexd(chi_even(std::get<EvenMixtureSpec>(state.spec()).m, x), 0.0);
        case Family::squeezed_thermal:
        case Family::gaussian:
            return chi_gaussian(*state.gaussian_moments(), xi);
        case Family::fock_matrix: {
            MatrixChi chi(*std::get<FockMatrixSpec>(state.spec()).matrix);
            return chi.value(xi);
        }
    }
    throw Error("char_at: unreachable");
}

RadialMoments radial_moments_at(const State& state, const ChannelParams& channel,
                                double t, const MomentOptions& opts) {
    channel.validate();
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidSpec("radial_moments_at: t must be >= 0");
    }
    const double tau = t / channel.t_rel;
    if (tau > 200.0) {
        throw InvalidSpec("radial_moments_at: t too many relaxation times out");
    }

    WeightSet w;
    w.tau = tau;
    const double em1 = std::expm1(tau);
    w.beta = (2.0 * channel.nbar_inf + 1.0) * em1;
    w.beta1 = opts.reduced_i1_weight ? (2.0 * channel.nbar_inf) * em1 : w.beta;

    const Family fam = state.family();
    const bool anisotropic_gaussian =
        (fam == Family::squeezed_thermal || fam == Family::gaussian) &&
        !state.rotation_invariant();
    if (anisotropic_gaussian) {
        return gaussian_moments_numeric(*state.gaussian_moments(), w, opts.quad_tol);
    }

    const RadialSetup setup = radial_setup(state);
    const double rmax = initial_rmax(setup, std::min(w.beta, w.beta1));

    std::function<double(double)> mean_sq;
    std::shared_ptr<MatrixChi> mchi;
    if (fam == Family::fock_matrix) {
        mchi = std::make_shared<MatrixChi>(*std::get<FockMatrixSpec>(state.spec()).matrix);
        mean_sq = [mchi](double r) { return mchi->angular_mean_sq(r); };
    } else if (isotropic_modulus(state)) {
        mean_sq = [&state](double r) { return std::norm(char_at(state, complexd(r, 0.0))); };
    } else {
        // cat states: trapezoid in angle, seeded by the lobe oscillation count
        const double abs_alpha = std::abs(std::get<CatSpec>(state.spec()).alpha);
        mean_sq = [&state, abs_alpha](double r) {
            int hint = 16;
            while (hint < 8.0 * r * abs_alpha + 32.0) hint *= 2;
            return angular_mean(
                [&state, r](double phi) {
                    return std::norm(char_at(state, std::polar(r, phi)));
                },
                1e-12, hint);
        };
    }

    const auto raw = integrate_components(mean_sq, w, rmax, opts.quad_tol);
    RadialMoments out;
    const double e1 = std::exp(tau);
    out.i0 = e1 * raw[0];
    out.i1 = e1 * e1 * raw[1];
    out.i2 = e1 * e1 * e1 * raw[2];
    if (!(out.i0 > 0.0)) {
        throw QuadratureNotConverged("radial moments: nonpositive norm integral");
    }
    return out;
}

RadialMoments radial_moments(const State& state, const MomentOptions& opts) {
    return radial_moments_at(state, ChannelParams{}, 0.0, opts);
}

double integrate_polar(const std::function<double(double, double)>& f,
                       bool rotation_invariant, double r_max, double abs_tol,
                       int angular_min_nodes) {
    auto radial = [&](double r) -> std::array<double, 1> {
        double mean;
        if (rotation_invariant) {
            mean = f(r, 0.0);
        } else {
            mean = angular_mean([&](double phi) { return f(r, phi); },
                                1e-12, angular_min_nodes);
        }
        return {2.0 * kPi * r * mean};
    };
    return integrate_adaptive<1>(radial, 0.0, r_max, {abs_tol})[0];
}

}  // namespace qcs
