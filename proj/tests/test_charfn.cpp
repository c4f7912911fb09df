#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "qcs/charfn.hpp"
#include "qcs/special_functions.hpp"
#include "qcs/states.hpp"

using namespace qcs;

namespace {

const double kPi = std::numbers::pi;

std::vector<State> analytic_family_samples() {
    const double r = 0.5 * std::acosh(19.8);
    return {
        build_state(FockSpec{5}),
        build_state(CoherentSpec{complexd(1.3, -0.2)}),
        build_state(CatSpec{2.236}),
        build_state(ThermalSpec{5.0}),
        build_state(EvenMixtureSpec{4}),
        build_state(SqueezedThermalSpec{1.8, r, 0.0}),
    };
}

}  // namespace

TEST_CASE("char_at: normalization chi(0) = 1") {
    for (const auto& st : analytic_family_samples()) {
        CHECK(char_at(st, complexd(0.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(char_at(st, complexd(0.0, 0.0)).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("char_at: modulus bounded by one") {
    for (const auto& st : analytic_family_samples()) {
        for (double re : {-2.1, 0.3, 1.7}) {
            for (double im : {-0.9, 0.0, 2.4}) {
                CHECK(std::abs(char_at(st, complexd(re, im))) <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("char_at: hermitian symmetry chi(-xi) = conj(chi(xi))") {
    for (const auto& st : analytic_family_samples()) {
        for (complexd xi : {complexd(0.7, 0.2), complexd(-1.1, 1.9), complexd(0.0, 2.5)}) {
            const complexd a = char_at(st, -xi);
            const complexd b = std::conj(char_at(st, xi));
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("char_at: thermal closed form equals number-basis trace") {
    const double nbar = 5.0;
    const State st = build_state(ThermalSpec{nbar});
    const double q = nbar / (1.0 + nbar);
    for (double x : {0.1, 0.9, 3.2}) {
        // oracle: sum p_n e^{-x/2} L_n(x), truncated far into the tail
        std::vector<double> t(400);
        displacement_radial(0, x, t);
        double oracle = 0.0;
        for (int n = 0; n < 400; ++n) oracle += (1.0 - q) * std::pow(q, n) * t[n];
        const complexd got = char_at(st, complexd(std::sqrt(x), 0.0));
        CHECK(got.real() == doctest::Approx(oracle).epsilon(1e-11));
        CHECK(got.real() ==
              doctest::Approx(std::exp(-0.5 * (1.0 + 2.0 * nbar) * x)).epsilon(1e-11));
    }
}

TEST_CASE("char_at: fock(1) vanishes at |xi|^2 = 1") {
    const State st = build_state(FockSpec{1});
    CHECK(std::abs(char_at(st, complexd(1.0, 0.0))) < 1e-14);
    CHECK(std::abs(char_at(st, complexd(0.0, 1.0))) < 1e-14);
}

TEST_CASE("char_at: rotation-invariant families have angle-free chi") {
    for (const auto& st : {build_state(FockSpec{4}), build_state(ThermalSpec{2.0}),
                           build_state(EvenMixtureSpec{3})}) {
        for (double r : {0.5, 1.7}) {
            const complexd ref = char_at(st, complexd(r, 0.0));
            double var = 0.0;
            for (int j = 1; j < 8; ++j) {
                const complexd v = char_at(st, std::polar(r, 2.0 * kPi * j / 8.0));
                var = std::max(var, std::norm(v - ref));
            }
            CHECK(var < 1e-24);
        }
    }
}

TEST_CASE("char_at: matrix route reproduces every closed form") {
    for (const auto& st : analytic_family_samples()) {
        auto mat = st.fock_matrix(st.default_cutoff());
        const State mst = build_state(FockMatrixSpec{mat});
        for (complexd xi : {complexd(0.45, 0.0), complexd(-0.8, 0.55), complexd(0.2, -1.4)}) {
            const complexd closed = char_at(st, xi);
            const complexd viamat = char_at(mst, xi);
            CHECK(std::abs(closed - viamat) < 2e-8);
        }
    }
}

TEST_CASE("char_at: matrix route with rotated squeezed state") {
    // exercises the phase rotation in the Gaussian-to-Fock construction
    const State st = build_state(SqueezedThermalSpec{1.4, 0.6, 0.9});
    auto mat = st.fock_matrix(st.default_cutoff());
    const State mst = build_state(FockMatrixSpec{mat});
    for (complexd xi : {complexd(0.9, 0.1), complexd(-0.3, 0.8)}) {
        CHECK(std::abs(char_at(st, xi) - char_at(mst, xi)) < 1e-9);
    }
}

TEST_CASE("radial moments: fock(5) pure-state values") {
    const State st = build_state(FockSpec{5});
    const RadialMoments m = radial_moments(st);
    CHECK(m.i0 == doctest::Approx(kPi).epsilon(1e-9));           // purity 1
    CHECK(m.i1 / m.i0 == doctest::Approx(11.0).epsilon(1e-9));   // C^2 = 2n+1
    const double kappa = m.i2 * m.i0 / (m.i1 * m.i1) - 1.0;
    CHECK(kappa == doctest::Approx(61.0 / 121.0).epsilon(1e-9));
}

TEST_CASE("radial moments: thermal norm integral") {
    for (double nbar : {0.5, 5.0}) {
        const State st = build_state(ThermalSpec{nbar});
        const RadialMoments m = radial_moments(st);
        CHECK(m.i0 == doctest::Approx(kPi / (1.0 + 2.0 * nbar)).epsilon(1e-10));
        CHECK(m.i1 / m.i0 == doctest::Approx(1.0 / (1.0 + 2.0 * nbar)).epsilon(1e-10));
        const double kappa = m.i2 * m.i0 / (m.i1 * m.i1) - 1.0;
        CHECK(kappa == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("radial moments: even mixture against Laguerre integral identities") {
    // With f = (1/M) sum_{k=1..M} L_{2k} and the weights e^{-x}, x e^{-x},
    // x^2 e^{-x}:  I0 = pi/M, I1 = pi (2M+3)/M,
    // I2 = pi [sum_k (24k^2+12k+2) + 2 sum_{k<M} (2k+1)(2k+2)] / M^2.
    const State st = build_state(EvenMixtureSpec{4});
    const RadialMoments m = radial_moments(st);
    CHECK(m.i0 == doctest::Approx(kPi / 4.0).epsilon(1e-10));
    CHECK(m.i1 / m.i0 == doctest::Approx(11.0).epsilon(1e-9));
    const double kappa = m.i2 * m.i0 / (m.i1 * m.i1) - 1.0;
    CHECK(kappa == doctest::Approx(1044.0 / 484.0 - 1.0).epsilon(1e-9));
}

TEST_CASE("radial moments: coherent state is QCS-minimal") {
    const State st = build_state(CoherentSpec{complexd(1.3, -0.2)});
    const RadialMoments m = radial_moments(st);
    CHECK(m.i0 == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(m.i1 / m.i0 == doctest::Approx(1.0).epsilon(1e-10));
    const double kappa = m.i2 * m.i0 / (m.i1 * m.i1) - 1.0;
    CHECK(kappa == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("radial moments: purity identity against fock matrices") {
    const double r = 0.5 * std::acosh(19.8);
    const std::vector<State> states = {
        build_state(FockSpec{5}),     build_state(ThermalSpec{5.0}),
        build_state(EvenMixtureSpec{4}), build_state(CatSpec{2.2361}),
        build_state(SqueezedThermalSpec{1.8, r, 0.0}),
    };
    for (const auto& st : states) {
        const RadialMoments m = radial_moments(st);
        const double p_matrix = st.fock_matrix(st.default_cutoff())->purity();
        CHECK(m.i0 / kPi == doctest::Approx(p_matrix).epsilon(1e-7));
    }
}

TEST_CASE("radial moments: cauchy-schwarz and jensen") {
    for (const auto& st : analytic_family_samples()) {
        const RadialMoments m = radial_moments(st);
        CHECK(m.i0 > 0.0);
        CHECK(m.i1 * m.i1 <= m.i0 * m.i2 * (1.0 + 1e-12));
    }
}

TEST_CASE("radial moments: squeezed thermal matches half trace of V inverse") {
    const double r = 0.5 * std::acosh(19.8);
    const State st = build_state(SqueezedThermalSpec{1.8, r, 0.0});
    const RadialMoments m = radial_moments(st, MomentOptions{1e-10, false});
    CHECK(m.i1 / m.i0 == doctest::Approx(11.0).epsilon(1e-8));
    CHECK(m.i0 / kPi == doctest::Approx(1.0 / 1.8).epsilon(1e-8));
    // kappa_G = 2 - det V / (sigma_x^2 + sigma_p^2)^2 = 2 - 3.24/35.64^2
    const double kappa = m.i2 * m.i0 / (m.i1 * m.i1) - 1.0;
    CHECK(kappa == doctest::Approx(2.0 - 3.24 / (35.64 * 35.64)).epsilon(1e-8));
}

TEST_CASE("radial moments: rotated gaussian equals diagonal gaussian") {
    GaussianMoments diag;
    diag.V << 0.9, 0.0, 0.0, 2.1;
    GaussianMoments rot;
    const Eigen::Matrix2d q = rotation2(0.6);
    rot.V = q * diag.V * q.transpose();
    const RadialMoments a = radial_moments(build_state(GaussianSpec{diag}));
    const RadialMoments b = radial_moments(build_state(GaussianSpec{rot}));
    CHECK(a.i0 == doctest::Approx(b.i0).epsilon(1e-9));
    CHECK(a.i1 == doctest::Approx(b.i1).epsilon(1e-9));
    CHECK(a.i2 == doctest::Approx(b.i2).epsilon(1e-9));
}

TEST_CASE("radial moments: displacement leaves moments unchanged") {
    GaussianMoments centered;
    centered.V << 1.7, 0.2, 0.2, 1.1;
    GaussianMoments displaced = centered;
    displaced.mean << 1.4, -0.6;
    const RadialMoments a = radial_moments(build_state(GaussianSpec{centered}));
    const RadialMoments b = radial_moments(build_state(GaussianSpec{displaced}));
    CHECK(a.i1 / a.i0 == doctest::Approx(b.i1 / b.i0).epsilon(1e-10));
}

TEST_CASE("radial moments: relaxation toward the channel fixed point") {
    const ChannelParams ch{1.0, 1.0, 0.0};
    for (const auto& st : {build_state(FockSpec{5}), build_state(EvenMixtureSpec{4})}) {
        const RadialMoments m = radial_moments_at(st, ch, 8.0);
        CHECK(m.i1 / m.i0 == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
    }
}

TEST_CASE("radial moments: diagnostic weight differs only at t > 0") {
    const State st = build_state(FockSpec{5});
    const ChannelParams ch{1.0, 1.0, 0.0};
    MomentOptions diag;
    diag.reduced_i1_weight = true;

    const RadialMoments a0 = radial_moments_at(st, ch, 0.0);
    const RadialMoments b0 = radial_moments_at(st, ch, 0.0, diag);
    CHECK(a0.i1 == doctest::Approx(b0.i1).epsilon(1e-12));

    const RadialMoments a = radial_moments_at(st, ch, 0.05);
    const RadialMoments b = radial_moments_at(st, ch, 0.05, diag);
    CHECK(b.i1 > a.i1 * 1.05);  // weaker damping factor inflates I1
}

TEST_CASE("radial moments: matrix state matches analytic state under the channel") {
    const State cat = build_state(CatSpec{2.2361});
    const State catm = build_state(FockMatrixSpec{cat.fock_matrix(cat.default_cutoff())});
    const ChannelParams ch{1.0, 1.0, 0.0};
    for (double t : {0.0, 0.04}) {
        const RadialMoments a = radial_moments_at(cat, ch, t);
        const RadialMoments b = radial_moments_at(catm, ch, t);
        CHECK(a.i0 == doctest::Approx(b.i0).epsilon(1e-7));
        CHECK(a.i1 == doctest::Approx(b.i1).epsilon(1e-7));
        CHECK(a.i2 == doctest::Approx(b.i2).epsilon(1e-7));
    }
}
