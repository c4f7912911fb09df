#include "doctest.h"

#include <cmath>

#include "qcs/states.hpp"

using namespace qcs;

TEST_CASE("build_state: domain validation") {
    CHECK_THROWS_AS(build_state(FockSpec{-1}), InvalidSpec);
    CHECK_THROWS_AS(build_state(ThermalSpec{-0.5}), InvalidSpec);
    CHECK_THROWS_AS(build_state(EvenMixtureSpec{0}), InvalidSpec);
    CHECK_THROWS_AS(build_state(SqueezedThermalSpec{-1.0, 0.5, 0.0}), InvalidSpec);
    // beta < 1 means det V < 1
    CHECK_THROWS_AS(build_state(SqueezedThermalSpec{0.9, 0.5, 0.0}), Unphysical);
    CHECK_NOTHROW(build_state(SqueezedThermalSpec{1.0, 1.2, 0.3}));
}

TEST_CASE("gaussian physicality gate") {
    GaussianMoments m;
    m.V << 0.8, 0.0, 0.0, 1.0;  // det < 1
    CHECK_THROWS_AS(build_state(GaussianSpec{m}), Unphysical);

    m.V << 0.5, 0.0, 0.0, 2.0;  // det exactly 1, pure squeezed
    CHECK_NOTHROW(build_state(GaussianSpec{m}));

    m.V << 1.0, 2.0, 2.0, 1.0;  // indefinite
    CHECK_THROWS_AS(build_state(GaussianSpec{m}), Unphysical);

    m.V << 1.0, 0.1, 0.2, 1.0;  // not symmetric
    CHECK_THROWS_AS(build_state(GaussianSpec{m}), InvalidSpec);
}

TEST_CASE("vacuum equivalences") {
    const State g = build_state(GaussianSpec{GaussianMoments{}});
    CHECK(g.purity() == doctest::Approx(1.0));
    CHECK(g.mean_photon_number() == doctest::Approx(0.0));

    const State f0 = build_state(FockSpec{0});
    auto m = f0.fock_matrix(1);
    CHECK(m->dim() == 1);
    CHECK(m->entry(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("to_fock_matrix: thermal populations") {
    const State st = build_state(ThermalSpec{5.0});
    const FockDensityMatrix m = to_fock_matrix(st, 80);
    const double q = 5.0 / 6.0;
    for (int n = 0; n < 80; n += 7) {
        CHECK(m.entry(n, n).real() ==
              doctest::Approx((1.0 - q) * std::pow(q, n)).epsilon(1e-13));
    }
    CHECK(m.trace_deficit() == doctest::Approx(std::pow(q, 80)).epsilon(1e-12));
}

TEST_CASE("to_fock_matrix: even mixture comb") {
    const State st = build_state(EvenMixtureSpec{4});
    const FockDensityMatrix m = to_fock_matrix(st, 16);
    for (int n = 0; n < 16; ++n) {
        const double expected = (n >= 2 && n <= 8 && n % 2 == 0) ? 0.25 : 0.0;
        CHECK(m.entry(n, n).real() == doctest::Approx(expected));
    }
    CHECK(m.trace_deficit() == 0.0);
    CHECK_THROWS_AS(to_fock_matrix(st, 6), CutoffTooSmall);
}

TEST_CASE("to_fock_matrix: cat purity is one") {
    const State st = build_state(CatSpec{std::sqrt(5.0)});
    const FockDensityMatrix m = to_fock_matrix(st, 60);
    CHECK(m.purity() == doctest::Approx(1.0).epsilon(1e-8));
    // odd coefficients vanish
    CHECK(std::abs(m.entry(3, 3)) == 0.0);
    CHECK(std::abs(m.entry(4, 5)) == 0.0);
}

TEST_CASE("mean photon number") {
    CHECK(build_state(ThermalSpec{5.0}).mean_photon_number() == doctest::Approx(5.0));
    CHECK(build_state(FockSpec{5}).mean_photon_number() == doctest::Approx(5.0));
    CHECK(build_state(EvenMixtureSpec{4}).mean_photon_number() == doctest::Approx(5.0));
    CHECK(build_state(CoherentSpec{complexd(1.3, -0.2)}).mean_photon_number() ==
          doctest::Approx(1.69 + 0.04));

    // figure-2 squeezed thermal: (Tr V - 2)/4 with Tr V = 2 * 1.8 * 19.8
    const double r = 0.5 * std::acosh(19.8);
    const State sq = build_state(SqueezedThermalSpec{1.8, r, 0.0});
    CHECK(sq.mean_photon_number() == doctest::Approx(17.32).epsilon(1e-12));
    // number-basis trace agrees after conversion
    auto m = sq.fock_matrix(sq.default_cutoff());
    CHECK(m->mean_photon() == doctest::Approx(17.32).epsilon(1e-7));
}

TEST_CASE("fock matrix conversion: cutoff sweep converges monotonically") {
    const double r = 0.5 * std::acosh(19.8);
    const std::vector<State> states = {
        build_state(ThermalSpec{5.0}),
        build_state(CatSpec{2.236}),
        build_state(CoherentSpec{complexd(1.1, 0.7)}),
        build_state(SqueezedThermalSpec{1.8, r, 0.0}),
    };
    for (const auto& st : states) {
        double prev = 1.0;
        const int n0 = st.default_cutoff();
        for (double scale : {0.5, 0.75, 1.0, 1.3}) {
            const int cutoff = static_cast<int>(n0 * scale);
            const double deficit = to_fock_matrix(st, cutoff, 1.0).trace_deficit();
            CHECK(deficit <= prev + 1e-15);
            prev = deficit;
        }
        CHECK(prev < 1e-10);  // converged within the sweep
    }
}

TEST_CASE("purity from matrix matches family closed form") {
    const double r = 0.5 * std::acosh(19.8);
    const std::vector<std::pair<State, double>> cases = {
        {build_state(ThermalSpec{5.0}), 1.0 / 11.0},
        {build_state(EvenMixtureSpec{4}), 0.25},
        {build_state(SqueezedThermalSpec{1.8, r, 0.0}), 1.0 / 1.8},
        {build_state(CoherentSpec{complexd(0.9, 0.4)}), 1.0},
    };
    for (const auto& [st, p] : cases) {
        auto m = st.fock_matrix(st.default_cutoff());
        CHECK(m->purity() == doctest::Approx(p).epsilon(1e-8));
        CHECK(st.purity() == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("fock matrix type: validation") {
    Eigen::MatrixXcd good = Eigen::MatrixXcd::Zero(3, 3);
    good(0, 0) = 0.5;
    good(1, 1) = 0.5;
    good(0, 1) = complexd(0.1, 0.2);
    good(1, 0) = complexd(0.1, -0.2);
    CHECK_NOTHROW((FockDensityMatrix{good}));

    Eigen::MatrixXcd asym = good;
    asym(1, 0) = complexd(0.3, 0.0);
    CHECK_THROWS_AS((FockDensityMatrix{asym}), InvalidSpec);

    Eigen::MatrixXcd off_trace = good;
    off_trace(2, 2) = 0.1;
    CHECK_THROWS_AS((FockDensityMatrix{off_trace}), Unphysical);

    // Hermitian, unit trace, but indefinite
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = 0.2;
    neg(1, 1) = 0.8;
    neg(0, 1) = neg(1, 0) = 0.6;
    CHECK_THROWS_AS((FockDensityMatrix{neg}), Unphysical);
}

TEST_CASE("cat amplitude root solve") {
    const double alpha = cat_alpha_for_qcs(std::sqrt(11.0));
    const double a = alpha * alpha;
    CHECK(1.0 + 2.0 * a * std::tanh(a) == doctest::Approx(11.0).epsilon(1e-12));
    CHECK(alpha == doctest::Approx(2.236).epsilon(1e-3));  // the quoted ~2.24
    CHECK_THROWS_AS(cat_alpha_for_qcs(0.5), InvalidSpec);
}

TEST_CASE("quadrature operators: canonical commutator") {
    const int dim = 40;
    const Eigen::MatrixXcd x = position_operator(dim);
    const Eigen::MatrixXcd p = momentum_operator(dim);
    const Eigen::MatrixXcd comm = x * p - p * x;
    for (int n = 0; n < dim - 1; ++n) {
        for (int m = 0; m < dim - 1; ++m) {
            const complexd expected = (m == n) ? complexd(0.0, 1.0) : complexd(0.0, 0.0);
            CHECK(std::abs(comm(m, n) - expected) < 1e-13);
        }
    }
}

TEST_CASE("rotation invariance flags") {
    CHECK(build_state(FockSpec{3}).rotation_invariant());
    CHECK(build_state(ThermalSpec{2.0}).rotation_invariant());
    CHECK(build_state(EvenMixtureSpec{2}).rotation_invariant());
    CHECK_FALSE(build_state(CatSpec{1.5}).rotation_invariant());
    CHECK_FALSE(build_state(CoherentSpec{complexd(0.5, 0.0)}).rotation_invariant());
    CHECK(build_state(CoherentSpec{complexd(0.0, 0.0)}).rotation_invariant());
    CHECK_FALSE(build_state(SqueezedThermalSpec{1.5, 0.7, 0.0}).rotation_invariant());
}
