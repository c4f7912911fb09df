#include "qcs/states.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "qcs/special_functions.hpp"

namespace qcs {

namespace {

bool finite(double x) { return std::isfinite(x); }
bool finite(complexd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Eigen::VectorXcd coherent_vector(complexd alpha, int dim) {
    Eigen::VectorXcd c(dim);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < dim; ++n) {
        c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return c;
}

/// First j_cols columns of S = exp((r/2)(a^2 - a^dag^2)) on the truncated
/// space (exactly unitary there).  The generator splits into two parity
/// blocks, each tridiagonal; the gauge diag(i^k) turns i*A into a real
/// symmetric tridiagonal matrix, so each block costs O(dim^2).
Eigen::MatrixXcd squeeze_columns(double r, int dim, int j_cols) {
    Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(dim, j_cols);
    static const complexd kI4[4] = {complexd(1, 0), complexd(0, 1), complexd(-1, 0),
                                    complexd(0, -1)};
    for (int parity = 0; parity < 2; ++parity) {
        const int nb = (dim - parity + 1) / 2;  // rows parity, parity+2, ...
        if (nb == 0) continue;
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(nb);
        Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max(nb - 1, 0));
        for (int k = 0; k + 1 < nb; ++k) {
            const int n = parity + 2 * k;
            sub(k) = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const Eigen::MatrixXd& q = es.eigenvectors();
        Eigen::VectorXcd phases(nb);
        for (int k = 0; k < nb; ++k) phases(k) = std::exp(complexd(0.0, -es.eigenvalues()(k)));

        for (int j = parity; j < j_cols; j += 2) {
            const int kj = (j - parity) / 2;
            if (kj >= nb) break;
            // column of exp(-iH) = U^dag Q e^{-i Lambda} Q^T U, U = diag(i^k)
            const Eigen::VectorXcd w = q * (phases.array() * q.row(kj).transpose().array().cast<complexd>()).matrix();
            for (int k = 0; k < nb; ++k) {
                const int row = parity + 2 * k;
                cols(row, j) = kI4[((kj - k) % 4 + 4) % 4] * w(k);
            }
        }
    }
    return cols;
}

Eigen::MatrixXcd displacement_matrix(complexd alpha, int dim) {
    const double x = std::norm(alpha);
    const double phi = std::arg(alpha);
    Eigen::MatrixXcd d(dim, dim);
    std::vector<double> t(dim);
    for (int k = 0; k < dim; ++k) {
        std::span<double> tk(t.data(), dim - k);
        displacement_radial(k, x, tk);
        const complexd up = std::polar(1.0, k * phi);
        const complexd down = std::polar(1.0, -k * phi) * ((k % 2 == 0) ? 1.0 : -1.0);
        for (int j = 0; j + k < dim; ++j) {
            d(j + k, j) = up * tk[j];
            if (k > 0) d(j, j + k) = down * tk[j];
        }
    }
    return d;
}

/// Geometric per-photon decay rate of the number-tail of a Gaussian state
/// with covariance eigenvalues v1, v2.  Mixed states decay as
/// p_{n+2}/p_n -> sqrt(|(v1-1)(v2-1)| / ((v1+1)(v2+1))), i.e. at half the
/// pure-state rate; use the slower one so the estimate is always safe.
double gaussian_tail_rate(double v1, double v2) {
    const double ratio = std::abs((v1 - 1.0) * (v2 - 1.0) / ((v1 + 1.0) * (v2 + 1.0)));
    if (ratio <= 0.0) return 40.0;  // pure coherent/vacuum: no geometric tail
    return -0.25 * std::log(ratio);
}

struct GaussianCanonical {
    double beta;   // sqrt(det V)
    double r;      // squeeze parameter, >= 0
    double theta;  // V = R(theta) diag(beta e^{-2r}, beta e^{2r}) R(theta)^T
};

GaussianCanonical canonical_form(const Eigen::Matrix2d& v) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(v);
    const double v1 = es.eigenvalues()(0);  // ascending
    const double v2 = es.eigenvalues()(1);
    Eigen::Matrix2d q = es.eigenvectors();
    if (q.determinant() < 0) q.col(1) *= -1.0;
    GaussianCanonical c;
    c.beta = std::sqrt(v1 * v2);
    c.r = 0.25 * std::log(v2 / v1);
    c.theta = std::atan2(q(1, 0), q(0, 0));
    return c;
}

}  // namespace

Eigen::Matrix2d rotation2(double theta) {
    Eigen::Matrix2d r;
    const double c = std::cos(theta), s = std::sin(theta);
    r << c, -s, s, c;
    return r;
}

void GaussianMoments::validate() const {
    if (!V.allFinite() || !mean.allFinite()) {
        throw InvalidSpec("gaussian moments: non-finite entries");
    }
    const double scale = V.cwiseAbs().maxCoeff();
    if (std::abs(V(0, 1) - V(1, 0)) > 1e-12 * std::max(1.0, scale)) {
        throw InvalidSpec("gaussian moments: covariance not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(V);
    if (es.eigenvalues()(0) <= 0.0) {
        throw Unphysical("gaussian moments: covariance not positive definite");
    }
    if (det() < 1.0 - kGaussDetTol) {
        throw Unphysical("gaussian moments: det V < 1");
    }
}

FockDensityMatrix::FockDensityMatrix(Eigen::MatrixXcd rho, double trace_deficit)
    : rho_(std::move(rho)), trace_deficit_(trace_deficit) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
        throw InvalidSpec("fock matrix: must be square and non-empty");
    }
    if (!rho_.allFinite()) throw InvalidSpec("fock matrix: non-finite entries");

    const double scale = std::max(1.0, rho_.cwiseAbs().maxCoeff());
    const double asym = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        throw InvalidSpec("fock matrix: not Hermitian");
    }
    rho_ = (0.5 * (rho_ + rho_.adjoint().eval())).eval();

    const complexd tr = rho_.trace();
    if (std::abs(tr - complexd(1.0 - trace_deficit_, 0.0)) > kTraceTol) {
        throw Unphysical("fock matrix: trace off unity beyond tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -kPsdTol) {
        throw Unphysical("fock matrix: negative eigenvalue");
    }
}

double FockDensityMatrix::purity() const { return rho_.squaredNorm(); }

double FockDensityMatrix::mean_photon() const {
    double s = 0.0;
    for (int n = 0; n < dim(); ++n) s += n * rho_(n, n).real();
    return s;
}

bool FockDensityMatrix::is_diagonal(double tol) const {
    for (int m = 0; m < dim(); ++m) {
        for (int n = 0; n < dim(); ++n) {
            if (m != n && std::abs(rho_(m, n)) > tol) return false;
        }
    }
    return true;
}

Family family_of(const StateSpec& spec) {
    return std::visit(
        [](const auto& s) -> Family {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockSpec>) return Family::fock;
            else if constexpr (std::is_same_v<T, CoherentSpec>) return Family::coherent;
            else if constexpr (std::is_same_v<T, CatSpec>) return Family::cat;
            else if constexpr (std::is_same_v<T, ThermalSpec>) return Family::thermal;
            else if constexpr (std::is_same_v<T, EvenMixtureSpec>) return Family::even_mixture;
            else if constexpr (std::is_same_v<T, SqueezedThermalSpec>)
                return Family::squeezed_thermal;
            else if constexpr (std::is_same_v<T, GaussianSpec>) return Family::gaussian;
            else return Family::fock_matrix;
        },
        spec);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::fock: return "fock";
        case Family::coherent: return "coherent";
        case Family::cat: return "cat";
        case Family::thermal: return "thermal";
        case Family::even_mixture: return "even_mixture";
        case Family::squeezed_thermal: return "squeezed_thermal";
        case Family::gaussian: return "gaussian";
        case Family::fock_matrix: return "fock_matrix";
    }
    return "?";
}

struct State::Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const FockDensityMatrix>> by_cutoff;
};

State::State(StateSpec spec)
    : spec_(std::make_shared<const StateSpec>(std::move(spec))),
      cache_(std::make_shared<Cache>()) {}

Family State::family() const { return family_of(*spec_); }

double State::mean_photon_number() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockSpec>) {
                return s.n;
            } else if constexpr (std::is_same_v<T, CoherentSpec>) {
                return std::norm(s.alpha);
            } else if constexpr (std::is_same_v<T, CatSpec>) {
                const double a = std::norm(s.alpha);
                return a * std::tanh(a);
            } else if constexpr (std::is_same_v<T, ThermalSpec>) {
                return s.nbar;
            } else if constexpr (std::is_same_v<T, EvenMixtureSpec>) {
                return s.m + 1.0;  // (1/M) sum 2k = M+1
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec>) {
                return (s.beta * std::cosh(2.0 * s.r) - 1.0) / 2.0;
            } else if constexpr (std::is_same_v<T, GaussianSpec>) {
                return (s.moments.V.trace() - 2.0) / 4.0 + 0.5 * s.moments.mean.squaredNorm();
            } else {
                return s.matrix->mean_photon();
            }
        },
        *spec_);
}

bool State::rotation_invariant() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockSpec> || std::is_same_v<T, ThermalSpec> ||
                          std::is_same_v<T, EvenMixtureSpec>) {
                return true;
            } else if constexpr (std::is_same_v<T, CoherentSpec> ||
                                 std::is_same_v<T, CatSpec>) {
                return s.alpha == complexd(0.0, 0.0);
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec>) {
                return s.r == 0.0;
            } else if constexpr (std::is_same_v<T, GaussianSpec>) {
                const auto& m = s.moments;
                const double scale = std::max(1.0, m.V.cwiseAbs().maxCoeff());
                return m.mean.isZero(0.0) &&
                       std::abs(m.V(0, 1)) <= 1e-14 * scale &&
                       std::abs(m.V(0, 0) - m.V(1, 1)) <= 1e-14 * scale;
            } else {
                return s.matrix->is_diagonal(0.0);
            }
        },
        *spec_);
}

double State::purity() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockSpec> || std::is_same_v<T, CoherentSpec> ||
                          std::is_same_v<T, CatSpec>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, ThermalSpec>) {
                return 1.0 / (1.0 + 2.0 * s.nbar);
            } else if constexpr (std::is_same_v<T, EvenMixtureSpec>) {
                return 1.0 / s.m;
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec>) {
                return 1.0 / s.beta;
            } else if constexpr (std::is_same_v<T, GaussianSpec>) {
                return s.moments.purity();
            } else {
                return s.matrix->purity();
            }
        },
        *spec_);
}

std::optional<GaussianMoments> State::gaussian_moments() const {
    return std::visit(
        [](const auto& s) -> std::optional<GaussianMoments> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentSpec>) {
                GaussianMoments m;
                m.V = Eigen::Matrix2d::Identity();
                m.mean << std::sqrt(2.0) * s.alpha.real(), std::sqrt(2.0) * s.alpha.imag();
                return m;
            } else if constexpr (std::is_same_v<T, ThermalSpec>) {
                GaussianMoments m;
                m.V = (1.0 + 2.0 * s.nbar) * Eigen::Matrix2d::Identity();
                return m;
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec>) {
                GaussianMoments m;
                Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
                d(0, 0) = s.beta * std::exp(-2.0 * s.r);
                d(1, 1) = s.beta * std::exp(2.0 * s.r);
                const Eigen::Matrix2d rot = rotation2(0.5 * s.phi);
                m.V = rot * d * rot.transpose();
                return m;
            } else if constexpr (std::is_same_v<T, GaussianSpec>) {
                return s.moments;
            } else {
                return std::nullopt;
            }
        },
        *spec_);
}

int State::default_cutoff() const {
    const double n_eff = mean_photon_number();
    int base = static_cast<int>(std::ceil(8.0 * (n_eff + 1.0) + 10.0));
    return std::visit(
        [&](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, EvenMixtureSpec>) {
                return std::max(base, 2 * s.m + 3);
            } else if constexpr (std::is_same_v<T, ThermalSpec>) {
                if (s.nbar <= 0.0) return base;
                // deficit q^N; push it to ~1e-11
                const double lam = std::log((1.0 + s.nbar) / s.nbar);
                return std::max(base, static_cast<int>(std::ceil(26.0 / lam)) + 12);
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec> ||
                                 std::is_same_v<T, GaussianSpec>) {
                const GaussianMoments m = *gaussian_moments();
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m.V);
                const double lam = gaussian_tail_rate(es.eigenvalues()(0), es.eigenvalues()(1));
                const int tail = static_cast<int>(std::ceil(21.0 / lam)) + 16;
                const int disp = static_cast<int>(std::ceil(4.0 * m.mean.squaredNorm()));
                return std::max(base, tail + disp);
            } else if constexpr (std::is_same_v<T, FockMatrixSpec>) {
                return s.matrix->dim();
            } else {
                return base;
            }
        },
        *spec_);
}

std::shared_ptr<const FockDensityMatrix> State::fock_matrix(int cutoff,
                                                            double max_deficit) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_cutoff.find(cutoff);
        if (it != cache_->by_cutoff.end()) {
            if (it->second->trace_deficit() > max_deficit) {
                throw CutoffTooSmall("fock matrix: trace deficit above tolerance");
            }
            return it->second;
        }
    }
    auto mat = std::make_shared<const FockDensityMatrix>(
        to_fock_matrix(*this, cutoff, max_deficit));
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->by_cutoff.try_emplace(cutoff, std::move(mat)).first->second;
}

std::shared_ptr<const FockDensityMatrix> State::fock_matrix() const {
    return fock_matrix(default_cutoff());
}

State build_state(const StateSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockSpec>) {
                if (s.n < 0) throw InvalidSpec("fock: n must be >= 0");
            } else if constexpr (std::is_same_v<T, CoherentSpec> ||
                                 std::is_same_v<T, CatSpec>) {
                if (!finite(s.alpha)) throw InvalidSpec("alpha must be finite");
            } else if constexpr (std::is_same_v<T, ThermalSpec>) {
                if (!finite(s.nbar) || s.nbar < 0.0)
                    throw InvalidSpec("thermal: nbar must be >= 0");
            } else if constexpr (std::is_same_v<T, EvenMixtureSpec>) {
                if (s.m < 1) throw InvalidSpec("even_mixture: M must be >= 1");
            } else if constexpr (std::is_same_v<T, SqueezedThermalSpec>) {
                if (!finite(s.beta) || !finite(s.r) || !finite(s.phi) || s.beta <= 0.0)
                    throw InvalidSpec("squeezed_thermal: beta must be positive");
                if (s.beta < 1.0 - kGaussDetTol)
                    throw Unphysical("squeezed_thermal: det V = beta^2 < 1");
            } else if constexpr (std::is_same_v<T, GaussianSpec>) {
                s.moments.validate();
            } else {
                if (!s.matrix) throw InvalidSpec("fock_matrix: missing matrix");
            }
        },
        spec);
    return State(spec);
}

namespace {

FockDensityMatrix gaussian_to_fock(const GaussianMoments& moments, int cutoff) {
    const GaussianCanonical canon = canonical_form(moments.V);
    const double nbar_th = std::max(0.0, (canon.beta - 1.0) / 2.0);
    const double q = nbar_th / (1.0 + nbar_th);

    const bool displaced = !moments.mean.isZero(0.0);
    int n_int = static_cast<int>(std::ceil(1.25 * cutoff)) + 20;

    // thermal support: drop engine states with weight below ~1e-17
    const int j_cols =
        (q > 0.0) ? std::min(n_int, static_cast<int>(std::ceil(40.0 / std::log(1.0 / q))) + 4)
                  : 1;
    Eigen::VectorXd pops(j_cols);
    for (int j = 0; j < j_cols; ++j) pops(j) = (1.0 - q) * std::pow(q, j);
    const double thermal_tail = (q > 0.0) ? std::pow(q, j_cols) : 0.0;

    Eigen::MatrixXcd rho;
    if (canon.r != 0.0) {
        const Eigen::MatrixXcd s = squeeze_columns(canon.r, n_int, j_cols);
        rho = s * pops.asDiagonal() * s.adjoint();
    } else {
        Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n_int);
        d.head(j_cols) = pops.cast<complexd>();
        rho = Eigen::MatrixXcd(d.asDiagonal());
    }

    // phase rotation: rho_mn *= e^{i theta (m-n)} realizes V -> R(theta) V R(theta)^T
    if (canon.theta != 0.0) {
        Eigen::VectorXcd phases(n_int);
        for (int n = 0; n < n_int; ++n) phases(n) = std::polar(1.0, canon.theta * n);
        rho = phases.asDiagonal() * rho * phases.conjugate().asDiagonal();
    }

    if (displaced) {
        const complexd alpha0((moments.mean(0)) / std::sqrt(2.0),
                              (moments.mean(1)) / std::sqrt(2.0));
        const Eigen::MatrixXcd d = displacement_matrix(alpha0, n_int);
        rho = d * rho * d.adjoint();
    }

    double discarded = 0.0;
    for (int n = cutoff; n < n_int; ++n) discarded += rho(n, n).real();
    return FockDensityMatrix(rho.topLeftCorner(cutoff, cutoff),
                             discarded + thermal_tail);
}

}  // namespace

FockDensityMatrix to_fock_matrix(const State& state, int cutoff, double max_deficit) {
    if (cutoff < 1) throw InvalidSpec("to_fock_matrix: cutoff must be >= 1");

    auto finish = [&](Eigen::MatrixXcd rho, double deficit) {
        if (deficit > max_deficit) {
            throw CutoffTooSmall("to_fock_matrix: trace deficit " + std::to_string(deficit) +
                                 " above tolerance");
        }
        return FockDensityMatrix(std::move(rho), deficit);
    };

    const StateSpec& spec = state.spec();
    switch (state.family()) {
        case Family::fock: {
            const int n = std::get<FockSpec>(spec).n;
            if (n >= cutoff) throw CutoffTooSmall("to_fock_matrix: cutoff <= fock index");
            Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
            rho(n, n) = 1.0;
            return finish(std::move(rho), 0.0);
        }
        case Family::coherent: {
            const Eigen::VectorXcd c = coherent_vector(std::get<CoherentSpec>(spec).alpha, cutoff);
            const double kept = c.squaredNorm();
            return finish(c * c.adjoint(), 1.0 - kept);
        }
        case Family::cat: {
            const complexd alpha = std::get<CatSpec>(spec).alpha;
            const double norm2 = 2.0 * (1.0 + std::exp(-2.0 * std::norm(alpha)));
            const Eigen::VectorXcd cp = coherent_vector(alpha, cutoff);
            Eigen::VectorXcd c(cutoff);
            for (int n = 0; n < cutoff; ++n) {
                c(n) = (n % 2 == 0) ? 2.0 * cp(n) / std::sqrt(norm2) : complexd(0.0);
            }
            const double kept = c.squaredNorm();
            return finish(c * c.adjoint(), 1.0 - kept);
        }
        case Family::thermal: {
            const double nbar = std::get<ThermalSpec>(spec).nbar;
            const double q = nbar / (1.0 + nbar);
            Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
            for (int n = 0; n < cutoff; ++n) rho(n, n) = (1.0 - q) * std::pow(q, n);
            const double deficit = (nbar > 0.0) ? std::pow(q, cutoff) : 0.0;
            return finish(std::move(rho), deficit);
        }
        case Family::even_mixture: {
            const int m = std::get<EvenMixtureSpec>(spec).m;
            Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
            int present = 0;
            for (int k = 1; k <= m; ++k) {
                if (2 * k < cutoff) {
                    rho(2 * k, 2 * k) = 1.0 / m;
                    ++present;
                }
            }
            return finish(std::move(rho), static_cast<double>(m - present) / m);
        }
        case Family::squeezed_thermal:
        case Family::gaussian: {
            FockDensityMatrix mat = gaussian_to_fock(*state.gaussian_moments(), cutoff);
            if (mat.trace_deficit() > max_deficit) {
                throw CutoffTooSmall("to_fock_matrix: trace deficit above tolerance");
            }
            return mat;
        }
        case Family::fock_matrix: {
            const auto& stored = *std::get<FockMatrixSpec>(spec).matrix;
            if (cutoff == stored.dim()) return stored;
            Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
            const int keep = std::min(cutoff, stored.dim());
            rho.topLeftCorner(keep, keep) = stored.matrix().topLeftCorner(keep, keep);
            double discarded = 0.0;
            for (int n = keep; n < stored.dim(); ++n) discarded += stored.entry(n, n).real();
            return finish(std::move(rho), stored.trace_deficit() + discarded);
        }
    }
    throw Error("to_fock_matrix: unreachable");
}

double mean_photon_number(const State& state) { return state.mean_photon_number(); }

double cat_alpha_for_qcs(double c0) {
    if (!std::isfinite(c0) || c0 < 1.0) {
        throw InvalidSpec("cat_alpha_for_qcs: cat QCS is >= 1");
    }
    const double target = c0 * c0;
    if (target <= 1.0) return 0.0;
    auto f = [target](double a) { return 1.0 + 2.0 * a * std::tanh(a) - target; };
    double lo = 0.0, hi = std::max(1.0, target);
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return std::sqrt(0.5 * (lo + hi));
}

Eigen::MatrixXcd position_operator(int dim) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double v = std::sqrt((n + 1.0) / 2.0);
        x(n + 1, n) = v;
        x(n, n + 1) = v;
    }
    return x;
}

Eigen::MatrixXcd momentum_operator(int dim) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double v = std::sqrt((n + 1.0) / 2.0);
        p(n + 1, n) = complexd(0.0, v);
        p(n, n + 1) = complexd(0.0, -v);
    }
    return p;
}

}  // namespace qcs
