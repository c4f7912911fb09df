#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "qcs/errors.hpp"

namespace qcs {

using complexd = std::complex<double>;

inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-10;
// det V >= 1 is physicality; allow this much slack for roundoff at the
// pure-Gaussian boundary det V = 1.
inline constexpr double kGaussDetTol = 1e-9;

/// Centered second moments plus mean of a Gaussian state.
/// Convention: V(0,0) = 2 Tr[rho X^2] - 2<X>^2, V(0,1) = Tr[rho (XP+PX)] - 2<X><P>,
/// so the vacuum has V = identity and physical states satisfy det V >= 1.
struct GaussianMoments {
    Eigen::Matrix2d V = Eigen::Matrix2d::Identity();
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();

    void validate() const;  // throws InvalidSpec / Unphysical
    double det() const { return V.determinant(); }
    double purity() const { return 1.0 / std::sqrt(det()); }
};

/// Rotation matrix [[cos, -sin], [sin, cos]].
Eigen::Matrix2d rotation2(double theta);

/// Hermitian, positive-semidefinite, number-basis density matrix with an
/// explicit truncation deficit (mass of the exact state above the cutoff).
class FockDensityMatrix {
public:
    /// Validates and stores.  The matrix must be Hermitian to within 1e-12
    /// (then it is exactly hermitized), have trace within kTraceTol of
    /// (1 - trace_deficit), and eigenvalues >= -kPsdTol.
    explicit FockDensityMatrix(Eigen::MatrixXcd rho, double trace_deficit = 0.0);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }
    complexd entry(int m, int n) const { return rho_(m, n); }
    double trace_deficit() const { return trace_deficit_; }

    double purity() const;       // Tr rho^2
    double mean_photon() const;  // sum n rho_nn
    bool is_diagonal(double tol = 0.0) const;

private:
    Eigen::MatrixXcd rho_;
    double trace_deficit_ = 0.0;
};

struct FockSpec {
    int n = 0;
};
struct CoherentSpec {
    complexd alpha;
};
struct CatSpec {
    complexd alpha;  // |psi> = (|alpha> + |-alpha>)/sqrt(2(1+e^{-2|alpha|^2}))
};
struct ThermalSpec {
    double nbar = 0.0;
};
struct EvenMixtureSpec {
    int m = 1;  // uniform mixture of |2>, |4>, ..., |2m>
};
struct SqueezedThermalSpec {
    double beta = 1.0;  // V = beta R(phi/2) diag(e^{-2r}, e^{2r}) R(phi/2)^T
    double r = 0.0;
    double phi = 0.0;
};
struct GaussianSpec {
    GaussianMoments moments;
};
struct FockMatrixSpec {
    std::shared_ptr<const FockDensityMatrix> matrix;
};

using StateSpec = std::variant<FockSpec, CoherentSpec, CatSpec, ThermalSpec,
                               EvenMixtureSpec, SqueezedThermalSpec, GaussianSpec,
                               FockMatrixSpec>;

enum class Family {
    fock,
    coherent,
    cat,
    thermal,
    even_mixture,
    squeezed_thermal,
    gaussian,
    fock_matrix,
};

Family family_of(const StateSpec& spec);
std::string family_name(Family family);

/// Immutable state handle.  All member functions are const and thread-safe;
/// Fock-matrix conversions are cached per cutoff.
class State {
public:
    const StateSpec& spec() const { return *spec_; }
    Family family() const;

    double mean_photon_number() const;
    bool rotation_invariant() const;
    /// Purity from the family closed form where one exists (all families
    /// except fock_matrix use one; fock_matrix sums |rho_mn|^2).
    double purity() const;

    /// Moments when the state is Gaussian (coherent, thermal,
    /// squeezed_thermal, gaussian); nullopt otherwise.
    std::optional<GaussianMoments> gaussian_moments() const;

    /// Cutoff heuristic: ceil(8 (n_eff + 1) + 10), raised for families with
    /// slow geometric number-tails (thermal q^n, squeezed states).
    int default_cutoff() const;

    std::shared_ptr<const FockDensityMatrix> fock_matrix(int cutoff,
                                                         double max_deficit = 1e-6) const;
    std::shared_ptr<const FockDensityMatrix> fock_matrix() const;

private:
    friend State build_state(const StateSpec&);
    explicit State(StateSpec spec);

    std::shared_ptr<const StateSpec> spec_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Validates the spec and returns the handle.
State build_state(const StateSpec& spec);

/// Truncated number-basis matrix; entries are the exact untruncated ones
/// (no renormalization) and the lost tail is reported as the trace deficit.
/// Throws CutoffTooSmall when the deficit exceeds max_deficit.
FockDensityMatrix to_fock_matrix(const State& state, int cutoff,
                                 double max_deficit = 1e-6);

double mean_photon_number(const State& state);

/// |alpha| of the even cat state with QCS c0: solves 1 + 2a tanh(a) = c0^2
/// for a = |alpha|^2.
double cat_alpha_for_qcs(double c0);

/// Number-basis quadrature matrices, dim x dim.
/// X = (a^dag + a)/sqrt(2): <n+1|X|n> = sqrt((n+1)/2).
/// P = i(a^dag - a)/sqrt(2): <n+1|P|n> = i sqrt((n+1)/2).
Eigen::MatrixXcd position_operator(int dim);
Eigen::MatrixXcd momentum_operator(int dim);

}  // namespace qcs
