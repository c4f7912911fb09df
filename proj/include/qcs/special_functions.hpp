#pragma once

#include <span>
#include <vector>

namespace qcs {

/// Orthonormal Hermite functions psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
///
/// Evaluated with the three-term recurrence on psi_n itself,
///   psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1},
/// which keeps every intermediate bounded and avoids the overflow of H_n.
/// Fills out[0..out.size()-1] with psi_0(x) .. psi_{N-1}(x).
void hermite_functions(double x, std::span<double> out);

/// Laguerre polynomial L_n(x) by upward recurrence.
double laguerre(int n, double x);

/// Scaled associated-Laguerre ladder
///   t_j^{(k)}(x) = sqrt(j!/(j+k)!) x^{k/2} e^{-x/2} L_j^{(k)}(x),
/// the radial part of the displacement matrix element <j+k|D(xi)|j> at
/// x = |xi|^2.  |t_j| <= 1 for all j, k, x >= 0, so the recurrence never
/// overflows; the seed is formed in log space so large k and x are safe.
/// Fills out[j] for j = 0..out.size()-1.  Requires k >= 0, x >= 0.
void displacement_radial(int k, double x, std::span<double> out);

/// log(n!) via lgamma.
double log_factorial(int n);

}  // namespace qcs
