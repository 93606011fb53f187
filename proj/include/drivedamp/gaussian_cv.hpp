#pragma once

#include <Eigen/Dense>

#include "drivedamp/steady_state.hpp"

namespace drivedamp {

/// Two-mode quadrature covariance over (x_a, p_a, x_b, p_b) with
/// x = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2). Vacuum is I/2.
struct CovarianceMatrix {
    Eigen::Matrix4d sigma = 0.5 * Eigen::Matrix4d::Identity();
};

/// Tolerance on nu >= 1/2 for physicality checks.
inline constexpr double kPhysicalityTol = 1e-10;
/// nu_tilde_minus must be below 1/2 by this much to count as entangled.
inline constexpr double kEntanglementTol = 1e-12;

struct SymplecticSpectrum {
    double nu_plus = 0.0;
    double nu_minus = 0.0;
};

struct NegativityResult {
    double log_negativity = 0.0;        // natural log
    double log_negativity_base2 = 0.0;
    double negativity = 0.0;            // (||rho^T_B||_1 - 1) / 2
    double nu_tilde_minus = 0.0;
    bool entangled = false;
};

/// Standard symplectic form diag(J, J), J = [[0, 1], [-1, 0]].
Eigen::Matrix4d symplectic_form();

/// Covariance of a zero-mean state from its bare second moments.
/// Throws Error(unphysical_state) when the result violates sigma + i/2 Omega >= 0.
CovarianceMatrix covariance_from_moments(const BareMoments& m);

/// Moduli of the eigenvalues of Omega*sigma, sorted descending.
/// Throws Error(domain) when sigma is not symmetric to 1e-12 or not positive definite.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& cov);

/// Closed-form spectrum from the local invariants,
///   nu^2 = [Delta +- sqrt(Delta^2 - 4 det sigma)] / 2,
///   Delta = det A + det B + 2 det C  for sigma = [[A, C], [C^T, B]].
SymplecticSpectrum symplectic_eigenvalues_invariants(const CovarianceMatrix& cov);

/// Momentum sign flip on mode b: Lambda sigma Lambda, Lambda = diag(1, 1, 1, -1).
CovarianceMatrix partial_transpose(const CovarianceMatrix& cov);

bool is_physical(const CovarianceMatrix& cov, double tol = kPhysicalityTol);

/// Throws Error(unphysical_state) for an unphysical sigma.
NegativityResult log_negativity(const CovarianceMatrix& cov);

}  // namespace drivedamp
