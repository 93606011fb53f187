#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "drivedamp/steady_state.hpp"

namespace drivedamp::oracle {

/// Linear Gaussian dynamics of the normal-mode quadratures
/// (x_l, p_l, x_m, p_m) under the secular master equation:
///   d sigma / dt = drift sigma + sigma drift^T + diffusion.
struct MomentSystem {
    Eigen::Matrix4d drift;
    Eigen::Matrix4d diffusion;
    // Diffusion of the excess sigma - I/2 over the vacuum:
    //   drift X + X drift^T + excess_diffusion = 0.
    Eigen::Matrix4d excess_diffusion;

    bool hurwitz() const;
};

MomentSystem moment_system(const MasterCoefficients& mc);

/// Normal-mode second moments.
struct NormalMoments {
    double n_l = 0.0;                // <l^dag l>
    double n_m = 0.0;                // <m^dag m>
    std::complex<double> lm;         // <l m>
    std::complex<double> ldag_m;     // <l^dag m>
    std::complex<double> ll;
    std::complex<double> mm;
};

/// Solves drift X + X drift^T + q = 0 as a 16x16 linear system.
Eigen::Matrix4d solve_lyapunov(const Eigen::Matrix4d& drift, const Eigen::Matrix4d& q);

/// Steady covariance sigma, assembled as I/2 plus the solved excess.
Eigen::Matrix4d solve_lyapunov(const MomentSystem& sys);

NormalMoments normal_moments_from_covariance(const Eigen::Matrix4d& sigma_normal);

/// Moments from the excess sigma - I/2, free of cancellation against the vacuum.
NormalMoments normal_moments_from_excess(const Eigen::Matrix4d& excess);

/// Steady normal-mode moments from the Lyapunov solve.
/// Throws Error(no_steady_state) when the drift is not Hurwitz.
NormalMoments lyapunov_steady_moments(const MasterCoefficients& mc);

/// Real 4x4 map from normal-mode to bare-mode quadratures implied by
/// a = alpha l + beta m^dag, b = conj(beta) l^dag + conj(alpha) m.
Eigen::Matrix4d bogoliubov_quadrature_map(const BogoliubovTransform& bt);

/// Bare-mode moments expressed through normal-mode moments.
BareMoments bare_moments_from_normal(const BogoliubovTransform& bt, const NormalMoments& nm);

// ---------------------------------------------------------------------------
// Truncated Fock-space integration

struct FockConfig {
    int dim_per_mode = 8;
    double t_final = 1e7;
    double dt = 1e-2;                // initial step
    double convergence_tol = 1e-10;  // max |d moment / dt| at convergence
    double rel_tol = 1e-10;          // integrator local error control
    double abs_tol = 1e-13;
};

/// Density matrix of two truncated oscillators, index i * d + j for |i>|j>.
struct FockState {
    int dim = 0;
    Eigen::MatrixXcd rho;
};

/// Right-hand side of the secular master equation on a truncated space.
void liouvillian_apply(const MasterCoefficients& mc, const FockState& in, Eigen::MatrixXcd& out);

/// Integrates from rho0 to time t with adaptive Dormand-Prince steps.
FockState fock_evolve(const MasterCoefficients& mc, const FockState& rho0, double t,
                      const FockConfig& cfg = {});

FockState normal_mode_vacuum(int dim);

/// Moments of the first and second tensor factor read off rho. When rho is
/// expressed in the normal-mode basis these are the l, m moments.
NormalMoments fock_moments(const FockState& state);

struct FockSteadyState {
    FockState rho;                     // normal-mode basis
    NormalMoments normal;
    BareMoments bare;
    double t_reached = 0.0;
    std::size_t steps = 0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    std::vector<std::string> warnings;  // truncation adequacy etc.
};

/// Integrates from the normal-mode vacuum until every second moment changes
/// slower than cfg.convergence_tol per unit time.
/// Throws Error(non_convergence) if t_final is reached first.
FockSteadyState fock_steady_state(const MasterCoefficients& mc, const BogoliubovTransform& bt,
                                  const FockConfig& cfg = {});
FockSteadyState fock_steady_state(const SystemParams& p, const FockConfig& cfg = {});

/// exp(r (a b - a^dag b^dag)) composed with a local phase, mapping a density
/// matrix written in the normal-mode number basis to the bare-mode number
/// basis on the same truncated space.
Eigen::MatrixXcd bogoliubov_unitary(const BogoliubovTransform& bt, int dim);

FockState to_bare_basis(const FockState& normal, const BogoliubovTransform& bt);

/// Partial transpose on the second factor.
Eigen::MatrixXcd partial_transpose_b(const FockState& state);

/// ln || rho^{T_b} ||_1 for a bare-basis density matrix.
/// Throws Error(domain) when rho is not a normalized positive Hermitian matrix.
double negativity_from_fock(const FockState& bare);

/// Two-mode squeezed vacuum sum_n (-tanh r)^n / cosh r |n, n>, truncated and renormalized.
FockState two_mode_squeezed_vacuum(double r, int dim);

}  // namespace drivedamp::oracle
