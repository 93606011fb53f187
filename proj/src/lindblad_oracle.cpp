#include "drivedamp/lindblad_oracle.hpp"

#include <Eigen/Eigenvalues>

namespace drivedamp::oracle {

bool MomentSystem::hurwitz() const {
    Eigen::EigenSolver<Eigen::Matrix4d> es(drift, false);
    return es.eigenvalues().real().maxCoeff() < 0.0;
}

MomentSystem moment_system(const MasterCoefficients& mc) {
    // Heisenberg picture of the secular generator: dl/dt = (-iA - (C - D)) l,
    // and d<l^dag l>/dt = -2(C - D)<l^dag l> + 2D, i.e. Var x_l relaxes with
    // diffusion C + D. Same for m with (B, E, F).
    MomentSystem sys;
    sys.drift.setZero();
    sys.diffusion.setZero();
    sys.excess_diffusion.setZero();
    const double gl = mc.C - mc.D;
    const double gm = mc.E - mc.F;
    sys.drift.block<2, 2>(0, 0) << -gl, mc.A, -mc.A, -gl;
    sys.drift.block<2, 2>(2, 2) << -gm, mc.B, -mc.B, -gm;
    sys.diffusion.block<2, 2>(0, 0) = (mc.C + mc.D) * Eigen::Matrix2d::Identity();
    sys.diffusion.block<2, 2>(2, 2) = (mc.E + mc.F) * Eigen::Matrix2d::Identity();
    sys.excess_diffusion.block<2, 2>(0, 0) = 2.0 * mc.D * Eigen::Matrix2d::Identity();
    sys.excess_diffusion.block<2, 2>(2, 2) = 2.0 * mc.F * Eigen::Matrix2d::Identity();
    return sys;
}

Eigen::Matrix4d solve_lyapunov(const Eigen::Matrix4d& a, const Eigen::Matrix4d& q) {
    // vec(A S + S A^T) = (I kron A + A kron I) vec(S)
    using Mat16 = Eigen::Matrix<double, 16, 16>;
    const Eigen::Matrix4d eye = Eigen::Matrix4d::Identity();
    Mat16 k;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            k.block<4, 4>(4 * i, 4 * j) = eye(i, j) * a + a(i, j) * eye;
        }
    }
    const Eigen::Matrix<double, 16, 1> rhs =
        -Eigen::Map<const Eigen::Matrix<double, 16, 1>>(q.data());
    const Eigen::Matrix<double, 16, 1> x = k.fullPivLu().solve(rhs);
    Eigen::Matrix4d sigma = Eigen::Map<const Eigen::Matrix4d>(x.data());
    return 0.5 * (sigma + sigma.transpose());
}

Eigen::Matrix4d solve_lyapunov(const MomentSystem& sys) {
    return solve_lyapunov(sys.drift, sys.excess_diffusion) +
           0.5 * Eigen::Matrix4d::Identity();
}

NormalMoments normal_moments_from_covariance(const Eigen::Matrix4d& s) {
    return normal_moments_from_excess(s - 0.5 * Eigen::Matrix4d::Identity());
}

NormalMoments normal_moments_from_excess(const Eigen::Matrix4d& s) {
    NormalMoments m;
    m.n_l = 0.5 * (s(0, 0) + s(1, 1));
    m.n_m = 0.5 * (s(2, 2) + s(3, 3));
    m.ll = {0.5 * (s(0, 0) - s(1, 1)), s(0, 1)};
    m.mm = {0.5 * (s(2, 2) - s(3, 3)), s(2, 3)};
    m.lm = {0.5 * (s(0, 2) - s(1, 3)), 0.5 * (s(0, 3) + s(1, 2))};
    m.ldag_m = {0.5 * (s(0, 2) + s(1, 3)), 0.5 * (s(0, 3) - s(1, 2))};
    return m;
}

NormalMoments lyapunov_steady_moments(const MasterCoefficients& mc) {
    const MomentSystem sys = moment_system(mc);
    if (!sys.hurwitz()) {
        throw Error(ErrorCode::no_steady_state, "moment drift is not Hurwitz: C <= D or E <= F");
    }
    return normal_moments_from_excess(solve_lyapunov(sys.drift, sys.excess_diffusion));
}

Eigen::Matrix4d bogoliubov_quadrature_map(const BogoliubovTransform& bt) {
    // x_a + i p_a = alpha (x_l + i p_l) + beta (x_m - i p_m)
    // x_b + i p_b = conj(beta) (x_l - i p_l) + conj(alpha) (x_m + i p_m)
    const double ar = bt.alpha.real(), ai = bt.alpha.imag();
    const double br = bt.beta.real(), bi = bt.beta.imag();
    Eigen::Matrix4d s;
    s << ar, -ai, br, bi,
         ai, ar, bi, -br,
         br, -bi, ar, ai,
        -bi, -br, -ai, ar;
    return s;
}

BareMoments bare_moments_from_normal(const BogoliubovTransform& bt, const NormalMoments& nm) {
    const std::complex<double> a = bt.alpha, b = bt.beta;
    const std::complex<double> ac = std::conj(a), bc = std::conj(b);
    const double a2 = std::norm(a), b2 = std::norm(b);
    BareMoments m;
    m.n_a = a2 * nm.n_l + b2 * (nm.n_m + 1.0) + 2.0 * (a * bc * nm.lm).real();
    m.n_b = b2 * (nm.n_l + 1.0) + a2 * nm.n_m + 2.0 * (b * ac * nm.lm).real();
    m.ab = a * bc * (nm.n_l + 1.0) + a2 * nm.lm + b2 * std::conj(nm.lm) + ac * b * nm.n_m;
    m.aa = a * a * nm.ll + 2.0 * a * b * std::conj(nm.ldag_m) + b * b * std::conj(nm.mm);
    m.bb = bc * bc * std::conj(nm.ll) + 2.0 * ac * bc * nm.ldag_m + ac * ac * nm.mm;
    m.adag_b = ac * bc * std::conj(nm.ll) + (ac * ac + bc * bc) * nm.ldag_m + ac * bc * nm.mm;
    return m;
}

}  // namespace drivedamp::oracle
