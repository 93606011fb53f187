#include "drivedamp/gaussian_cv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace drivedamp {

namespace {

void require_symmetric(const Eigen::Matrix4d& s) {
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if (!s.allFinite() || (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw Error(ErrorCode::domain, "covariance matrix must be finite and symmetric");
    }
}

}  // namespace

Eigen::Matrix4d symplectic_form() {
    Eigen::Matrix4d om = Eigen::Matrix4d::Zero();
    om(0, 1) = 1.0;
    om(1, 0) = -1.0;
    om(2, 3) = 1.0;
    om(3, 2) = -1.0;
    return om;
}

bool is_physical(const CovarianceMatrix& cov, double tol) {
    const std::complex<double> half_i(0.0, 0.5);
    const Eigen::Matrix4cd h = cov.sigma.cast<std::complex<double>>() +
                               half_i * symplectic_form().cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
    return es.info() == Eigen::Success && es.eigenvalues().minCoeff() >= -tol;
}

CovarianceMatrix covariance_from_moments(const BareMoments& m) {
    CovarianceMatrix cov;
    Eigen::Matrix4d& s = cov.sigma;
    s(0, 0) = m.n_a + 0.5 + m.aa.real();
    s(1, 1) = m.n_a + 0.5 - m.aa.real();
    s(0, 1) = s(1, 0) = m.aa.imag();
    s(2, 2) = m.n_b + 0.5 + m.bb.real();
    s(3, 3) = m.n_b + 0.5 - m.bb.real();
    s(2, 3) = s(3, 2) = m.bb.imag();
    s(0, 2) = s(2, 0) = m.ab.real() + m.adag_b.real();
    s(1, 3) = s(3, 1) = -m.ab.real() + m.adag_b.real();
    s(0, 3) = s(3, 0) = m.ab.imag() + m.adag_b.imag();
    s(1, 2) = s(2, 1) = m.ab.imag() - m.adag_b.imag();

    if (!s.allFinite() || !is_physical(cov)) {
        throw Error(ErrorCode::unphysical_state,
                    "moments violate the uncertainty relation sigma + i/2 Omega >= 0");
    }
    return cov;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& cov) {
    require_symmetric(cov.sigma);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> sq(cov.sigma);
    if (sq.info() != Eigen::Success || !(sq.eigenvalues().minCoeff() > 0.0)) {
        throw Error(ErrorCode::domain, "covariance matrix must be positive definite");
    }
    // sigma^(1/2) (i Omega) sigma^(1/2) is Hermitian, similar to i Omega sigma,
    // with eigenvalues -nu_plus, -nu_minus, nu_minus, nu_plus.
    const Eigen::Matrix4d root = sq.operatorSqrt();
    const Eigen::Matrix4d k = root * symplectic_form() * root;
    const Eigen::Matrix4cd h =
        std::complex<double>(0.0, 0.5) * (k - k.transpose()).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
    const Eigen::Vector4d ev = es.eigenvalues();
    return {0.5 * (ev(3) - ev(0)), 0.5 * (ev(2) - ev(1))};
}

SymplecticSpectrum symplectic_eigenvalues_invariants(const CovarianceMatrix& cov) {
    require_symmetric(cov.sigma);
    const Eigen::Matrix4d& s = cov.sigma;
    const double det_a = s.block<2, 2>(0, 0).determinant();
    const double det_b = s.block<2, 2>(2, 2).determinant();
    const double det_c = s.block<2, 2>(0, 2).determinant();
    const double det_s = s.determinant();
    const double delta = det_a + det_b + 2.0 * det_c;
    const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * det_s));
    return {std::sqrt(0.5 * (delta + disc)), std::sqrt(std::max(0.0, 0.5 * (delta - disc)))};
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cov) {
    const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
    CovarianceMatrix out;
    out.sigma = flip.asDiagonal() * cov.sigma * flip.asDiagonal();
    return out;
}

NegativityResult log_negativity(const CovarianceMatrix& cov) {
    require_symmetric(cov.sigma);
    if (!is_physical(cov)) {
        throw Error(ErrorCode::unphysical_state, "covariance matrix is not physical");
    }
    const SymplecticSpectrum pt = symplectic_eigenvalues(partial_transpose(cov));

    NegativityResult r;
    r.nu_tilde_minus = pt.nu_minus;
    r.entangled = pt.nu_minus < 0.5 - kEntanglementTol;
    if (r.entangled) {
        r.log_negativity = -std::log(2.0 * pt.nu_minus);
        r.log_negativity_base2 = r.log_negativity / std::numbers::ln2;
        r.negativity = 0.5 * (1.0 / (2.0 * pt.nu_minus) - 1.0);
    }
    return r;
}

}  // namespace drivedamp
