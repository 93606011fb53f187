#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "drivedamp/lindblad_oracle.hpp"

namespace drivedamp::oracle {

namespace {

using cd = std::complex<double>;

void require_dim(int d) {
    if (d < 2) throw Error(ErrorCode::invalid_parameter, "Fock truncation needs dim >= 2");
}

// Diagonal of the truncated x x^dag: n + 1 below the cutoff, 0 at it.
double lowered_raised(int n, int d) { return n + 1 < d ? n + 1.0 : 0.0; }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<double> moment_vector(const NormalMoments& m) {
    return {m.n_l,         m.n_m,         m.lm.real(),  m.lm.imag(),
            m.ldag_m.real(), m.ldag_m.imag(), m.ll.real(), m.ll.imag(),
            m.mm.real(),   m.mm.imag()};
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

class DormandPrince {
public:
    DormandPrince(const MasterCoefficients& mc, int dim, const FockConfig& cfg)
        : mc_(mc), cfg_(cfg), dim_(dim) {
        const int n = dim * dim;
        for (auto* m : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &tmp_, &next_}) {
            m->resize(n, n);
        }
    }

    // One attempted step of size h from (t, y). On success y and k1 advance.
    bool step(FockState& y, double& h) {
        FockState stage{dim_, {}};
        auto eval = [&](const Eigen::MatrixXcd& x, Eigen::MatrixXcd& out) {
            stage.rho = x;
            liouvillian_apply(mc_, stage, out);
        };
        if (!have_k1_) {
            liouvillian_apply(mc_, y, k1_);
            have_k1_ = true;
        }
        const Eigen::MatrixXcd& y0 = y.rho;
        eval(y0 + h * a21 * k1_, k2_);
        eval(y0 + h * (a31 * k1_ + a32 * k2_), k3_);
        eval(y0 + h * (a41 * k1_ + a42 * k2_ + a43 * k3_), k4_);
        eval(y0 + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_), k5_);
        eval(y0 + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_), k6_);
        next_ = y0 + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
        eval(next_, k7_);
        tmp_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);

        double err = 0.0;
        for (Eigen::Index i = 0; i < tmp_.size(); ++i) {
            const double scale =
                cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(y0(i)), std::abs(next_(i)));
            err = std::max(err, std::abs(tmp_(i)) / scale);
        }
        const double factor =
            err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        if (err <= 1.0) {
            y.rho.swap(next_);
            k1_.swap(k7_);
            last_h_ = h;
            h *= factor;
            return true;
        }
        h *= std::min(factor, 1.0);
        return false;
    }

    double last_step() const { return last_h_; }

private:
    const MasterCoefficients& mc_;
    const FockConfig& cfg_;
    int dim_;
    bool have_k1_ = false;
    double last_h_ = 0.0;
    Eigen::MatrixXcd k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, next_;
};

void check_density_matrix(const FockState& s) {
    const Eigen::Index n = static_cast<Eigen::Index>(s.dim) * s.dim;
    if (s.dim < 1 || s.rho.rows() != n || s.rho.cols() != n || !s.rho.allFinite()) {
        throw Error(ErrorCode::domain, "density matrix shape does not match its truncation");
    }
    if (max_abs(s.rho - s.rho.adjoint()) > 1e-10) {
        throw Error(ErrorCode::domain, "density matrix is not Hermitian");
    }
    if (std::abs(s.rho.trace() - cd(1.0)) > 1e-8) {
        throw Error(ErrorCode::domain, "density matrix is not normalized");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw Error(ErrorCode::domain, "density matrix is not positive");
    }
}

}  // namespace

void liouvillian_apply(const MasterCoefficients& mc, const FockState& in, Eigen::MatrixXcd& out) {
    const int d = in.dim;
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    out.resize(n, n);
    const Eigen::MatrixXcd& rho = in.rho;
    const auto at = [&](int i, int j, int k, int q) { return rho(i * d + j, k * d + q); };

    for (int k = 0; k < d; ++k) {
        for (int q = 0; q < d; ++q) {
            const Eigen::Index col = k * d + q;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    const Eigen::Index row = i * d + j;
                    const cd r = rho(row, col);
                    cd acc = cd(0.0, -(mc.A * (i - k) + mc.B * (j - q))) * r;
                    // l: 2 l rho l^dag - l^dag l rho - rho l^dag l
                    double loss = mc.C * (i + k) + mc.E * (j + q);
                    // l^dag: 2 l^dag rho l - l l^dag rho - rho l l^dag
                    loss += mc.D * (lowered_raised(i, d) + lowered_raised(k, d)) +
                            mc.F * (lowered_raised(j, d) + lowered_raised(q, d));
                    acc -= loss * r;
                    if (i + 1 < d && k + 1 < d) {
                        acc += 2.0 * mc.C * std::sqrt((i + 1.0) * (k + 1.0)) * at(i + 1, j, k + 1, q);
                    }
                    if (i > 0 && k > 0) {
                        acc += 2.0 * mc.D * std::sqrt(double(i) * k) * at(i - 1, j, k - 1, q);
                    }
                    if (j + 1 < d && q + 1 < d) {
                        acc += 2.0 * mc.E * std::sqrt((j + 1.0) * (q + 1.0)) * at(i, j + 1, k, q + 1);
                    }
                    if (j > 0 && q > 0) {
                        acc += 2.0 * mc.F * std::sqrt(double(j) * q) * at(i, j - 1, k, q - 1);
                    }
                    out(row, col) = acc;
                }
            }
        }
    }
}

FockState normal_mode_vacuum(int dim) {
    require_dim(dim);
    FockState s{dim, Eigen::MatrixXcd::Zero(dim * dim, dim * dim)};
    s.rho(0, 0) = 1.0;
    return s;
}

FockState fock_evolve(const MasterCoefficients& mc, const FockState& rho0, double t,
                      const FockConfig& cfg) {
    require_dim(rho0.dim);
    if (!(t >= 0.0)) throw Error(ErrorCode::domain, "evolution time must be non-negative");
    FockState y = rho0;
    DormandPrince dp(mc, y.dim, cfg);
    double now = 0.0;
    double h = std::min(cfg.dt, t);
    while (now < t) {
        h = std::min(h, t - now);
        double trial = h;
        if (dp.step(y, trial)) now += dp.last_step();
        h = trial;
        if (h < 1e-14 * std::max(1.0, now)) {
            throw Error(ErrorCode::non_convergence, "integrator step size underflow");
        }
    }
    return y;
}

NormalMoments fock_moments(const FockState& s) {
    const int d = s.dim;
    const auto at = [&](int i, int j, int k, int q) { return s.rho(i * d + j, k * d + q); };
    NormalMoments m;
    cd n_l = 0, n_m = 0, lm = 0, ldag_m = 0, ll = 0, mm = 0;
    // <X> = tr(rho X) = sum_{r,c} rho(c, r) X(r, c)
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            n_l += double(i) * at(i, j, i, j);
            n_m += double(j) * at(i, j, i, j);
            // l m |i+1, j+1> = sqrt((i+1)(j+1)) |i, j>
            if (i + 1 < d && j + 1 < d) {
                lm += std::sqrt((i + 1.0) * (j + 1.0)) * at(i + 1, j + 1, i, j);
            }
            // l^dag m |i-1, j+1> = sqrt(i (j+1)) |i, j>
            if (i > 0 && j + 1 < d) {
                ldag_m += std::sqrt(i * (j + 1.0)) * at(i - 1, j + 1, i, j);
            }
            if (i + 2 < d) ll += std::sqrt((i + 1.0) * (i + 2.0)) * at(i + 2, j, i, j);
            if (j + 2 < d) mm += std::sqrt((j + 1.0) * (j + 2.0)) * at(i, j + 2, i, j);
        }
    }
    m.n_l = n_l.real();
    m.n_m = n_m.real();
    m.lm = lm;
    m.ldag_m = ldag_m;
    m.ll = ll;
    m.mm = mm;
    return m;
}

FockSteadyState fock_steady_state(const MasterCoefficients& mc, const BogoliubovTransform& bt,
                                  const FockConfig& cfg) {
    require_dim(cfg.dim_per_mode);
    if (!mc.steady_state_exists()) {
        throw Error(ErrorCode::no_steady_state, "Fock integration needs C > D and E > F");
    }
    FockSteadyState out;
    const double limit = cfg.dim_per_mode / 4.0;
    if (mc.D / (mc.C - mc.D) >= limit || mc.F / (mc.E - mc.F) >= limit) {
        out.warnings.push_back("expected occupation exceeds dim/4; truncation may be inadequate");
    }

    FockState y = normal_mode_vacuum(cfg.dim_per_mode);
    DormandPrince dp(mc, y.dim, cfg);
    std::vector<double> prev = moment_vector(fock_moments(y));
    double now = 0.0;
    double h = cfg.dt;
    bool converged = false;
    while (now < cfg.t_final) {
        h = std::min(h, cfg.t_final - now);
        double trial = h;
        const bool accepted = dp.step(y, trial);
        h = trial;
        if (!accepted) {
            if (h < 1e-14 * std::max(1.0, now)) break;
            continue;
        }
        now += dp.last_step();
        ++out.steps;
        const std::vector<double> cur = moment_vector(fock_moments(y));
        double rate = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            rate = std::max(rate, std::abs(cur[i] - prev[i]) / dp.last_step());
        }
        prev = cur;
        if (rate < cfg.convergence_tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorCode::non_convergence,
                    "Fock integration did not reach a steady state before t_final");
    }

    out.t_reached = now;
    out.trace_error = std::abs(y.rho.trace() - cd(1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(y.rho, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    out.normal = fock_moments(y);
    out.bare = bare_moments_from_normal(bt, out.normal);
    out.rho = std::move(y);
    return out;
}

FockSteadyState fock_steady_state(const SystemParams& p, const FockConfig& cfg) {
    const ValidationReport report = validate(p);
    if (!report.ok()) {
        throw Error(report.issues.front().code, report.issues.front().message);
    }
    const Detunings d = detunings(p);
    return fock_steady_state(master_coefficients(p), bogoliubov(d, p.kappa), cfg);
}

Eigen::MatrixXcd bogoliubov_unitary(const BogoliubovTransform& bt, int dim) {
    require_dim(dim);
    if (bt.alpha.real() != 0.0 || bt.beta.real() != 0.0 || bt.alpha.imag() <= 0.0 ||
        bt.beta.imag() > 0.0) {
        throw Error(ErrorCode::domain,
                    "expected alpha on the positive and beta on the negative imaginary axis");
    }
    const int d = dim;
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    const double r = std::atanh(std::abs(bt.beta) / std::abs(bt.alpha));

    // H = i r (a b - a^dag b^dag) is Hermitian; exp(r (a b - a^dag b^dag)) = exp(-i H).
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < d; ++i) {
        for (int j = 0; j + 1 < d; ++j) {
            // a^dag b^dag |i, j> = sqrt((i+1)(j+1)) |i+1, j+1>
            const double amp = std::sqrt((i + 1.0) * (j + 1.0));
            h((i + 1) * d + (j + 1), i * d + j) += cd(0.0, -r * amp);
            h(i * d + j, (i + 1) * d + (j + 1)) += cd(0.0, r * amp);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXcd phases =
        es.eigenvalues().unaryExpr([](double lam) { return std::exp(cd(0.0, -lam)); });
    const Eigen::MatrixXcd squeeze =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    // exp(i pi/2 (a^dag a - b^dag b))
    Eigen::VectorXcd rot(n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            rot(i * d + j) = std::exp(cd(0.0, 0.5 * std::numbers::pi * (i - j)));
        }
    }
    return rot.asDiagonal() * squeeze;
}

FockState to_bare_basis(const FockState& normal, const BogoliubovTransform& bt) {
    const Eigen::MatrixXcd w = bogoliubov_unitary(bt, normal.dim);
    const Eigen::Index n = w.rows();
    if (max_abs(w * w.adjoint() - Eigen::MatrixXcd::Identity(n, n)) > 1e-8) {
        throw Error(ErrorCode::domain, "truncated Bogoliubov unitary is not unitary");
    }
    return {normal.dim, w * normal.rho * w.adjoint()};
}

Eigen::MatrixXcd partial_transpose_b(const FockState& s) {
    const int d = s.dim;
    Eigen::MatrixXcd out(s.rho.rows(), s.rho.cols());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int q = 0; q < d; ++q)
                    out(i * d + j, k * d + q) = s.rho(i * d + q, k * d + j);
    return out;
}

double negativity_from_fock(const FockState& bare) {
    check_density_matrix(bare);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(partial_transpose_b(bare),
                                                        Eigen::EigenvaluesOnly);
    const double trace_norm = es.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, std::log(trace_norm));
}

FockState two_mode_squeezed_vacuum(double r, int dim) {
    require_dim(dim);
    const int d = dim;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    const double t = -std::tanh(r);
    for (int k = 0; k < d; ++k) psi(k * d + k) = std::pow(t, k) / std::cosh(r);
    psi.normalize();
    return {d, psi * psi.adjoint()};
}

}  // namespace drivedamp::oracle
