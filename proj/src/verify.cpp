#include "drivedamp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include "drivedamp/bath_rates.hpp"
#include "drivedamp/gaussian_cv.hpp"
#include "drivedamp/lindblad_oracle.hpp"
#include "drivedamp/steady_state.hpp"

namespace drivedamp::verify {

namespace {

constexpr double kLyapunovTol = 1e-10;
constexpr double kQuadratureTol = 1e-6;
constexpr double kCommutationTol = 1e-12;
constexpr double kFockTol = 1e-4;
constexpr double kFockOccupationLimit = 0.5;

double max_deviation(const BareMoments& x, const BareMoments& y) {
    const auto c = [](std::complex<double> u, std::complex<double> v) {
        return std::max(relative_deviation(u.real(), v.real()),
                        relative_deviation(u.imag(), v.imag()));
    };
    return std::max({relative_deviation(x.n_a, y.n_a), relative_deviation(x.n_b, y.n_b),
                     c(x.ab, y.ab), c(x.aa, y.aa), c(x.bb, y.bb), c(x.adag_b, y.adag_b)});
}

double max_abs_difference(const BareMoments& x, const BareMoments& y) {
    return std::max({std::abs(x.n_a - y.n_a), std::abs(x.n_b - y.n_b), std::abs(x.ab - y.ab),
                     std::abs(x.aa - y.aa), std::abs(x.bb - y.bb),
                     std::abs(x.adag_b - y.adag_b)});
}

struct Draw {
    SystemParams p;
    BogoliubovTransform bt;
    MasterCoefficients mc;
    Occupations occ;
};

Draw make_draw(std::mt19937_64& rng) {
    Draw d;
    d.p = random_stable_draw(rng);
    d.bt = bogoliubov(detunings(d.p), d.p.kappa);
    d.mc = master_coefficients(d.p);
    d.occ = steady_occupations(d.mc);
    return d;
}

Check lyapunov_check(const std::vector<Draw>& draws, double perturb_c, int parallelism) {
    Check chk{"lyapunov_moments", true, 0.0, kLyapunovTol, static_cast<int>(draws.size()), ""};
    std::vector<double> dev(draws.size(), 0.0);
#pragma omp parallel for num_threads(parallelism) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(draws.size()); ++i) {
        const Draw& d = draws[i];
        MasterCoefficients analytic_mc = d.mc;
        analytic_mc.C *= 1.0 + perturb_c;
        try {
            const Occupations occ = steady_occupations(analytic_mc);
            const BareMoments analytic = bare_mode_moments(d.bt, occ);

            const oracle::NormalMoments nm = oracle::lyapunov_steady_moments(d.mc);
            const BareMoments lyap = oracle::bare_moments_from_normal(d.bt, nm);

            const Eigen::Matrix4d s = oracle::bogoliubov_quadrature_map(d.bt);
            const Eigen::Matrix4d sigma_bare =
                s * oracle::solve_lyapunov(oracle::moment_system(d.mc)) * s.transpose();
            const Eigen::Matrix4d sigma_analytic = covariance_from_moments(analytic).sigma;
            double cov_dev = 0.0;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    cov_dev = std::max(cov_dev,
                                       relative_deviation(sigma_bare(r, c), sigma_analytic(r, c)));

            dev[i] = std::max({max_deviation(analytic, lyap), cov_dev,
                               relative_deviation(occ.n_l, nm.n_l),
                               relative_deviation(occ.n_m, nm.n_m)});
        } catch (const Error&) {
            dev[i] = HUGE_VAL;
        }
    }
    chk.worst = *std::max_element(dev.begin(), dev.end());
    chk.passed = chk.worst <= chk.tolerance;
    chk.detail = "analytic vs Lyapunov (moments, occupations, covariance), relative";
    return chk;
}

Check commutation_check(const std::vector<Draw>& draws) {
    Check chk{"bogoliubov_commutator", true, 0.0, kCommutationTol,
              static_cast<int>(draws.size()), "| |alpha|^2 - |beta|^2 - 1 |"};
    for (const Draw& d : draws) {
        chk.worst = std::max(chk.worst, std::abs(d.bt.alpha_sq() - d.bt.beta_sq() - 1.0));
    }
    chk.passed = chk.worst <= chk.tolerance;
    return chk;
}

Check quadrature_check(const Options& opt) {
    Check chk{"lamb_shift_quadrature", true, 0.0, kQuadratureTol, opt.quadrature_points,
              "closed-form Im R(w) vs principal-value quadrature, relative"};
    std::mt19937_64 rng(opt.seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> omega(-50.0, 50.0);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_real_distribution<double> log_zeta(std::log(1e-3), 0.0);
    const double nus[] = {0.5, 1.0, 2.0};

    std::vector<SpectralDensity> js;
    std::vector<double> ws;
    while (static_cast<int>(ws.size()) < opt.quadrature_points) {
        const double w = omega(rng);
        const double nu = nus[pick(rng)];
        const double zeta = std::exp(log_zeta(rng));
        if (w == 0.0) continue;
        js.push_back({zeta, nu});
        ws.push_back(w);
    }
    std::vector<double> dev(ws.size());
#pragma omp parallel for num_threads(opt.parallelism) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ws.size()); ++i) {
        const double closed = half_fourier_rate(js[i], ws[i]).imag();
        const double numeric = lamb_shift_by_quadrature(js[i], ws[i]);
        dev[i] = std::abs(closed - numeric) / std::max(std::abs(closed), std::abs(numeric));
    }
    chk.worst = *std::max_element(dev.begin(), dev.end());
    chk.passed = chk.worst <= chk.tolerance;
    return chk;
}

Check fock_check(const std::vector<Draw>& draws, const Options& opt) {
    Check chk{"fock_moments", true, 0.0, kFockTol, 0,
              "analytic vs d=8 truncated Fock integration, absolute"};
    std::vector<double> dev(draws.size(), -1.0);
    std::vector<std::string> failures(draws.size());
#pragma omp parallel for num_threads(opt.parallelism) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(draws.size()); ++i) {
        const Draw& d = draws[i];
        if (d.occ.n_l >= kFockOccupationLimit || d.occ.n_m >= kFockOccupationLimit) continue;
        try {
            MasterCoefficients analytic_mc = d.mc;
            analytic_mc.C *= 1.0 + opt.perturb_c;
            const BareMoments analytic =
                bare_mode_moments(d.bt, steady_occupations(analytic_mc));
            const oracle::FockSteadyState fs = oracle::fock_steady_state(d.mc, d.bt);
            dev[i] = max_abs_difference(analytic, fs.bare);
            if (fs.trace_error > 1e-8 || fs.min_eigenvalue < -1e-8) {
                failures[i] = "trace or positivity drift";
                dev[i] = std::max(dev[i], 1.0);
            }
        } catch (const Error& e) {
            failures[i] = e.what();
            dev[i] = 1.0;
        }
    }
    for (std::size_t i = 0; i < draws.size(); ++i) {
        if (dev[i] < 0.0) continue;
        ++chk.samples;
        chk.worst = std::max(chk.worst, dev[i]);
        if (!failures[i].empty()) chk.detail += "; draw " + std::to_string(i) + ": " + failures[i];
    }
    chk.passed = chk.samples > 0 && chk.worst <= chk.tolerance;
    return chk;
}

}  // namespace

SystemParams random_stable_draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> omega_b(0.4, 1.6);
    std::uniform_real_distribution<double> omega_p(4.0, 16.0);
    std::uniform_real_distribution<double> ratio(0.0, 0.3);
    std::uniform_real_distribution<double> nu(0.5, 2.0);
    std::uniform_real_distribution<double> log_zeta(std::log(1e-3), std::log(1e-1));
    while (true) {
        SystemParams p;
        p.omega_a = 1.0;
        p.omega_b = omega_b(rng);
        p.omega_p = omega_p(rng);
        p.kappa = kappa_from_ratio(p.omega_a, p.omega_b, p.omega_p, ratio(rng));
        p.nu1 = nu(rng);
        p.nu2 = nu(rng);
        p.zeta1 = std::exp(log_zeta(rng));
        p.zeta2 = std::exp(log_zeta(rng));
        if (validate(p).ok()) return p;
    }
}

double relative_deviation(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale <= 1e-14) return 0.0;
    return std::abs(x - y) / scale;
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run(const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<Draw> draws;
    draws.reserve(opt.draws);
    for (int i = 0; i < opt.draws; ++i) draws.push_back(make_draw(rng));

    Report report;
    report.checks.push_back(commutation_check(draws));
    report.checks.push_back(lyapunov_check(draws, opt.perturb_c, opt.parallelism));
    report.checks.push_back(quadrature_check(opt));
    if (opt.level == Level::full) report.checks.push_back(fock_check(draws, opt));
    return report;
}

void print(std::ostream& out, const Report& report) {
    for (const Check& c : report.checks) {
        std::ostringstream line;
        line << (c.passed ? "PASS " : "FAIL ") << c.name << "  worst=" << c.worst
             << "  tol=" << c.tolerance << "  n=" << c.samples;
        if (!c.detail.empty()) line << "  (" << c.detail << ")";
        out << line.str() << '\n';
    }
    out << (report.passed() ? "verify: all checks passed" : "verify: FAILED") << '\n';
}

}  // namespace drivedamp::verify
