#include "drivedamp/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "drivedamp/gaussian_cv.hpp"
#include "drivedamp/steady_state.hpp"

namespace drivedamp {

namespace {

void check_grid(const std::vector<double>& g, const char* name) {
    if (g.empty()) {
        throw Error(ErrorCode::invalid_parameter, std::string(name) + " grid is empty");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g[i] > 0.0) || !std::isfinite(g[i]) || (i > 0 && !(g[i] > g[i - 1]))) {
            throw Error(ErrorCode::invalid_parameter,
                        std::string(name) + " grid must be positive and strictly increasing");
        }
    }
}

SweepRow point_at(const SweepSpec& s, std::size_t idx) {
    const std::size_t n1 = s.zeta1_grid.size();
    SystemParams p = s.base;
    p.zeta1 = s.zeta1_grid[idx % n1];
    p.zeta2 = s.zeta2_grid[idx / n1];
    return run_point(p);
}

SweepRow failed_row(const SystemParams& p, ErrorCode code) {
    SweepRow row;
    row.zeta1 = p.zeta1;
    row.zeta2 = p.zeta2;
    row.error = code;
    return row;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1 || !(lo <= hi) || (n > 1 && !(lo < hi))) {
        throw Error(ErrorCode::invalid_parameter, "linspace needs lo < hi and n >= 1");
    }
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    if (n > 1) g.back() = hi;
    return g;
}

std::vector<double> logspace(double lo, double hi, int n) {
    if (!(lo > 0.0)) throw Error(ErrorCode::invalid_parameter, "logspace needs lo > 0");
    std::vector<double> g = linspace(std::log(lo), std::log(hi), n);
    for (double& x : g) x = std::exp(x);
    g.front() = lo;
    if (n > 1) g.back() = hi;
    return g;
}

void check_spec(const SweepSpec& s) {
    check_grid(s.zeta1_grid, "zeta1");
    check_grid(s.zeta2_grid, "zeta2");
}

SweepRow run_point(const SystemParams& p) {
    SweepRow row;
    row.zeta1 = p.zeta1;
    row.zeta2 = p.zeta2;
    try {
        const SteadyState ss = steady_state(p);
        const NegativityResult neg = log_negativity(covariance_from_moments(ss.moments));
        row.n_l = ss.occupations.n_l;
        row.n_m = ss.occupations.n_m;
        row.log_negativity = neg.log_negativity;
        row.log_negativity_base2 = neg.log_negativity_base2;
        row.negativity = neg.negativity;
        row.nu_tilde_minus = neg.nu_tilde_minus;
        row.stable = true;
    } catch (const Error& e) {
        row = failed_row(p, e.code());
    } catch (const std::exception&) {
        row = failed_row(p, ErrorCode::domain);
    }
    return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& s) {
    check_spec(s);
    const std::size_t total = s.zeta1_grid.size() * s.zeta2_grid.size();
    std::vector<SweepRow> rows;
    rows.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) rows.push_back(point_at(s, idx));
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& s, int parallelism) {
    check_spec(s);
    if (parallelism < 1) {
        throw Error(ErrorCode::invalid_parameter, "parallelism must be a positive integer");
    }
    const std::ptrdiff_t total =
        static_cast<std::ptrdiff_t>(s.zeta1_grid.size() * s.zeta2_grid.size());
    std::vector<SweepRow> rows(total);
#pragma omp parallel for num_threads(parallelism) schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        rows[idx] = point_at(s, static_cast<std::size_t>(idx));
    }
    return rows;
}

int parallelism_from_env(int fallback) {
    const char* env = std::getenv("DRIVEDAMP_THREADS");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) {
        throw Error(ErrorCode::invalid_parameter,
                    "DRIVEDAMP_THREADS must be a positive integer");
    }
    return static_cast<int>(v);
}

}  // namespace drivedamp
