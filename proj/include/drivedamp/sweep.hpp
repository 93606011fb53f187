#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drivedamp/model.hpp"

namespace drivedamp {

struct SweepSpec {
    SystemParams base;
    std::vector<double> zeta1_grid;
    std::vector<double> zeta2_grid;
};

struct SweepRow {
    double zeta1 = 0.0;
    double zeta2 = 0.0;
    double n_l = 0.0;
    double n_m = 0.0;
    double log_negativity = 0.0;
    double log_negativity_base2 = 0.0;
    double negativity = 0.0;
    double nu_tilde_minus = 0.0;
    bool stable = false;
    std::optional<ErrorCode> error;
};

/// Grid helpers. Both throw Error(invalid_parameter) on lo <= 0 (log), lo >= hi or n < 1.
std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);

/// Throws Error(invalid_parameter) if a grid is empty, unsorted or non-positive.
void check_spec(const SweepSpec& s);

/// End-to-end evaluation of one parameter point. Never throws; failures are
/// captured in SweepRow::error.
SweepRow run_point(const SystemParams& p);

/// Serial reference: rows in (zeta2 outer, zeta1 inner) order.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& s);

/// OpenMP evaluation of the same grid. Output is identical to
/// run_sweep_serial for every parallelism.
std::vector<SweepRow> run_sweep(const SweepSpec& s, int parallelism);

/// DRIVEDAMP_THREADS if set to a positive integer, otherwise fallback.
/// Throws Error(invalid_parameter) on a malformed value.
int parallelism_from_env(int fallback);

}  // namespace drivedamp
