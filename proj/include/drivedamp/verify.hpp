#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "drivedamp/model.hpp"

namespace drivedamp::verify {

enum class Level { fast, full };

struct Options {
    Level level = Level::fast;
    int draws = 100;                 // random parameter points for the moment checks
    int quadrature_points = 50;      // random (omega, nu, zeta) triples
    std::uint64_t seed = 20130501;
    int parallelism = 1;
    // Fault injection: scale C by (1 + perturb_c) on the analytic side only.
    double perturb_c = 0.0;
};

struct Check {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest observed deviation
    double tolerance = 0.0;
    int samples = 0;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool passed() const;
};

/// Random parameter point around the pumped regime: omega_a = 1,
/// omega_b in [0.4, 1.6], omega_p in [4, 16], kappa up to 0.3 |Δ1+Δ2|,
/// nu in [0.5, 2], zeta log-uniform in [1e-3, 1e-1]. Redraws until validate()
/// passes.
SystemParams random_stable_draw(std::mt19937_64& rng);

/// Deviation used by the moment checks: |x - y| / max(|x|, |y|), or 0 when
/// both |x| and |y| are below 1e-14 (zero up to round-off).
double relative_deviation(double x, double y);

Report run(const Options& opt);

void print(std::ostream& out, const Report& report);

}  // namespace drivedamp::verify
