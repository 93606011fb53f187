#pragma once

#include <string>
#include <vector>

#include "drivedamp/errors.hpp"

namespace drivedamp {

/// Physical parameters of two pumped bosonic modes with a two-mode squeezing
/// coupling, each damped by its own zero-temperature Drude-Lorentz bath.
///
/// Frequencies are conventionally given in units of omega_a; nothing in the
/// library assumes omega_a == 1.
struct SystemParams {
    double omega_a = 1.0;
    double omega_b = 1.0;
    double omega_p = 10.0;  // classical pump
    double kappa = 0.0;     // squeezing strength
    double zeta1 = 0.0;     // bath coupling of mode a
    double zeta2 = 0.0;     // bath coupling of mode b
    double nu1 = 1.0;       // Drude-Lorentz cutoff of bath 1
    double nu2 = 1.0;       // Drude-Lorentz cutoff of bath 2
};

/// Pump-frame detunings.
struct Detunings {
    double delta1 = 0.0;  // omega_a - omega_p
    double delta2 = 0.0;  // omega_b - omega_p
    double sum = 0.0;     // delta1 + delta2
};

Detunings detunings(const SystemParams& p);

/// Resolve a squeezing strength given as a fraction of |Δ1+Δ2|.
double kappa_from_ratio(double omega_a, double omega_b, double omega_p, double ratio);

/// Relative margin required by the Bogoliubov realness condition:
/// (Δ1+Δ2)^2 - 4κ^2 must exceed this fraction of (Δ1+Δ2)^2.
inline constexpr double kStabilityMargin = 1e-10;

/// True when (Δ1+Δ2)^2 > 4κ^2 with the relative margin above.
bool bogoliubov_real(const Detunings& d, double kappa);

struct ValidationIssue {
    ErrorCode code;
    std::string name;
    std::string message;
};

/// Every violated condition for p, in the order they are checked. An empty
/// report means the full steady-state pipeline is well defined.
struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    bool contains(std::string_view name) const;
};

ValidationReport validate(const SystemParams& p);

}  // namespace drivedamp
