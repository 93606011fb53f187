#include "drivedamp/model.hpp"

#include <algorithm>
#include <cmath>

namespace drivedamp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_parameter: return "invalid_parameter";
        case ErrorCode::parametric_instability: return "parametric_instability";
        case ErrorCode::singular_frequency: return "singular_frequency";
        case ErrorCode::no_steady_state: return "no_steady_state";
        case ErrorCode::near_threshold: return "near_threshold";
        case ErrorCode::unphysical_state: return "unphysical_state";
        case ErrorCode::non_convergence: return "non_convergence";
        case ErrorCode::domain: return "domain";
    }
    return "unknown";
}

Detunings detunings(const SystemParams& p) {
    Detunings d;
    d.delta1 = p.omega_a - p.omega_p;
    d.delta2 = p.omega_b - p.omega_p;
    d.sum = d.delta1 + d.delta2;
    return d;
}

double kappa_from_ratio(double omega_a, double omega_b, double omega_p, double ratio) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
        throw Error(ErrorCode::invalid_parameter, "kappa ratio must be a non-negative number");
    }
    return ratio * std::abs((omega_a - omega_p) + (omega_b - omega_p));
}

bool bogoliubov_real(const Detunings& d, double kappa) {
    const double s2 = d.sum * d.sum;
    return s2 - 4.0 * kappa * kappa > kStabilityMargin * s2;
}

bool ValidationReport::contains(std::string_view name) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.name == name; });
}

}  // namespace drivedamp
