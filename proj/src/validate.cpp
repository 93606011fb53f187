#include <cmath>
#include <string>

#include "drivedamp/bath_rates.hpp"
#include "drivedamp/model.hpp"
#include "drivedamp/steady_state.hpp"

namespace drivedamp {

namespace {

void require(ValidationReport& r, bool ok, ErrorCode code, std::string name, std::string msg) {
    if (!ok) r.issues.push_back({code, std::move(name), std::move(msg)});
}

}  // namespace

ValidationReport validate(const SystemParams& p) {
    ValidationReport r;
    const auto finite = [](double x) { return std::isfinite(x); };

    require(r, finite(p.omega_a) && p.omega_a > 0, ErrorCode::invalid_parameter, "omega_a",
            "omega_a must be positive");
    require(r, finite(p.omega_b) && p.omega_b > 0, ErrorCode::invalid_parameter, "omega_b",
            "omega_b must be positive");
    require(r, finite(p.omega_p), ErrorCode::invalid_parameter, "omega_p",
            "omega_p must be finite");
    require(r, finite(p.kappa) && p.kappa >= 0, ErrorCode::invalid_parameter, "kappa",
            "kappa must be non-negative");
    require(r, finite(p.zeta1) && p.zeta1 >= 0, ErrorCode::invalid_parameter, "zeta1",
            "zeta1 must be non-negative");
    require(r, finite(p.zeta2) && p.zeta2 >= 0, ErrorCode::invalid_parameter, "zeta2",
            "zeta2 must be non-negative");
    require(r, finite(p.nu1) && p.nu1 > 0, ErrorCode::invalid_parameter, "nu1",
            "nu1 must be positive");
    require(r, finite(p.nu2) && p.nu2 > 0, ErrorCode::invalid_parameter, "nu2",
            "nu2 must be positive");
    if (!r.ok()) return r;

    const Detunings d = detunings(p);
    if (!bogoliubov_real(d, p.kappa)) {
        r.issues.push_back({ErrorCode::parametric_instability, "S1",
                            "S1 violated: (delta1+delta2)^2 <= 4 kappa^2, at or above "
                            "parametric threshold"});
        return r;
    }

    if (p.zeta1 == 0.0 && p.zeta2 == 0.0) {
        r.issues.push_back({ErrorCode::no_steady_state, "zero_coupling",
                            "steady state undefined: C-D=0 and E-F=0"});
        return r;
    }

    const NormalModeFrequencies f = normal_mode_frequencies(d, p.kappa);
    const double eval[] = {p.omega_p + f.alpha11, p.omega_p - f.alpha22, p.omega_p + f.alpha22,
                           p.omega_p - f.alpha11};
    for (double w : eval) {
        if (w == 0.0) {
            r.issues.push_back({ErrorCode::singular_frequency, "singular_frequency",
                                "a bath rate is evaluated at exactly zero frequency"});
            return r;
        }
    }

    const MasterCoefficients mc = master_coefficients(p);
    require(r, mc.C > mc.D, ErrorCode::no_steady_state, "mode_l",
            mc.C - mc.D == 0.0 ? "steady state undefined: C-D=0"
                               : "pump overcomes damping of mode l: C <= D");
    require(r, mc.E > mc.F, ErrorCode::no_steady_state, "mode_m",
            mc.E - mc.F == 0.0 ? "steady state undefined: E-F=0"
                               : "pump overcomes damping of mode m: E <= F");
    if (!r.ok()) return r;

    const double n_l = mc.D / (mc.C - mc.D);
    const double n_m = mc.F / (mc.E - mc.F);
    require(r, n_l <= kMaxOccupation && n_m <= kMaxOccupation, ErrorCode::near_threshold,
            "near_threshold", "steady occupation exceeds 1e12");
    return r;
}

}  // namespace drivedamp
