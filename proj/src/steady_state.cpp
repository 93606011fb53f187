#include "drivedamp/steady_state.hpp"

#include <cmath>
#include <string>

namespace drivedamp {

namespace {

void require_real(const Detunings& d, double kappa) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw Error(ErrorCode::invalid_parameter, "kappa must be non-negative");
    }
    if (!bogoliubov_real(d, kappa)) {
        throw Error(ErrorCode::parametric_instability,
                    "(delta1+delta2)^2 <= 4 kappa^2: at or above parametric threshold");
    }
}

}  // namespace

BogoliubovTransform bogoliubov(const Detunings& d, double kappa) {
    require_real(d, kappa);
    const double s = d.sum;
    const double root = std::sqrt(s * s - 4.0 * kappa * kappa);
    const double ratio = std::abs(s) / root;  // sqrt(S^2 / (S^2 - 4 kappa^2))
    BogoliubovTransform bt;
    bt.alpha = {0.0, std::sqrt(0.5 * ratio + 0.5)};
    bt.beta = {0.0, -std::sqrt(0.5 * ratio - 0.5)};
    return bt;
}

NormalModeFrequencies normal_mode_frequencies(const Detunings& d, double kappa) {
    require_real(d, kappa);
    const double s = d.sum;
    const double root = std::sqrt(s * s - 4.0 * kappa * kappa);
    const double ratio = std::abs(s) / root;
    const double half_diff = 0.5 * (d.delta1 - d.delta2);
    const double common = -2.0 * kappa * kappa / root + 0.5 * s * ratio;
    return {half_diff + common, -half_diff + common};
}

MasterCoefficients master_coefficients(const BogoliubovTransform& bt,
                                       const NormalModeFrequencies& f, const RateTable& r) {
    const double a2 = bt.alpha_sq();
    const double b2 = bt.beta_sq();
    MasterCoefficients mc;
    mc.A = f.alpha11 - a2 * (r.cap(2) + r.cap(4)) - b2 * (r.low(6) + r.low(8));
    mc.B = f.alpha22 - a2 * (r.low(2) + r.low(4)) - b2 * (r.cap(6) + r.cap(8));
    mc.C = a2 * r.cap(1);
    mc.D = b2 * r.low(7);
    mc.E = a2 * r.low(1);
    mc.F = b2 * r.cap(7);
    return mc;
}

MasterCoefficients master_coefficients(const SystemParams& p) {
    const Detunings d = detunings(p);
    const BogoliubovTransform bt = bogoliubov(d, p.kappa);
    const NormalModeFrequencies f = normal_mode_frequencies(d, p.kappa);
    return master_coefficients(bt, f, rate_table(p, f));
}

Occupations steady_occupations(const MasterCoefficients& mc) {
    if (!mc.steady_state_exists()) {
        throw Error(ErrorCode::no_steady_state,
                    "pump overcomes damping; no Gaussian steady state (C <= D or E <= F)");
    }
    const Occupations occ{mc.D / (mc.C - mc.D), mc.F / (mc.E - mc.F)};
    if (!(occ.n_l <= kMaxOccupation && occ.n_m <= kMaxOccupation)) {
        throw Error(ErrorCode::near_threshold,
                    "steady occupation above 1e12: too close to threshold");
    }
    return occ;
}

BareMoments bare_mode_moments(const BogoliubovTransform& bt, const Occupations& occ) {
    if (!(occ.n_l >= 0.0) || !(occ.n_m >= 0.0) || !std::isfinite(occ.n_l) ||
        !std::isfinite(occ.n_m)) {
        throw Error(ErrorCode::domain, "occupations must be finite and non-negative");
    }
    const double a2 = bt.alpha_sq();
    const double b2 = bt.beta_sq();
    BareMoments m;
    m.n_a = a2 * occ.n_l + b2 * (occ.n_m + 1.0);
    m.n_b = b2 * (occ.n_l + 1.0) + a2 * occ.n_m;
    m.ab = bt.alpha * std::conj(bt.beta) * (occ.n_l + 1.0) +
           std::conj(bt.alpha) * bt.beta * occ.n_m;
    return m;
}

SteadyState steady_state(const SystemParams& p) {
    const ValidationReport report = validate(p);
    if (!report.ok()) {
        const auto& first = report.issues.front();
        throw Error(first.code, first.message);
    }
    const Detunings d = detunings(p);
    const BogoliubovTransform bt = bogoliubov(d, p.kappa);
    SteadyState ss;
    ss.occupations = steady_occupations(master_coefficients(p));
    ss.moments = bare_mode_moments(bt, ss.occupations);
    return ss;
}

CharacteristicExponent characteristic_exponent(const BogoliubovTransform& bt,
                                               const Occupations& occ) {
    // Expand |ea a* - eb* b*|^2 and |eb a - ea* b|^2 term by term.
    const double wl = occ.n_l + 0.5;
    const double wm = occ.n_m + 0.5;
    const double a2 = bt.alpha_sq();
    const double b2 = bt.beta_sq();
    CharacteristicExponent ce;
    ce.P = wl * a2 + wm * b2 - 0.5;
    ce.Q = wl * b2 + wm * a2 - 0.5;
    ce.R = -(wl * std::conj(bt.alpha) * bt.beta + wm * bt.alpha * std::conj(bt.beta));
    return ce;
}

CharacteristicExponent characteristic_exponent(const BareMoments& m) {
    return {m.n_a, m.n_b, -std::conj(m.ab)};
}

}  // namespace drivedamp
