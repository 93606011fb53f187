#pragma once

#include <complex>

#include "drivedamp/bath_rates.hpp"
#include "drivedamp/model.hpp"

namespace drivedamp {

/// a = alpha l + beta m^dag,  b^dag = beta l + alpha m^dag,  |alpha|^2 - |beta|^2 = 1.
/// alpha lies on the positive imaginary axis and beta on the negative one.
struct BogoliubovTransform {
    std::complex<double> alpha;
    std::complex<double> beta;

    double alpha_sq() const { return std::norm(alpha); }
    double beta_sq() const { return std::norm(beta); }
};

/// H_sys = alpha11 l^dag l + alpha22 m^dag m in the pump frame.
struct NormalModeFrequencies {
    double alpha11 = 0.0;
    double alpha22 = 0.0;
};

/// Coefficients of the secular master equation
///
///   drho/dt = -i[A l^dag l + B m^dag m, rho]
///             + C L[l] rho + D L[l^dag] rho + E L[m] rho + F L[m^dag] rho,
///   L[x] rho = 2 x rho x^dag - x^dag x rho - rho x^dag x.
struct MasterCoefficients {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double E = 0.0;
    double F = 0.0;

    bool steady_state_exists() const { return C > D && E > F; }
};

/// Steady occupations beyond this are reported as near_threshold.
inline constexpr double kMaxOccupation = 1e12;

struct Occupations {
    double n_l = 0.0;
    double n_m = 0.0;
};

/// Second moments of the bare modes. First moments vanish in the steady state.
struct BareMoments {
    double n_a = 0.0;                    // <a^dag a>
    double n_b = 0.0;                    // <b^dag b>
    std::complex<double> ab;             // <a b>
    std::complex<double> aa;             // <a a>
    std::complex<double> bb;             // <b b>
    std::complex<double> adag_b;         // <a^dag b>
};

struct SteadyState {
    Occupations occupations;
    BareMoments moments;
};

BogoliubovTransform bogoliubov(const Detunings& d, double kappa);

/// Normal-mode frequencies, evaluated term by term with the positive root:
///
///   alpha11 =  (Δ1-Δ2)/2 - 2κ^2/sqrt(S^2-4κ^2) + (S/2) |S|/sqrt(S^2-4κ^2)
///   alpha22 = -(Δ1-Δ2)/2 - 2κ^2/sqrt(S^2-4κ^2) + (S/2) |S|/sqrt(S^2-4κ^2)
///
/// with S = Δ1+Δ2.
NormalModeFrequencies normal_mode_frequencies(const Detunings& d, double kappa);

MasterCoefficients master_coefficients(const BogoliubovTransform& bt,
                                       const NormalModeFrequencies& freqs,
                                       const RateTable& rates);

/// Full chain from parameters. Does not throw on C <= D or E <= F; callers
/// check steady_state_exists().
MasterCoefficients master_coefficients(const SystemParams& p);

/// n_l = D/(C-D), n_m = F/(E-F).
Occupations steady_occupations(const MasterCoefficients& mc);

/// Bare-mode moments of the normal-mode thermal state through the inverse
/// Bogoliubov map.
BareMoments bare_mode_moments(const BogoliubovTransform& bt, const Occupations& occ);

SteadyState steady_state(const SystemParams& p);

/// Coefficients of the exponent of the normally ordered characteristic function
///
///   ln chi(ea, eb) = -P |ea|^2 - Q |eb|^2 - (R ea eb + conj(R) conj(ea eb))
///
/// which is the general form for zero-mean states with <aa> = <bb> = <a^dag b> = 0.
struct CharacteristicExponent {
    double P = 0.0;
    double Q = 0.0;
    std::complex<double> R;
};

/// Expand the closed-form steady-state characteristic function
///   exp[(|ea|^2+|eb|^2)/2] exp[-(n_l+1/2)|ea a* - eb* b*|^2] exp[-(n_m+1/2)|eb a - ea* b|^2]
/// into CharacteristicExponent form.
CharacteristicExponent characteristic_exponent(const BogoliubovTransform& bt,
                                               const Occupations& occ);

/// The same exponent read off a set of bare moments: P = <a^dag a>,
/// Q = <b^dag b>, R = -conj(<ab>).
CharacteristicExponent characteristic_exponent(const BareMoments& m);

}  // namespace drivedamp
