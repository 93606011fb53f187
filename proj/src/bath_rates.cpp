#include "drivedamp/bath_rates.hpp"

#include <cmath>
#include <numbers>

#include "drivedamp/errors.hpp"
#include "drivedamp/model.hpp"
#include "drivedamp/quadrature.hpp"
#include "drivedamp/steady_state.hpp"

namespace drivedamp {

namespace {

void check_density(const SpectralDensity& J) {
    if (!(J.zeta >= 0.0) || !std::isfinite(J.zeta) || !(J.nu > 0.0) || !std::isfinite(J.nu)) {
        throw Error(ErrorCode::invalid_parameter,
                    "spectral density needs zeta >= 0 and nu > 0");
    }
}

double density(const SpectralDensity& J, double omega) {
    return J.zeta * omega / (J.nu * J.nu + omega * omega);
}

}  // namespace

double spectral_density(const SpectralDensity& J, double omega) {
    check_density(J);
    if (!(omega >= 0.0)) {
        throw Error(ErrorCode::domain, "spectral density is defined for omega >= 0");
    }
    return density(J, omega);
}

std::complex<double> half_fourier_rate(const SpectralDensity& J, double omega) {
    check_density(J);
    if (!std::isfinite(omega)) {
        throw Error(ErrorCode::domain, "rate frequency must be finite");
    }
    if (omega == 0.0) {
        throw Error(ErrorCode::singular_frequency,
                    "rate integral evaluated at zero frequency (Lamb shift diverges)");
    }
    if (J.zeta == 0.0) return {0.0, 0.0};

    const double pi = std::numbers::pi;
    const double denom = J.nu * J.nu + omega * omega;
    const double re = omega > 0.0 ? pi * density(J, omega) : 0.0;
    const double im =
        J.zeta * (pi * J.nu / (2.0 * denom) - omega * std::log(std::abs(omega) / J.nu) / denom);
    return {re, im};
}

double lamb_shift_by_quadrature(const SpectralDensity& J, double omega) {
    check_density(J);
    if (omega == 0.0 || !std::isfinite(omega)) {
        throw Error(ErrorCode::singular_frequency, "principal value needs a non-zero frequency");
    }
    const auto j = [&](double w) { return density(J, w); };
    const quad::Options opt{1e-15 * (J.zeta + 1e-300), 1e-13, 4000};
    if (omega < 0.0) {
        return quad::gauss_kronrod_semi_infinite([&](double w) { return j(w) / (w - omega); }, 0.0,
                                                 opt)
            .value;
    }
    return quad::principal_value_semi_infinite(j, omega, 0.0, opt).value;
}

double RateTable::cap(int k) const {
    if (k < 1 || k > 8) throw Error(ErrorCode::domain, "rate index must be in 1..8");
    const auto& v = bath1[(k - 1) / 2].value;
    return k % 2 == 1 ? v.real() : v.imag();
}

double RateTable::low(int k) const {
    if (k < 1 || k > 8) throw Error(ErrorCode::domain, "rate index must be in 1..8");
    const auto& v = bath2[(k - 1) / 2].value;
    return k % 2 == 1 ? v.real() : v.imag();
}

RateTable rate_table(const SystemParams& p, const NormalModeFrequencies& f) {
    const SpectralDensity j1{p.zeta1, p.nu1};
    const SpectralDensity j2{p.zeta2, p.nu2};
    const double wp = p.omega_p;

    const auto entry = [](std::string_view label, const SpectralDensity& J, double w) {
        return RateEntry{label, w, half_fourier_rate(J, w)};
    };

    RateTable t;
    t.bath1 = {entry("Gamma1+iGamma2", j1, wp + f.alpha11),
               entry("Gamma3+iGamma4", j1, -(wp + f.alpha11)),
               entry("Gamma5+iGamma6", j1, -(wp - f.alpha22)),
               entry("Gamma7+iGamma8", j1, wp - f.alpha22)};
    t.bath2 = {entry("gamma1+igamma2", j2, wp + f.alpha22),
               entry("gamma3+igamma4", j2, -(wp + f.alpha22)),
               entry("gamma5+igamma6", j2, -(wp - f.alpha11)),
               entry("gamma7+igamma8", j2, wp - f.alpha11)};
    return t;
}

}  // namespace drivedamp
