#pragma once

#include <array>
#include <complex>
#include <string_view>

namespace drivedamp {

struct SystemParams;
struct NormalModeFrequencies;

/// Drude-Lorentz spectral density J(w) = zeta * w / (nu^2 + w^2).
struct SpectralDensity {
    double zeta = 0.0;
    double nu = 1.0;
};

/// J(omega); omega must be non-negative.
double spectral_density(const SpectralDensity& J, double omega);

/// One-sided Fourier transform of the zero-temperature bath correlation,
///
///   R(w) = int_0^inf dt int_0^inf dW J(W) exp(i (W - w) t)
///        = pi J(w) Theta(w) + i P int_0^inf J(W) / (W - w) dW.
///
/// The real part is the dissipative rate, the imaginary part the Lamb shift:
///
///   Im R(w) = zeta [ pi nu / (2 (nu^2 + w^2)) - w ln(|w| / nu) / (nu^2 + w^2) ].
///
/// Throws Error(singular_frequency) for w == 0, where the logarithm diverges.
std::complex<double> half_fourier_rate(const SpectralDensity& J, double omega);

/// Im R(w) by adaptive principal-value quadrature of P int J(W) / (W - w) dW.
/// Independent of the closed form; used by the verification suite.
double lamb_shift_by_quadrature(const SpectralDensity& J, double omega);

/// One rate integral together with the frequency it was evaluated at.
struct RateEntry {
    std::string_view label;  // e.g. "Gamma1+iGamma2"
    double frequency = 0.0;
    std::complex<double> value;
};

/// The sixteen real bath integrals, stored as eight complex pairs.
///
/// bath1 pairs (J1):  Γ1+iΓ2 at  (ωp+α11),  Γ3+iΓ4 at -(ωp+α11),
///                    Γ5+iΓ6 at -(ωp-α22),  Γ7+iΓ8 at  (ωp-α22)
/// bath2 pairs (J2):  γ1+iγ2 at  (ωp+α22),  γ3+iγ4 at -(ωp+α22),
///                    γ5+iγ6 at -(ωp-α11),  γ7+iγ8 at  (ωp-α11)
struct RateTable {
    std::array<RateEntry, 4> bath1;
    std::array<RateEntry, 4> bath2;

    /// Γ_k for k = 1..8 (odd k real parts, even k imaginary parts).
    double cap(int k) const;
    /// γ_k for k = 1..8.
    double low(int k) const;
};

RateTable rate_table(const SystemParams& p, const NormalModeFrequencies& freqs);

}  // namespace drivedamp
