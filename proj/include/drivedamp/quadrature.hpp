#pragma once

#include <cstddef>
#include <functional>

namespace drivedamp::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;      // estimated absolute error
    std::size_t intervals = 0;
    bool converged = false;
};

struct Options {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    std::size_t max_intervals = 2000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 10-point Gauss / 21-point Kronrod rule on [a, b]: the
/// interval with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol * |I|).
Result gauss_kronrod(const Integrand& f, double a, double b, const Options& opt = {});

/// Integral over [a, inf) through the map x = a + t / (1 - t), t in [0, 1).
Result gauss_kronrod_semi_infinite(const Integrand& f, double a, const Options& opt = {});

/// Cauchy principal value of  P int_a^inf f(x) / (x - pole) dx  for a < pole.
/// The symmetric window [a, 2*pole - a] is handled by subtracting f(pole),
/// whose odd kernel integrates to zero there; the remainder is regular.
Result principal_value_semi_infinite(const Integrand& f, double pole, double a,
                                     const Options& opt = {});

}  // namespace drivedamp::quad
