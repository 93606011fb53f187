#pragma once

#include <cmath>
#include <random>

#include "drivedamp/model.hpp"

namespace testing {

inline drivedamp::SystemParams symmetric_point(double zeta1, double zeta2) {
    drivedamp::SystemParams p;
    p.kappa = 1.8;
    p.zeta1 = zeta1;
    p.zeta2 = zeta2;
    return p;
}

inline drivedamp::SystemParams asymmetric_point(double zeta1, double zeta2) {
    drivedamp::SystemParams p;
    p.omega_b = 0.6;
    p.kappa = 1.84;
    p.zeta1 = zeta1;
    p.zeta2 = zeta2;
    return p;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

inline double rel_diff(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace testing
