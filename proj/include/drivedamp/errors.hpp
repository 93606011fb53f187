#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drivedamp {

enum class ErrorCode {
    invalid_parameter,
    parametric_instability,  // (Δ1+Δ2)^2 <= 4κ^2, Bogoliubov coefficients not real
    singular_frequency,      // a rate integral evaluated exactly at zero frequency
    no_steady_state,         // C <= D or E <= F
    near_threshold,          // steady occupation beyond numerical meaningfulness
    unphysical_state,        // covariance violates the uncertainty relation
    non_convergence,
    domain,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace drivedamp
