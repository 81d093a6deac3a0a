#ifndef RADEXT_REGISTRY_HPP
#define RADEXT_REGISTRY_HPP

#include "radext/family.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace radext {

enum class ClaimStatus { Confirmed, Discrepant };

std::string to_string(ClaimStatus status);

/// One statement made about an example, with the status established by the
/// checks in `reproduce`.
struct Claim {
    std::string id;
    std::string statement;
    ClaimStatus status = ClaimStatus::Confirmed;
    std::string details;
};

/// A worked example: parameters, closed forms where they exist, and the
/// anchor (r0, y0) through which numeric profiles are integrated.
struct ExampleEntry {
    std::string id;
    std::string title;
    ExtremalParams params;
    /// Closed-form potential f(r) up to a constant; empty when none is known.
    std::function<double(double)> potential;
    /// Closed-form y(r) = r f'(r); empty when none is known.
    std::function<double(double)> y_of_r;
    /// r-range over which closed forms are compared with the profile.
    double r_lo = 0.0;
    double r_hi = 0.0;
    Rational anchor_y;
    double anchor_r = 1.0;
    std::vector<Claim> claims;
};

const std::vector<std::string>& example_ids();

/// UnknownExample if id is not registered.
ExampleEntry builtin_profile(std::string_view id);

/// r = F(y) = e^(-2/(y+2)) ((y-1)/(y+2))^(1/3), the closed-form inverse of
/// y(r) for the KE example with A = 4/3, C = -1/3, n = 2.
double kenwb_r_of_y(double y);

/// Exact antiderivative t(y) of 1/psi for psi = y + 1/y - 2y^2 on (0, 1),
/// normalized so that t(0) = -(3/(4 sqrt 7)) arctan(1/sqrt 7).
double rinf_t_of_y(double y);

/// The displayed closed form log[sqrt(2y^2+y+1) / (1-y)^(1/4)] for the same
/// example, kept to test it against the ODE.
double rinf_displayed_F(double y);

} // namespace radext

#endif
