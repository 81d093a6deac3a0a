#include "radext/registry.hpp"

#include "radext/error.hpp"

#include <cmath>

namespace radext {

namespace {

ExtremalParams params(const char* A, const char* B, const char* C, const char* D, int n)
{
    return {parse_rational(A), parse_rational(B), parse_rational(C), parse_rational(D), n};
}

Claim confirmed(std::string id, std::string statement) { return {std::move(id), std::move(statement), ClaimStatus::Confirmed, {}}; }

Claim discrepant(std::string id, std::string statement, std::string details)
{
    return {std::move(id), std::move(statement), ClaimStatus::Discrepant, std::move(details)};
}

ExampleEntry exfond()
{
    ExampleEntry e;
    e.id = "exfond";
    e.title = "extremal metric with psi = y(y+1)(2y+1), induced by the hyperbolic space form";
    e.params = params("0", "0", "-3", "-2", 1);
    e.potential = [](double r) { return std::log((1.0 - std::sqrt(1.0 - 4.0 * r)) / (2.0 * r)); };
    e.y_of_r = [](double r) {
        const double u = std::sqrt(1.0 - 4.0 * r);
        return (1.0 - u) / (2.0 * u);
    };
    e.r_lo = 0.01;
    e.r_hi = 0.24;
    e.anchor_y = 1;
    e.anchor_r = 2.0 / 9.0;
    e.claims = {
        confirmed("extremal_not_cscK", "extremal with D != 0, hence not cscK"),
        confirmed("well_behaved", "y -> 0 as r -> 0, so the metric is well-behaved"),
        confirmed("closed_form_potential", "f(r) = log[(1 - sqrt(1-4r))/(2r)] solves the profile ODE on 0 < r < 1/4"),
        confirmed("series_coefficients", "1 - e^(-f) = (1/2) sum 4^k |binom(1/2,k)| r^k with every coefficient positive"),
        confirmed("hyperbolic_induced", "no obstruction to an immersion into the hyperbolic space form (n = 1 determinants, n = 2 scan)"),
        confirmed("flat_and_projective_induced", "rescalings are induced by the flat and projective space forms: n = 2 scans clear"),
    };
    return e;
}

ExampleEntry burns_simanca()
{
    ExampleEntry e;
    e.id = "burns-simanca";
    e.title = "Burns-Simanca metric, psi = y - 1";
    e.params = params("0", "1", "0", "0", 2);
    e.potential = [](double r) { return r + std::log(r); };
    e.y_of_r = [](double r) { return r + 1.0; };
    e.r_lo = 0.01;
    e.r_hi = 10.0;
    e.anchor_y = 2;
    e.anchor_r = 1.0;
    e.claims = {
        confirmed("scalar_flat", "scalar flat and not Ricci flat"),
        confirmed("not_well_behaved", "r f'(r) = r + 1 -> 1 as r -> 0, so not well-behaved"),
        confirmed("closed_form_potential", "f(r) = r + log r solves the profile ODE"),
        confirmed("projectively_induced", "no obstruction to a projective immersion: Q^1_k >= 0 on (1, inf) for k <= 15"),
        confirmed("not_induced_nonpositive", "not induced by the flat or hyperbolic space form: obstructed at k = 2"),
    };
    return e;
}

ExampleEntry partbal()
{
    ExampleEntry e;
    e.id = "partbal";
    e.title = "cscK metric with potential log r - log(1 - r^3)";
    e.params = params("0", "2", "-1", "0", 2);
    e.potential = [](double r) { return std::log(r) - std::log(1.0 - r * r * r); };
    e.y_of_r = [](double r) {
        const double r3 = r * r * r;
        return (1.0 + 2.0 * r3) / (1.0 - r3);
    };
    e.r_lo = 0.05;
    e.r_hi = 0.9;
    e.anchor_y = 2;
    e.anchor_r = std::cbrt(0.25);
    e.claims = {
        confirmed("cscK_not_KE", "cscK and not Kahler-Einstein"),
        confirmed("not_well_behaved", "y -> 1 as r -> 0, so not well-behaved"),
        confirmed("negative_scalar_curvature", "the scalar curvature is negative"),
        discrepant("scalar_curvature_value", "the scalar curvature equals -24",
            "the scalar curvature formula gives s = n(n+1)C = -6 for psi = y^2 + y - 2"),
        confirmed("projectively_induced", "no obstruction to a projective immersion: Q^1_k >= 0 on (1, inf) for k <= 12"),
        confirmed("closed_form_potential", "f(r) = log r - log(1 - r^3) solves the profile ODE"),
    };
    return e;
}

ExampleEntry ricci_flat_neg()
{
    ExampleEntry e;
    e.id = "ricci-flat-neg";
    e.title = "Ricci-flat metric with A < 0, n = 2";
    e.params = params("-1", "0", "0", "0", 2);
    e.potential = [](double r) {
        const double u = std::sqrt(r * r - 1.0);
        return u - std::atan(u);
    };
    e.y_of_r = [](double r) { return std::sqrt(r * r - 1.0); };
    e.r_lo = 1.01;
    e.r_hi = 10.0;
    e.anchor_y = 1;
    e.anchor_r = std::sqrt(2.0);
    e.claims = {
        confirmed("ricci_flat", "Ricci flat (Kahler-Einstein with lambda = 0)"),
        confirmed("well_behaved", "r_inf = 1 and y -> 0 as r -> r_inf, so well-behaved"),
        confirmed("closed_form_potential", "f(r) = sqrt(r^2-1) - arctan sqrt(r^2-1) solves the profile ODE"),
        confirmed("not_projectively_induced", "not induced by the projective space form: some Q^1_k < 0 for k <= 12"),
    };
    return e;
}

ExampleEntry eguchi_hanson()
{
    ExampleEntry e;
    e.id = "eguchi-hanson";
    e.title = "Eguchi-Hanson metric, A = 1, n = 2";
    e.params = params("1", "0", "0", "0", 2);
    e.potential = [](double r) {
        const double u = std::sqrt(r * r + 1.0);
        return u + std::log(r) - std::log(1.0 + u);
    };
    e.y_of_r = [](double r) { return std::sqrt(r * r + 1.0); };
    e.r_lo = 0.01;
    e.r_hi = 10.0;
    e.anchor_y = 2;
    e.anchor_r = std::sqrt(3.0);
    e.claims = {
        confirmed("ricci_flat", "Ricci flat (Kahler-Einstein with lambda = 0)"),
        confirmed("not_well_behaved", "r_inf = 0 and y -> 1, so not well-behaved"),
        confirmed("closed_form_potential", "f(r) = sqrt(r^2+1) + ln r - ln(1 + sqrt(r^2+1)) solves the profile ODE"),
        confirmed("non_integer_multiples_obstructed", "alpha g is not projectively induced for non-integer alpha (grid 1/2, 3/2, 5/2, 7/3)"),
        confirmed("not_projectively_induced", "g itself is not projectively induced: some Q^1_k < 0 for k <= 12"),
    };
    return e;
}

ExampleEntry exkenwb()
{
    ExampleEntry e;
    e.id = "exKENWB";
    e.title = "KE metric with lambda = -2 that is not well-behaved";
    e.params = params("4/3", "0", "-1/3", "0", 2);
    e.r_lo = 0.05;
    e.r_hi = 0.9;
    e.anchor_y = 2;
    e.anchor_r = kenwb_r_of_y(2.0);
    e.claims = {
        confirmed("einstein_constant", "Kahler-Einstein with lambda = -2"),
        confirmed("not_well_behaved", "y -> 1 as r -> 0, so not well-behaved"),
        discrepant("displayed_psi", "psi(y) = y - 4/(3y) - y^2/3",
            "A = 4/3, C = -1/3 give psi = y - 4/(3y) + y^2/3 = (y-1)(y+2)^2/(3y); the displayed sign of y^2 is wrong"),
        confirmed("closed_form_trajectory", "r = e^(-2/(y+2)) ((y-1)/(y+2))^(1/3) along the profile"),
        confirmed("q11_negative", "Q^1_11 < 0 on a right neighborhood of y = 1, so not projectively induced"),
    };
    return e;
}

ExampleEntry exrinf()
{
    ExampleEntry e;
    e.id = "exrinf";
    e.title = "KE metric with lambda = 12 and r_inf != 0";
    e.params = params("-1", "0", "2", "0", 2);
    e.anchor_y = Rational(1, 2);
    e.anchor_r = std::exp(rinf_t_of_y(0.5));
    e.claims = {
        confirmed("einstein_constant", "Kahler-Einstein with lambda = 12"),
        confirmed("well_behaved", "y -> 0 as r -> r_inf, so well-behaved"),
        confirmed("domain", "the positivity domain of psi is (0, 1)"),
        confirmed("finite_t_inf", "t_inf is finite, so r_inf != 0"),
        discrepant("closed_form_F_and_r_inf",
            "t = log[sqrt(2y^2+y+1) / (1-y)^(1/4)] solves the ODE and r_inf = exp(-(3/sqrt 7) arctan(1/sqrt 7))",
            "dF/dy differs from 1/psi (F'(1/2) = 5/4, 1/psi(1/2) = 1/2); the ODE gives t_inf = -(3/(4 sqrt 7)) arctan(1/sqrt 7)"),
        confirmed("not_induced", "not induced by any space form: obstructed for eps = -1, 0, 1"),
    };
    return e;
}

} // namespace

std::string to_string(ClaimStatus status) { return status == ClaimStatus::Confirmed ? "confirmed" : "discrepant"; }

const std::vector<std::string>& example_ids()
{
    static const std::vector<std::string> ids = {
        "exfond", "burns-simanca", "partbal", "ricci-flat-neg", "eguchi-hanson", "exKENWB", "exrinf"};
    return ids;
}

ExampleEntry builtin_profile(std::string_view id)
{
    if (id == "exfond")
        return exfond();
    if (id == "burns-simanca")
        return burns_simanca();
    if (id == "partbal")
        return partbal();
    if (id == "ricci-flat-neg")
        return ricci_flat_neg();
    if (id == "eguchi-hanson")
        return eguchi_hanson();
    if (id == "exKENWB")
        return exkenwb();
    if (id == "exrinf")
        return exrinf();
    throw Error(ErrorCode::UnknownExample, "no example named '" + std::string(id) + "'");
}

double kenwb_r_of_y(double y) { return std::exp(-2.0 / (y + 2.0)) * std::cbrt((y - 1.0) / (y + 2.0)); }

double rinf_t_of_y(double y)
{
    const double s7 = std::sqrt(7.0);
    return std::log(2.0 * y * y + y + 1.0) / 8.0 - std::log(1.0 - y) / 4.0 - 3.0 / (4.0 * s7) * std::atan((4.0 * y + 1.0) / s7);
}

double rinf_displayed_F(double y) { return std::log(std::sqrt(2.0 * y * y + y + 1.0) / std::pow(1.0 - y, 0.25)); }

} // namespace radext
