#ifndef RADEXT_KE_HPP
#define RADEXT_KE_HPP

#include "radext/family.hpp"
#include "radext/resolvability.hpp"

#include <optional>
#include <vector>

namespace radext {

/// Rationality data at the lower end y_inf of a KE profile.
struct KEDiagnostics {
    Rational lambda;
    Endpoint y_inf;
    /// n~ = psi'(y_inf) = n - (lambda/2) y_inf. Exact when y_inf is exact or
    /// lambda = 0; otherwise enclosed by n_tilde_enclosure.
    std::optional<Rational> n_tilde;
    std::optional<IsolatingInterval> n_tilde_enclosure;
    bool y_inf_integral = false;
    bool n_tilde_integral = false;
    /// floor(y_inf) + 2 when y_inf is not an integer; y_inf + floor(n~) + 2
    /// when y_inf is an integer root and n~ is not an integer.
    std::optional<int> predicted_obstruction_k;
};

/// NotKE if B != 0 or D != 0; NotInDomain unless psi(y0) > 0.
KEDiagnostics ke_invariants(const ExtremalParams& p, const Rational& y0);

/// For 2 <= k <= K, with n~ = psi'(y_root):
///   Q^1_k(y_root) = y_root (y_root - 1) ... (y_root - k + 1)
///   Q^1_k(y_root) + n~ Q^1_k'(y_root) = (y_root + n~ - k + 1) ... (y_root + n~)
/// NotARoot unless psi(y_root) = 0 exactly.
bool falling_factorial_check(const ExtremalParams& p, const Rational& y_root, int K);

/// Certificate that q < 0 on (a, a + delta).
struct NeighborhoodCertificate {
    Interval interval;
    Rational witness;
    Rational value;
    /// q has no root in the interval and is negative at the witness.
    bool strictly_negative = false;
};

/// delta starts at 1/8 of the distance from a to the next root of q (1 if
/// none) and is halved until a negative witness appears, at most 64 times.
NeighborhoodCertificate certify_negative_right_neighborhood(const LaurentPoly& q, const Rational& a);

struct PredictionCheck {
    int k = 0;
    /// Q^1_k and its derivative at y_inf; empty when y_inf is irrational.
    std::optional<Rational> value;
    std::optional<Rational> derivative;
    NeighborhoodCertificate neighborhood;
    /// The route's sign condition holds and the neighborhood is certified.
    bool sound = false;
};

/// Checks a fired prediction by exact evaluation; empty when none fired.
std::optional<PredictionCheck> verify_prediction(const ExtremalParams& p, const KEDiagnostics& diag);

struct StabilityEntry {
    Rational alpha;
    ObstructionReport report;
    /// lambda / alpha when the scaled metric is KE.
    std::optional<Rational> lambda;
};

/// eps = +1 scan of scale_params(p, alpha) over the positivity domain around
/// alpha * anchor (the domain of p scaled by alpha). NonPositiveScale for any
/// alpha <= 0.
std::vector<StabilityEntry> stability_scan(
    const ExtremalParams& p, const std::vector<Rational>& alphas, const Rational& anchor, int K);

} // namespace radext

#endif
