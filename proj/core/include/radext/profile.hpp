#ifndef RADEXT_PROFILE_HPP
#define RADEXT_PROFILE_HPP

#include "radext/family.hpp"
#include "radext/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace radext {

struct ProfileSample {
    double t = 0.0;
    double r = 0.0;
    double y = 0.0;
    double f = 0.0;
    double s = 0.0;
};

struct ProfileOptions {
    /// Absolute and relative tolerance of the embedded RK7(8) controller.
    double tol = 1e-9;
    /// Uniform sample count over t_range, ignored when sample_times is set.
    int samples = 201;
    /// Explicit sample times inside t_range; sorted internally.
    std::vector<double> sample_times;
    long max_steps = 2'000'000;
};

/// Trajectory of dy/dt = psi(y), df/dt = y with f = 0 at the anchor time t0.
/// Samples past an endpoint of the positivity domain are dropped, so the
/// profile may cover less than the requested range.
struct MetricProfile {
    ExtremalParams params;
    double t0 = 0.0;
    double tol = 1e-9;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    std::vector<ProfileSample> samples;
    /// True when the backward (forward) leg stopped before its last sample.
    bool clipped_below = false;
    bool clipped_above = false;
    /// Earliest and latest t actually reached.
    double t_min = 0.0;
    double t_max = 0.0;
};

/// NotInDomain if psi(y0) <= 0 or y0 <= 0; InvalidArgument unless t0 lies in
/// t_range; StepFailure if max_steps is exhausted.
MetricProfile integrate_profile(const ExtremalParams& p, double y0, double t0, std::pair<double, double> t_range,
    const ProfileOptions& options = {});

/// Integrates towards the lower end of the domain until psi drops below tol
/// or y leaves the domain, and returns the time reached. Finite when the end
/// is reached in finite time.
double integrate_to_lower_end(const ExtremalParams& p, double y0, double t0, double t_floor, double tol = 1e-9);

struct DomainEndpoints {
    PositivityDomain domain;
    bool well_behaved = false;
    std::string note_lo;
    std::string note_hi;
};

/// NotInDomain if psi(y0) <= 0.
DomainEndpoints domain_endpoints(const ExtremalParams& p, const Rational& y0);

/// max |s - (gamma1 y + gamma2)| over the samples.
double extremality_residual(const MetricProfile& profile);

/// g_k(r0) = Q_k^eps(y0) / r0^k for k = 1..K. NotInDomain unless psi(y0) > 0.
std::vector<Rational> interior_series(
    const ExtremalParams& p, AmbientSign eps, const Rational& r0, const Rational& y0, int K);

/// a_k = 4^k |binom(1/2, k)| / 2, k = 1..K: coefficients of 1 - e^(-f) for
/// the potential f = log[(1 - sqrt(1-4r)) / (2r)].
std::vector<Rational> exfond_coefficients(int K);

} // namespace radext

#endif
