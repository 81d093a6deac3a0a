#include "radext/profile.hpp"

#include "radext/error.hpp"
#include "radext/resolvability.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace radext {

namespace {

namespace odeint = boost::numeric::odeint;

using State = std::array<double, 2>; // (y, f)

// Dense double copy of a Laurent polynomial for fast evaluation.
class Evaluator {
public:
    explicit Evaluator(const LaurentPoly& p)
    {
        for (const auto& [e, c] : p.terms())
            terms_.emplace_back(e, c.get_d());
    }

    double operator()(double y) const
    {
        double acc = 0.0;
        for (const auto& [e, c] : terms_)
            acc += c * std::pow(y, e);
        return acc;
    }

private:
    std::vector<std::pair<int, double>> terms_;
};

struct Trajectory {
    Evaluator psi;
    double lo;
    double hi;
    double tol;

    bool valid(const State& x) const
    {
        const double y = x[0];
        return std::isfinite(y) && std::isfinite(x[1]) && y > lo && y < hi && psi(y) > 0.0;
    }

    bool at_end(const State& x) const { return psi(x[0]) < tol; }
};

// Moves (s, x) forward to s_target under dx/ds = sys(x). Returns false when
// the trajectory reached an end of the domain first.
template <class System, class Stepper>
bool advance(const System& sys, Stepper& stepper, const Trajectory& traj, State& x, double& s, double s_target,
    double& ds, long& steps, long max_steps)
{
    while (s < s_target) {
        if (traj.at_end(x))
            return false;
        const double remaining = s_target - s;
        const bool landing = ds >= remaining;
        const double h = landing ? remaining : ds;
        const double min_step = 1e-13 * std::max(1.0, std::abs(s));

        State trial = x;
        double s_trial = s;
        double h_trial = h;
        if (++steps > max_steps)
            throw Error(ErrorCode::StepFailure, "profile integration exceeded " + std::to_string(max_steps) + " steps");
        const auto result = stepper.try_step(sys, trial, s_trial, h_trial);
        if (result == odeint::fail) {
            ds = h_trial;
            if (ds < min_step)
                return false;
            continue;
        }
        if (!traj.valid(trial)) {
            ds = h / 2;
            if (ds < min_step)
                return false;
            continue;
        }
        x = trial;
        s = landing ? s_target : s_trial;
        ds = landing ? std::max(ds, h_trial) : h_trial;
    }
    return true;
}

struct Domain {
    double lo;
    double hi;
};

Domain domain_around(const ExtremalParams& p, double y0)
{
    const PositivityDomain d = positivity_domain(p, Rational(y0));
    auto lower = [](const Endpoint& e) {
        if (e.kind == Endpoint::Kind::IsolatedRoot)
            return e.enclosure.lo.get_d();
        return e.approx();
    };
    auto upper = [](const Endpoint& e) {
        if (e.kind == Endpoint::Kind::IsolatedRoot)
            return e.enclosure.hi.get_d();
        return e.approx();
    };
    return {lower(d.lo), upper(d.hi)};
}

void check_anchor(const ExtremalParams& p, double y0)
{
    if (!(y0 > 0.0) || !std::isfinite(y0) || Evaluator(build_psi(p))(y0) <= 0.0)
        throw Error(ErrorCode::NotInDomain, "psi is not positive at y0 = " + std::to_string(y0));
}

} // namespace

MetricProfile integrate_profile(
    const ExtremalParams& p, double y0, double t0, std::pair<double, double> t_range, const ProfileOptions& options)
{
    check_anchor(p, y0);
    const auto [t_lo, t_hi] = t_range;
    if (!(t_lo <= t0 && t0 <= t_hi))
        throw Error(ErrorCode::InvalidArgument, "anchor time outside the requested range");
    if (!(options.tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

    const LaurentPoly psi_poly = build_psi(p);
    const ScalarCurvature sc = scalar_curvature(p);
    const int n = p.n;
    const Evaluator w2(psi_poly.shifted(n - 1).derivative().derivative());
    auto scalar = [&](double y) { return n * (n - 1) / y - std::pow(y, 1 - n) * w2(y); };

    const Domain dom = domain_around(p, y0);
    const Trajectory traj{Evaluator(psi_poly), dom.lo, dom.hi, options.tol};

    std::vector<double> times = options.sample_times;
    if (times.empty()) {
        const int count = std::max(options.samples, 2);
        for (int i = 0; i < count; ++i)
            times.push_back(t_lo + (t_hi - t_lo) * i / (count - 1));
    }
    std::sort(times.begin(), times.end());

    MetricProfile out;
    out.params = p;
    out.t0 = t0;
    out.tol = options.tol;
    out.gamma1 = sc.gamma1.get_d();
    out.gamma2 = sc.gamma2.get_d();
    out.t_min = out.t_max = t0;

    auto sample = [&](double t, const State& x) {
        return ProfileSample{t, std::exp(t), x[0], x[1], scalar(x[0])};
    };

    long steps = 0;
    const auto forward = [&](const State& x, State& dxdt, double) {
        dxdt[0] = traj.psi(x[0]);
        dxdt[1] = x[0];
    };
    const auto backward = [&](const State& x, State& dxds, double) {
        dxds[0] = -traj.psi(x[0]);
        dxds[1] = -x[0];
    };

    // Backward leg in s = -t, collected in reverse order.
    std::vector<ProfileSample> before;
    {
        auto stepper = odeint::make_controlled(options.tol, options.tol, odeint::runge_kutta_fehlberg78<State>());
        State x{y0, 0.0};
        double s = -t0;
        double ds = 1e-3;
        for (auto it = times.rbegin(); it != times.rend(); ++it) {
            if (*it >= t0)
                continue;
            if (!advance(backward, stepper, traj, x, s, -*it, ds, steps, options.max_steps)) {
                out.clipped_below = true;
                break;
            }
            before.push_back(sample(*it, x));
        }
        out.t_min = -s;
    }
    out.samples.assign(before.rbegin(), before.rend());

    {
        auto stepper = odeint::make_controlled(options.tol, options.tol, odeint::runge_kutta_fehlberg78<State>());
        State x{y0, 0.0};
        double t = t0;
        double dt = 1e-3;
        for (const double target : times) {
            if (target < t0)
                continue;
            if (!advance(forward, stepper, traj, x, t, target, dt, steps, options.max_steps)) {
                out.clipped_above = true;
                break;
            }
            out.samples.push_back(sample(target, x));
        }
        out.t_max = t;
    }
    return out;
}

double integrate_to_lower_end(const ExtremalParams& p, double y0, double t0, double t_floor, double tol)
{
    check_anchor(p, y0);
    const LaurentPoly psi_poly = build_psi(p);
    const Domain dom = domain_around(p, y0);
    const Trajectory traj{Evaluator(psi_poly), dom.lo, dom.hi, tol};
    const auto backward = [&](const State& x, State& dxds, double) {
        dxds[0] = -traj.psi(x[0]);
        dxds[1] = -x[0];
    };
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
    State x{y0, 0.0};
    double s = -t0;
    double ds = 1e-3;
    long steps = 0;
    advance(backward, stepper, traj, x, s, -t_floor, ds, steps, 2'000'000);
    return -s;
}

DomainEndpoints domain_endpoints(const ExtremalParams& p, const Rational& y0)
{
    PositivityDomain d;
    try {
        d = positivity_domain(p, y0);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotInteriorPoint)
            throw Error(ErrorCode::NotInDomain, "psi is not positive at y0 = " + to_string(y0));
        throw;
    }
    DomainEndpoints out;
    out.well_behaved = d.lo.kind == Endpoint::Kind::Zero;
    out.note_lo = d.lo.is_root() ? "psi vanishes at y_inf = " + to_string(d.lo) : std::string("y_inf = 0");
    out.note_hi = d.hi.is_root() ? "psi vanishes at y_sup = " + to_string(d.hi) : std::string("y_sup = +inf");
    out.domain = std::move(d);
    return out;
}

double extremality_residual(const MetricProfile& profile)
{
    double worst = 0.0;
    for (const auto& s : profile.samples)
        worst = std::max(worst, std::abs(s.s - (profile.gamma1 * s.y + profile.gamma2)));
    return worst;
}

std::vector<Rational> interior_series(
    const ExtremalParams& p, AmbientSign eps, const Rational& r0, const Rational& y0, int K)
{
    if (r0 <= 0)
        throw Error(ErrorCode::InvalidArgument, "anchor radius must be positive");
    if (y0 <= 0 || build_psi(p).eval(y0) <= 0)
        throw Error(ErrorCode::NotInDomain, "psi is not positive at y0 = " + to_string(y0));
    const QSequence seq(p, eps, K);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(K));
    Rational r_pow = r0;
    for (int k = 1; k <= K; ++k) {
        out.emplace_back(seq[k].eval(y0) / r_pow);
        r_pow *= r0;
    }
    return out;
}

std::vector<Rational> exfond_coefficients(int K)
{
    if (K < 1)
        throw Error(ErrorCode::InvalidArgument, "K must be >= 1");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(K));
    Rational binom(1); // binom(1/2, k), updated in place
    Rational four_pow(1);
    const Rational half(1, 2);
    for (int k = 1; k <= K; ++k) {
        binom *= (half - (k - 1)) / k;
        four_pow *= 4;
        out.emplace_back(four_pow * abs(binom) / 2);
    }
    return out;
}

} // namespace radext
