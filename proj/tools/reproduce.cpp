#include "reproduce.hpp"

#include "radext/error.hpp"
#include "radext/ke.hpp"
#include "radext/profile.hpp"
#include "radext/registry.hpp"
#include "radext/resolvability.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace radext::cli {

namespace {

struct Outcome {
    bool holds = false;
    std::string value;
};

using Check = std::function<Outcome(const ExampleEntry&, double)>;

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

const Interval kPositiveAxis = Interval::positive_axis();

Interval from(long lo) { return Interval::open(Rational(lo), std::nullopt); }

std::string verdict_text(const ObstructionReport& r)
{
    if (const auto* hit = std::get_if<ObstructedAt>(&r.verdict))
        return "obstructed at k=" + std::to_string(hit->k) + " (witness " + to_string(hit->witness) + ")";
    if (const auto* z = std::get_if<IdenticallyZeroFrom>(&r.verdict))
        return "identically zero from k=" + std::to_string(z->k);
    return "clear up to K=" + std::to_string(std::get<ClearUpTo>(r.verdict).K);
}

// Largest deviation of the numeric profile from the closed forms, after
// aligning f at the anchor.
Outcome potential_round_trip(const ExampleEntry& e, double tol)
{
    const double t0 = std::log(e.anchor_r);
    ProfileOptions opts;
    opts.tol = tol;
    const int count = 101;
    for (int i = 0; i < count; ++i) {
        const double r = e.r_lo + (e.r_hi - e.r_lo) * i / (count - 1);
        opts.sample_times.push_back(std::log(r));
    }
    const double t_lo = std::min(opts.sample_times.front(), t0);
    const double t_hi = std::max(opts.sample_times.back(), t0);
    const MetricProfile prof = integrate_profile(e.params, e.anchor_y.get_d(), t0, {t_lo, t_hi}, opts);
    const double offset = e.potential(e.anchor_r);
    double worst = 0.0;
    for (const auto& s : prof.samples) {
        worst = std::max(worst, std::abs(s.f - (e.potential(s.r) - offset)));
        worst = std::max(worst, std::abs(s.y - e.y_of_r(s.r)));
    }
    const bool complete = static_cast<int>(prof.samples.size()) == count;
    return {complete && worst <= 1e-8, "max deviation " + fmt(worst) + " over " + std::to_string(prof.samples.size()) + " samples"};
}

Outcome is_class(const ExampleEntry& e, const MetricClass& expected)
{
    const MetricClass got = classify(e.params);
    Json j = got;
    return {got == expected, j.dump()};
}

Outcome lower_end(const ExampleEntry& e, bool expect_well_behaved)
{
    const DomainEndpoints ends = domain_endpoints(e.params, e.anchor_y);
    return {ends.well_behaved == expect_well_behaved, "y_inf = " + to_string(ends.domain.lo)};
}

Outcome lower_root_is(const ExampleEntry& e, long root)
{
    const DomainEndpoints ends = domain_endpoints(e.params, e.anchor_y);
    const bool ok = !ends.well_behaved && ends.domain.lo.kind == Endpoint::Kind::ExactRoot && ends.domain.lo.value == root;
    return {ok, "y_inf = " + to_string(ends.domain.lo)};
}

Outcome scan_clear(const ExtremalParams& p, std::initializer_list<int> signs, const Interval& domain, int K)
{
    bool ok = true;
    std::string value;
    for (const int e : signs) {
        const ObstructionReport r = obstruction_scan(p, ambient_sign(e), domain, K);
        ok = ok && std::holds_alternative<ClearUpTo>(r.verdict);
        value += (value.empty() ? "" : "; ") + std::string("eps=") + std::to_string(e) + ": " + verdict_text(r);
    }
    return {ok, value};
}

Outcome scan_obstructed(const ExtremalParams& p, std::initializer_list<int> signs, const Interval& domain, int K,
    std::optional<int> at = std::nullopt)
{
    bool ok = true;
    std::string value;
    for (const int e : signs) {
        const ObstructionReport r = obstruction_scan(p, ambient_sign(e), domain, K);
        const auto* hit = std::get_if<ObstructedAt>(&r.verdict);
        ok = ok && hit && (!at || hit->k == *at);
        value += (value.empty() ? "" : "; ") + std::string("eps=") + std::to_string(e) + ": " + verdict_text(r);
    }
    return {ok, value};
}

ExtremalParams with_dimension(ExtremalParams p, int n)
{
    p.n = n;
    return p;
}

std::map<std::string, Check> exfond_checks()
{
    return {
        {"extremal_not_cscK",
            [](const ExampleEntry& e, double) { return is_class(e, ExtremalProper{Rational(-12), Rational(-6)}); }},
        {"well_behaved", [](const ExampleEntry& e, double) { return lower_end(e, true); }},
        {"closed_form_potential", potential_round_trip},
        {"series_coefficients",
            [](const ExampleEntry&, double) {
                const auto a = exfond_coefficients(200);
                bool ok = a[0] == 1 && a[1] == 1 && a[2] == 2;
                for (const auto& c : a)
                    ok = ok && c > 0;
                // Partial sum against (1 - sqrt(1-4r))/2 at r = 1/10.
                double sum = 0.0;
                double rk = 1.0;
                for (const auto& c : a) {
                    rk *= 0.1;
                    sum += c.get_d() * rk;
                }
                const double gap = std::abs(sum - (1.0 - std::sqrt(0.6)) / 2.0);
                return Outcome{ok && gap < 1e-12, "a_1..a_4 = 1, 1, 2, " + to_string(a[3]) + "; series gap at r=1/10: " + fmt(gap)};
            }},
        {"hyperbolic_induced",
            [](const ExampleEntry& e, double) {
                const DetReport det = det_test_dim1(e.params, AmbientSign::Minus, 3, kPositiveAxis);
                Outcome scan = scan_clear(with_dimension(e.params, 2), {-1}, kPositiveAxis, 12);
                scan.holds = scan.holds && !det.first_violation;
                scan.value = std::string("n=1 determinants I<=3: ") + (det.first_violation ? "violated" : "clear") + "; n=2 " + scan.value;
                return scan;
            }},
        {"flat_and_projective_induced",
            [](const ExampleEntry& e, double) {
                bool det_ok = true;
                for (const int s : {0, 1})
                    det_ok = det_ok && !det_test_dim1(e.params, ambient_sign(s), 3, kPositiveAxis).first_violation;
                Outcome scan = scan_clear(with_dimension(e.params, 2), {0, 1}, kPositiveAxis, 12);
                scan.holds = scan.holds && det_ok;
                scan.value = std::string("n=1 determinants I<=3: ") + (det_ok ? "clear" : "violated") + "; n=2 " + scan.value;
                return scan;
            }},
    };
}

std::map<std::string, Check> burns_simanca_checks()
{
    return {
        {"scalar_flat", [](const ExampleEntry& e, double) { return is_class(e, CscK{Rational(0)}); }},
        {"not_well_behaved", [](const ExampleEntry& e, double) { return lower_root_is(e, 1); }},
        {"closed_form_potential", potential_round_trip},
        {"projectively_induced", [](const ExampleEntry& e, double) { return scan_clear(e.params, {1}, from(1), 15); }},
        {"not_induced_nonpositive",
            [](const ExampleEntry& e, double) { return scan_obstructed(e.params, {0, -1}, from(1), 2, 2); }},
    };
}

std::map<std::string, Check> partbal_checks()
{
    return {
        {"cscK_not_KE", [](const ExampleEntry& e, double) { return is_class(e, CscK{Rational(-6)}); }},
        {"not_well_behaved", [](const ExampleEntry& e, double) { return lower_root_is(e, 1); }},
        {"negative_scalar_curvature",
            [](const ExampleEntry& e, double) {
                const ScalarCurvature sc = scalar_curvature(e.params);
                return Outcome{sc.gamma1 == 0 && sc.gamma2 < 0, "s = " + sc.s.to_string()};
            }},
        {"scalar_curvature_value",
            [](const ExampleEntry& e, double) {
                const ScalarCurvature sc = scalar_curvature(e.params);
                return Outcome{sc.s == LaurentPoly(Rational(-24)), "s = " + sc.s.to_string() + " (stated -24)"};
            }},
        {"projectively_induced", [](const ExampleEntry& e, double) { return scan_clear(e.params, {1}, from(1), 12); }},
        {"closed_form_potential", potential_round_trip},
    };
}

std::map<std::string, Check> ricci_flat_neg_checks()
{
    return {
        {"ricci_flat", [](const ExampleEntry& e, double) { return is_class(e, KahlerEinstein{Rational(0)}); }},
        {"well_behaved",
            [](const ExampleEntry& e, double tol) {
                Outcome o = lower_end(e, true);
                // y reaches 0 in finite time; the closed form puts it at r = 1.
                const double t_end = integrate_to_lower_end(e.params, e.anchor_y.get_d(), std::log(e.anchor_r), -10.0, tol);
                o.holds = o.holds && std::abs(t_end) < 1e-6;
                o.value += "; r_inf = " + fmt(std::exp(t_end));
                return o;
            }},
        {"closed_form_potential", potential_round_trip},
        {"not_projectively_induced",
            [](const ExampleEntry& e, double) { return scan_obstructed(e.params, {1}, kPositiveAxis, 12); }},
    };
}

std::map<std::string, Check> eguchi_hanson_checks()
{
    return {
        {"ricci_flat", [](const ExampleEntry& e, double) { return is_class(e, KahlerEinstein{Rational(0)}); }},
        {"not_well_behaved", [](const ExampleEntry& e, double) { return lower_root_is(e, 1); }},
        {"closed_form_potential", potential_round_trip},
        {"non_integer_multiples_obstructed",
            [](const ExampleEntry& e, double) {
                const std::vector<Rational> grid = {Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(7, 3)};
                bool ok = true;
                std::string value;
                for (const auto& entry : stability_scan(e.params, grid, e.anchor_y, 12)) {
                    ok = ok && is_obstructed(entry.report);
                    value += (value.empty() ? "" : "; ") + std::string("alpha=") + to_string(entry.alpha) + ": " + verdict_text(entry.report);
                }
                return Outcome{ok, value};
            }},
        {"not_projectively_induced",
            [](const ExampleEntry& e, double) { return scan_obstructed(e.params, {1}, from(1), 12); }},
    };
}

std::map<std::string, Check> exkenwb_checks()
{
    return {
        {"einstein_constant", [](const ExampleEntry& e, double) { return is_class(e, KahlerEinstein{Rational(-2)}); }},
        {"not_well_behaved", [](const ExampleEntry& e, double) { return lower_root_is(e, 1); }},
        {"displayed_psi",
            [](const ExampleEntry& e, double) {
                const LaurentPoly displayed = LaurentPoly::from_terms(
                    {{1, Rational(1)}, {-1, Rational(-4, 3)}, {2, Rational(-1, 3)}});
                const LaurentPoly psi = build_psi(e.params);
                return Outcome{displayed == psi, "psi = " + psi.to_string()};
            }},
        {"closed_form_trajectory",
            [](const ExampleEntry& e, double tol) {
                const double t0 = std::log(e.anchor_r);
                ProfileOptions opts;
                opts.tol = tol;
                opts.samples = 101;
                const MetricProfile prof
                    = integrate_profile(e.params, e.anchor_y.get_d(), t0, {std::log(e.r_lo), std::log(e.r_hi)}, opts);
                double worst = 0.0;
                for (const auto& s : prof.samples)
                    worst = std::max(worst, std::abs(s.r - kenwb_r_of_y(s.y)));
                return Outcome{prof.samples.size() == 101 && worst <= 1e-8, "max |r - F(y)| = " + fmt(worst)};
            }},
        {"q11_negative",
            [](const ExampleEntry& e, double) {
                const QSequence seq(e.params, AmbientSign::Plus, 11);
                const NeighborhoodCertificate c = certify_negative_right_neighborhood(seq[11], 1);
                return Outcome{c.strictly_negative,
                    "Q^1_11 < 0 on " + to_string(c.interval) + ", witness " + to_string(c.witness)};
            }},
    };
}

std::map<std::string, Check> exrinf_checks()
{
    return {
        {"einstein_constant", [](const ExampleEntry& e, double) { return is_class(e, KahlerEinstein{Rational(12)}); }},
        {"well_behaved", [](const ExampleEntry& e, double) { return lower_end(e, true); }},
        {"domain",
            [](const ExampleEntry& e, double) {
                const PositivityDomain d = positivity_domain(e.params, e.anchor_y);
                const bool ok = d.lo.kind == Endpoint::Kind::Zero && d.hi == Endpoint::exact(Rational(1));
                return Outcome{ok, to_string(d)};
            }},
        {"finite_t_inf",
            [](const ExampleEntry& e, double tol) {
                const double t_end = integrate_to_lower_end(e.params, e.anchor_y.get_d(), std::log(e.anchor_r), -10.0, tol);
                return Outcome{t_end > -5.0, "t_inf = " + fmt(t_end)};
            }},
        {"closed_form_F_and_r_inf",
            [](const ExampleEntry& e, double tol) {
                // Slope of the displayed F against 1/psi, by central differences.
                const double y = 0.5;
                const double h = 1e-6;
                const double slope = (rinf_displayed_F(y + h) - rinf_displayed_F(y - h)) / (2 * h);
                const double inv_psi = 1.0 / build_psi(e.params).eval(y);
                const double t_end = integrate_to_lower_end(e.params, e.anchor_y.get_d(), std::log(e.anchor_r), -10.0, tol);
                const double stated = -3.0 / std::sqrt(7.0) * std::atan(1.0 / std::sqrt(7.0));
                const bool ok = std::abs(slope - inv_psi) < 1e-6 && std::abs(t_end - stated) < 1e-6;
                return Outcome{ok, "F'(1/2) = " + fmt(slope) + " vs 1/psi(1/2) = " + fmt(inv_psi) + "; t_inf = " + fmt(t_end)
                        + " vs stated " + fmt(stated)};
            }},
        {"not_induced",
            [](const ExampleEntry& e, double) {
                const Interval unit = positivity_domain(e.params, e.anchor_y).inner();
                return scan_obstructed(e.params, {-1, 0, 1}, unit, 12);
            }},
    };
}

std::map<std::string, Check> checks_for(const std::string& id)
{
    if (id == "exfond")
        return exfond_checks();
    if (id == "burns-simanca")
        return burns_simanca_checks();
    if (id == "partbal")
        return partbal_checks();
    if (id == "ricci-flat-neg")
        return ricci_flat_neg_checks();
    if (id == "eguchi-hanson")
        return eguchi_hanson_checks();
    if (id == "exKENWB")
        return exkenwb_checks();
    if (id == "exrinf")
        return exrinf_checks();
    throw Error(ErrorCode::UnknownExample, "no example named '" + id + "'");
}

} // namespace

Json reproduce(const std::string& id, double tol)
{
    const ExampleEntry entry = builtin_profile(id);
    const auto checks = checks_for(id);
    Json claims = Json::array();
    int discrepancies = 0;
    for (const Claim& claim : entry.claims) {
        const auto it = checks.find(claim.id);
        if (it == checks.end())
            throw Error(ErrorCode::InvalidArgument, "claim '" + claim.id + "' has no check");
        const Outcome outcome = it->second(entry, tol);
        const ClaimStatus status = outcome.holds ? ClaimStatus::Confirmed : ClaimStatus::Discrepant;
        if (status == ClaimStatus::Discrepant)
            ++discrepancies;
        Json c = claim;
        c["status"] = to_string(status);
        c["recorded_status"] = to_string(claim.status);
        c["computed"] = outcome.value;
        claims.push_back(std::move(c));
    }
    return {{"id", entry.id}, {"title", entry.title}, {"params", entry.params}, {"claims", claims},
        {"discrepancies", discrepancies}};
}

int discrepancy_count(const Json& report) { return report.at("discrepancies").get<int>(); }

} // namespace radext::cli
