#include "radext/family.hpp"

#include "radext/error.hpp"

#include <limits>

namespace radext {

AmbientSign ambient_sign(int e)
{
    if (e < -1 || e > 1)
        throw Error(ErrorCode::InvalidArgument, "ambient sign must be -1, 0 or 1, got " + std::to_string(e));
    return static_cast<AmbientSign>(e);
}

std::string tag_name(const MetricClass& cls)
{
    struct Visitor {
        std::string operator()(const ConstHolSecCurv&) const { return "ConstHolSecCurv"; }
        std::string operator()(const KahlerEinstein&) const { return "KahlerEinstein"; }
        std::string operator()(const CscK&) const { return "CscK"; }
        std::string operator()(const ExtremalProper&) const { return "ExtremalProper"; }
    };
    return std::visit(Visitor{}, cls);
}

LaurentPoly build_psi(const ExtremalParams& p)
{
    if (p.n < 1)
        throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 1, got " + std::to_string(p.n));
    return LaurentPoly::from_terms({
        {1, Rational(1)},
        {1 - p.n, Rational(-p.A)},
        {2 - p.n, Rational(-p.B)},
        {2, Rational(-p.C)},
        {3, Rational(-p.D)},
    });
}

MetricClass classify(const ExtremalParams& p)
{
    const long n = p.n;
    if (p.A == 0 && p.B == 0 && p.D == 0)
        return ConstHolSecCurv{};
    if (p.B == 0 && p.D == 0)
        return KahlerEinstein{Rational(2 * (n + 1) * p.C)};
    if (p.D == 0)
        return CscK{Rational(n * (n + 1) * p.C)};
    return ExtremalProper{Rational((n + 1) * (n + 2) * p.D), Rational(n * (n + 1) * p.C)};
}

ScalarCurvature scalar_curvature(const ExtremalParams& p)
{
    const LaurentPoly psi = build_psi(p);
    const int n = p.n;
    const LaurentPoly w = psi.shifted(n - 1);
    LaurentPoly s = LaurentPoly::monomial(Rational(n * (n - 1)), -1) - w.derivative().derivative().shifted(1 - n);

    for (const auto& [e, c] : s.terms()) {
        if (e != 0 && e != 1)
            throw Error(ErrorCode::NonAffineScalar, "scalar curvature has a y^" + std::to_string(e) + " term: " + s.to_string());
    }
    LaurentPoly sigma = Rational(n - 1) * psi.shifted(-1) + psi.derivative();
    Rational gamma1 = s.coeff(1);
    Rational gamma2 = s.coeff(0);
    return {std::move(gamma1), std::move(gamma2), std::move(s), std::move(sigma)};
}

ExtremalParams scale_params(const ExtremalParams& p, const Rational& alpha)
{
    if (alpha <= 0)
        throw Error(ErrorCode::NonPositiveScale, "scale factor must be positive, got " + to_string(alpha));
    return {pow(alpha, p.n) * p.A, pow(alpha, p.n - 1) * p.B, p.C / alpha, p.D / (alpha * alpha), p.n};
}

double Endpoint::approx() const
{
    switch (kind) {
    case Kind::Zero:
        return 0.0;
    case Kind::Infinity:
        return std::numeric_limits<double>::infinity();
    case Kind::ExactRoot:
        return value.get_d();
    case Kind::IsolatedRoot:
        return Rational((enclosure.lo + enclosure.hi) / 2).get_d();
    }
    return 0.0;
}

std::string to_string(const Endpoint& e)
{
    switch (e.kind) {
    case Endpoint::Kind::Zero:
        return "0";
    case Endpoint::Kind::Infinity:
        return "+inf";
    case Endpoint::Kind::ExactRoot:
        return to_string(e.value);
    case Endpoint::Kind::IsolatedRoot:
        return "root in (" + to_string(e.enclosure.lo) + ", " + to_string(e.enclosure.hi) + ")";
    }
    return {};
}

Interval PositivityDomain::inner() const
{
    Rational low;
    switch (lo.kind) {
    case Endpoint::Kind::ExactRoot:
        low = lo.value;
        break;
    case Endpoint::Kind::IsolatedRoot:
        low = lo.enclosure.hi;
        break;
    default:
        low = 0;
    }
    std::optional<Rational> high;
    if (hi.kind == Endpoint::Kind::ExactRoot)
        high = hi.value;
    else if (hi.kind == Endpoint::Kind::IsolatedRoot)
        high = hi.enclosure.lo;
    return Interval::open(low, high);
}

std::string to_string(const PositivityDomain& d) { return "(" + to_string(d.lo) + ", " + to_string(d.hi) + ")"; }

PositivityDomain positivity_domain(const ExtremalParams& p, const Rational& y0)
{
    const LaurentPoly psi = build_psi(p);
    if (y0 <= 0 || psi.eval(y0) <= 0)
        throw Error(ErrorCode::NotInteriorPoint, "psi is not positive at y0 = " + to_string(y0));

    const SturmSequence sturm(psi);
    std::vector<IsolatingInterval> roots = sturm.isolate(Rational(0), std::nullopt);

    // Shrink any enclosure straddling y0 so each root sits clearly on one side.
    for (auto& iv : roots) {
        while (!iv.exact && !(iv.hi < y0) && !(y0 < iv.lo))
            sturm.bisect(iv);
    }

    PositivityDomain out{Endpoint::zero(), Endpoint::infinity()};
    const Rational width = default_isolation_width();
    auto to_endpoint = [&](IsolatingInterval iv) {
        sturm.try_make_exact(iv, width);
        return iv.exact ? Endpoint::exact(iv.lo) : Endpoint::isolated(iv);
    };
    const IsolatingInterval* below = nullptr;
    const IsolatingInterval* above = nullptr;
    for (const auto& iv : roots) {
        if (iv.hi < y0)
            below = &iv;
        else if (!above)
            above = &iv;
    }
    if (below)
        out.lo = to_endpoint(*below);
    if (above)
        out.hi = to_endpoint(*above);
    return out;
}

} // namespace radext
