#include "radext/ke.hpp"

#include "radext/error.hpp"
#include "radext/profile.hpp"

namespace radext {

namespace {

Rational falling_factorial(const Rational& top, int count)
{
    Rational out(1);
    for (int j = 0; j < count; ++j)
        out *= top - j;
    return out;
}

int to_int(const Integer& z) { return static_cast<int>(z.get_si()); }

} // namespace

KEDiagnostics ke_invariants(const ExtremalParams& p, const Rational& y0)
{
    if (p.B != 0 || p.D != 0)
        throw Error(ErrorCode::NotKE, "Kahler-Einstein diagnostics need B = D = 0");

    KEDiagnostics diag;
    const int n = p.n;
    diag.lambda = 2 * (n + 1) * p.C;
    const Rational half_lambda = diag.lambda / 2;
    const DomainEndpoints ends = domain_endpoints(p, y0);
    diag.y_inf = ends.domain.lo;

    switch (diag.y_inf.kind) {
    case Endpoint::Kind::Zero:
    case Endpoint::Kind::Infinity:
        diag.n_tilde = Rational(n);
        diag.y_inf_integral = true;
        diag.n_tilde_integral = true;
        break;
    case Endpoint::Kind::ExactRoot: {
        const Rational& y = diag.y_inf.value;
        const Rational slope = build_psi(p).derivative().eval(y);
        const Rational linear = n - half_lambda * y;
        if (slope != linear)
            throw Error(ErrorCode::ReconciliationFailure,
                "psi'(y_inf) = " + to_string(slope) + " but n - (lambda/2) y_inf = " + to_string(linear));
        diag.n_tilde = slope;
        diag.y_inf_integral = is_integer(y);
        diag.n_tilde_integral = is_integer(slope);
        if (!diag.y_inf_integral)
            diag.predicted_obstruction_k = to_int(floor(y)) + 2;
        else if (!diag.n_tilde_integral)
            diag.predicted_obstruction_k = to_int(y.get_num() + floor(slope)) + 2;
        break;
    }
    case Endpoint::Kind::IsolatedRoot: {
        // Irrational y_inf: refine until the enclosure sits inside one unit cell.
        const SturmSequence sturm(build_psi(p));
        IsolatingInterval& iv = diag.y_inf.enclosure;
        while (!iv.exact && floor(iv.lo) != floor(iv.hi))
            sturm.bisect(iv);
        if (iv.exact)
            throw Error(ErrorCode::ReconciliationFailure, "isolated root turned out rational");
        diag.y_inf_integral = false;
        if (diag.lambda == 0) {
            diag.n_tilde = Rational(n);
            diag.n_tilde_integral = true;
        } else {
            Rational a = n - half_lambda * iv.lo;
            Rational b = n - half_lambda * iv.hi;
            if (b < a)
                std::swap(a, b);
            diag.n_tilde_enclosure = IsolatingInterval{a, b, false};
        }
        diag.predicted_obstruction_k = to_int(floor(iv.lo)) + 2;
        break;
    }
    }
    return diag;
}

bool falling_factorial_check(const ExtremalParams& p, const Rational& y_root, int K)
{
    const LaurentPoly psi = build_psi(p);
    if (y_root <= 0 || psi.eval(y_root) != 0)
        throw Error(ErrorCode::NotARoot, "psi(" + to_string(y_root) + ") != 0");
    const Rational n_tilde = psi.derivative().eval(y_root);
    const QSequence seq(p, AmbientSign::Plus, K);
    for (int k = 2; k <= K; ++k) {
        const LaurentPoly& q = seq[k];
        const Rational value = q.eval(y_root);
        if (value != falling_factorial(y_root, k))
            return false;
        const Rational shifted = value + n_tilde * q.derivative().eval(y_root);
        if (shifted != falling_factorial(y_root + n_tilde, k))
            return false;
    }
    return true;
}

NeighborhoodCertificate certify_negative_right_neighborhood(const LaurentPoly& q, const Rational& a)
{
    NeighborhoodCertificate out;
    out.interval = Interval::open(a, Rational(a + 1));
    if (q.is_zero())
        return out;

    const SturmSequence sturm(q);
    std::vector<IsolatingInterval> roots = sturm.isolate(a, std::nullopt);
    Rational delta(1);
    if (!roots.empty()) {
        IsolatingInterval& next = roots.front();
        while (!next.exact && !(a < next.lo))
            sturm.bisect(next);
        delta = (next.lo - a) / 8;
    }

    for (int attempt = 0; attempt < 64; ++attempt, delta /= 2) {
        const Interval candidate = Interval::open(a, Rational(a + delta));
        const PositivityCertificate cert = certify_sign_on_interval(q, candidate);
        if (const auto* neg = std::get_if<NegativeWitness>(&cert)) {
            out.interval = candidate;
            out.witness = neg->point;
            out.value = neg->value;
            out.strictly_negative = sturm.count_roots(a, *candidate.hi) == 0;
            return out;
        }
    }
    return out;
}

std::optional<PredictionCheck> verify_prediction(const ExtremalParams& p, const KEDiagnostics& diag)
{
    if (!diag.predicted_obstruction_k)
        return std::nullopt;
    PredictionCheck check;
    check.k = *diag.predicted_obstruction_k;
    const QSequence seq(p, AmbientSign::Plus, check.k);
    const LaurentPoly& q = seq[check.k];

    bool sign_ok = false;
    if (diag.y_inf.kind == Endpoint::Kind::ExactRoot) {
        const Rational& y = diag.y_inf.value;
        check.value = q.eval(y);
        check.derivative = q.derivative().eval(y);
        if (!diag.y_inf_integral)
            sign_ok = *check.value < 0;
        else
            sign_ok = *check.value == 0 && *check.derivative < 0;
        check.neighborhood = certify_negative_right_neighborhood(q, y);
    } else {
        // The enclosure's right end lies in the domain just above y_inf.
        check.neighborhood = certify_negative_right_neighborhood(q, diag.y_inf.enclosure.hi);
        sign_ok = check.neighborhood.strictly_negative;
    }
    check.sound = sign_ok && check.neighborhood.strictly_negative;
    return check;
}

std::vector<StabilityEntry> stability_scan(
    const ExtremalParams& p, const std::vector<Rational>& alphas, const Rational& anchor, int K)
{
    for (const auto& alpha : alphas) {
        if (alpha <= 0)
            throw Error(ErrorCode::NonPositiveScale, "scale factor must be positive, got " + to_string(alpha));
    }
    std::vector<StabilityEntry> out;
    out.reserve(alphas.size());
    for (const auto& alpha : alphas) {
        const ExtremalParams scaled = scale_params(p, alpha);
        const Interval domain = positivity_domain(scaled, alpha * anchor).inner();
        StabilityEntry entry{alpha, obstruction_scan(scaled, AmbientSign::Plus, domain, K), std::nullopt};
        const MetricClass cls = classify(scaled);
        if (const auto* ke = std::get_if<KahlerEinstein>(&cls))
            entry.lambda = ke->lambda;
        else if (std::holds_alternative<ConstHolSecCurv>(cls))
            entry.lambda = Rational(2 * (scaled.n + 1) * scaled.C);
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace radext
