#include "radext/resolvability.hpp"

#include "radext/error.hpp"

namespace radext {

namespace {

Rational factorial(int m)
{
    Rational out(1);
    for (int j = 2; j <= m; ++j)
        out *= j;
    return out;
}

Integer binomial(int top, int bottom)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return out;
}

// beta!/(beta-i)!, zero when i > beta.
Integer falling(int beta, int i)
{
    if (i > beta)
        return 0;
    Integer out = 1;
    for (int j = 0; j < i; ++j)
        out *= beta - j;
    return out;
}

void require_positive_domain(const LaurentPoly& psi, const Interval& domain)
{
    if (!domain.lo || *domain.lo < 0)
        throw Error(ErrorCode::DomainNotPositive, "domain " + to_string(domain) + " leaves y > 0");
    const SturmSequence sturm(psi);
    const Rational probe = simplest_between(*domain.lo, domain.hi);
    if (sturm.count_roots(*domain.lo, domain.hi) != 0 || psi.eval(probe) <= 0)
        throw Error(ErrorCode::DomainNotPositive, "psi is not positive throughout " + to_string(domain));
}

} // namespace

LaurentPoly next_q(const LaurentPoly& qk, int k, AmbientSign eps, const LaurentPoly& psi)
{
    const LaurentPoly factor = LaurentPoly::from_terms({{1, Rational(value(eps))}, {0, Rational(-k)}});
    return factor * qk + qk.derivative() * psi;
}

QSequence::QSequence(const ExtremalParams& params, AmbientSign eps, int K)
    : params_(params)
    , eps_(eps)
    , psi_(build_psi(params))
{
    if (K < 1)
        throw Error(ErrorCode::InvalidArgument, "K must be >= 1, got " + std::to_string(K));
    entries_.reserve(static_cast<std::size_t>(K));
    entries_.push_back(LaurentPoly::y());
    for (int k = 1; k < K; ++k)
        entries_.push_back(next_q(entries_.back(), k, eps_, psi_));
}

const LaurentPoly& QSequence::operator[](int k) const
{
    if (k < 1 || k > size())
        throw Error(ErrorCode::InvalidArgument, "Q_" + std::to_string(k) + " outside cached range 1.." + std::to_string(size()));
    return entries_[static_cast<std::size_t>(k - 1)];
}

QSequence q_sequence(const ExtremalParams& p, AmbientSign eps, int K) { return QSequence(p, eps, K); }

LaurentPoly falling_product(AmbientSign eps, int k)
{
    LaurentPoly out = LaurentPoly::y();
    for (int j = 1; j < k; ++j)
        out *= LaurentPoly::from_terms({{1, Rational(value(eps))}, {0, Rational(-j)}});
    return out;
}

LaurentPoly q_from_p(const ExtremalParams& p, AmbientSign eps, int k, const LaurentPoly& pk)
{
    return falling_product(eps, k) + (build_psi(p) * pk).shifted(-(k - 2) * p.n);
}

LaurentPoly p_from_q(const ExtremalParams& p, AmbientSign eps, int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
    const LaurentPoly psi = build_psi(p);
    const int n = p.n;
    // y^(n-1) psi, differentiated once; reused by every step.
    const LaurentPoly dw = psi.shifted(n - 1).derivative();

    LaurentPoly pk; // P_1 = 0
    for (int j = 1; j < k; ++j) {
        const LaurentPoly step = LaurentPoly::from_terms({{1, Rational(value(eps))}, {0, Rational(-j)}});
        LaurentPoly next = (step * pk).shifted(n);
        next += falling_product(eps, j).derivative().shifted((j - 1) * n);
        next += (dw * pk).shifted(1);
        next += (psi * pk.derivative()).shifted(n);
        next -= Rational((j - 1) * n - 1) * (psi * pk).shifted(n - 1);
        pk = std::move(next);
    }

    const QSequence seq(p, eps, k);
    if (q_from_p(p, eps, k, pk) != seq[k])
        throw Error(ErrorCode::ReconciliationFailure, "P_" + std::to_string(k) + " does not reproduce Q_" + std::to_string(k));
    return pk;
}

ExtremePrediction extremes_closed_form(const ExtremalParams& p, AmbientSign eps, int k, Extreme which)
{
    if (p.n < 2)
        throw Error(ErrorCode::DimensionTooSmall, "closed forms need n >= 2, got " + std::to_string(p.n));
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "closed forms need k >= 2, got " + std::to_string(k));
    const int n = p.n;

    if (which == Extreme::Leading) {
        if (p.D != 0) {
            Rational prod(1);
            for (int j = 2; j <= k - 1; ++j)
                prod *= 1 - 2 * j;
            return Predicted{2 * k - 1, Rational(-pow(p.D, k - 1) * prod)};
        }
        Rational prod(1);
        for (int j = 1; j <= k - 1; ++j)
            prod *= p.C - Rational(value(eps), j);
        if (prod == 0)
            return Degenerate{};
        const Rational sign = (k - 1) % 2 == 0 ? 1 : -1;
        return Predicted{k, Rational(sign * factorial(k - 1) * prod)};
    }

    if (p.A != 0) {
        Rational prod(1);
        for (int j = 1; j <= k - 2; ++j)
            prod *= n - Rational(1, j);
        return Predicted{n * (1 - k) + 1, Rational(-pow(p.A, k - 1) * factorial(k - 2) * prod)};
    }
    if (p.B != 0) {
        Rational prod(1);
        for (int j = 1; j <= k - 2; ++j)
            prod *= n - Rational(j + 1, j);
        if (prod == 0)
            return Degenerate{};
        return Predicted{n + k - n * k, Rational(-pow(p.B, k - 1) * factorial(k - 2) * prod)};
    }
    return Degenerate{};
}

ObstructionReport obstruction_scan(const ExtremalParams& p, AmbientSign eps, const Interval& domain, int K)
{
    if (p.n < 2)
        throw Error(ErrorCode::DimensionTooSmall, "the positivity scan needs n >= 2; use det_test_dim1 for n = 1");
    return obstruction_scan(QSequence(p, eps, K), domain, K);
}

ObstructionReport obstruction_scan(const QSequence& seq, const Interval& domain, int K)
{
    if (seq.params().n < 2)
        throw Error(ErrorCode::DimensionTooSmall, "the positivity scan needs n >= 2; use det_test_dim1 for n = 1");
    if (K < 1 || K > seq.size())
        throw Error(ErrorCode::InvalidArgument, "K = " + std::to_string(K) + " outside the cached sequence");
    require_positive_domain(seq.psi(), domain);

    for (int k = 1; k <= K; ++k) {
        const LaurentPoly& q = seq[k];
        if (q.is_zero()) {
            for (int j = k + 1; j <= seq.size(); ++j) {
                if (!seq[j].is_zero())
                    throw Error(ErrorCode::ReconciliationFailure, "Q_" + std::to_string(j) + " nonzero after a vanishing entry");
            }
            return {IdenticallyZeroFrom{k}, domain};
        }
        const PositivityCertificate cert = certify_sign_on_interval(q, domain);
        if (const auto* neg = std::get_if<NegativeWitness>(&cert))
            return {ObstructedAt{k, neg->point, neg->value}, domain};
    }
    return {ClearUpTo{K}, domain};
}

LaurentMatrix dim1_matrix(const QSequence& seq, int I)
{
    if (seq.size() < 2 * I)
        throw Error(ErrorCode::InvalidArgument, "dimension-one matrix of size " + std::to_string(I) + " needs Q up to " + std::to_string(2 * I));
    LaurentMatrix m(static_cast<std::size_t>(I), std::vector<LaurentPoly>(static_cast<std::size_t>(I)));
    for (int alpha = 1; alpha <= I; ++alpha) {
        for (int beta = 1; beta <= I; ++beta) {
            LaurentPoly entry;
            for (int i = 0; i <= std::min(alpha, beta); ++i) {
                const Rational weight(binomial(alpha, i) * falling(beta, i));
                entry += weight * seq[alpha + beta - i];
            }
            m[static_cast<std::size_t>(alpha - 1)][static_cast<std::size_t>(beta - 1)] = std::move(entry);
        }
    }
    return m;
}

DetReport det_test_dim1(const ExtremalParams& p, AmbientSign eps, int Imax, const Interval& domain)
{
    if (p.n != 1)
        throw Error(ErrorCode::WrongDimension, "the determinant test is for n = 1, got n = " + std::to_string(p.n));
    if (Imax < 1)
        throw Error(ErrorCode::InvalidArgument, "Imax must be >= 1");
    const QSequence seq(p, eps, 2 * Imax);
    DetReport report{{}, std::nullopt, domain};
    for (int I = 1; I <= Imax; ++I) {
        // The mixed partials of F_eps equal (eps F_eps) M up to positive
        // factors, and eps F_eps = e^(eps f) > 0, so det M itself must be >= 0.
        LaurentPoly det = determinant(dim1_matrix(seq, I));
        PositivityCertificate cert = certify_sign_on_interval(det, domain);
        if (!report.first_violation && !is_nonnegative(cert))
            report.first_violation = I;
        report.entries.push_back({I, std::move(det), std::move(cert)});
    }
    return report;
}

bool detect_space_form(const ExtremalParams& p, AmbientSign eps) { return QSequence(p, eps, 2)[2].is_zero(); }

std::optional<int> zero_index(const ExtremalParams& p, AmbientSign eps, int K)
{
    const QSequence seq(p, eps, K);
    for (int k = 1; k <= K; ++k) {
        if (!seq[k].is_zero())
            continue;
        for (int j = k + 1; j <= K; ++j) {
            if (!seq[j].is_zero())
                throw Error(ErrorCode::ReconciliationFailure, "Q_" + std::to_string(j) + " nonzero after a vanishing entry");
        }
        return k;
    }
    return std::nullopt;
}

} // namespace radext
