#include "radext/roots.hpp"

#include "radext/error.hpp"

#include <algorithm>
#include <sstream>

namespace radext {

namespace {

using QPoly = std::vector<Rational>; // lowest degree first, no trailing zeros
using IPoly = std::vector<Integer>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly derivative(const QPoly& p)
{
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

QPoly remainder(QPoly a, const QPoly& b)
{
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= factor * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly quotient(QPoly a, const QPoly& b)
{
    QPoly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        const Rational factor = a[i + b.size() - 1] / lead;
        q[i] = factor;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] -= factor * b[j];
    }
    trim(q);
    return q;
}

// Scale by a positive rational so that coefficients are coprime integers.
IPoly primitive(const QPoly& p)
{
    Integer den_lcm = 1;
    for (const auto& c : p)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    IPoly out;
    out.reserve(p.size());
    Integer content = 0;
    for (const auto& c : p) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1) {
        for (auto& v : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

QPoly to_q(const IPoly& p)
{
    QPoly out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.emplace_back(c);
    return out;
}

QPoly normalized(const QPoly& p) { return to_q(primitive(p)); }

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.empty()) {
        QPoly r = remainder(a, b);
        a = std::move(b);
        b = normalized(r);
    }
    return a;
}

// Sign of p(num/den) with den > 0, computed on den^deg * p(num/den).
int sign_at(const IPoly& p, const Rational& x)
{
    if (p.empty())
        return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = p.back();
    Integer den_pow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc = acc * num + p[i] * den_pow;
    }
    return sgn(acc);
}

// A split point in the middle half of (lo, hi) with a small denominator.
Rational split_point(const Rational& lo, const Rational& hi)
{
    const Rational quarter = (hi - lo) / 4;
    return simplest_between(lo + quarter, Rational(hi - quarter));
}

} // namespace

Interval Interval::open(std::optional<Rational> lo, std::optional<Rational> hi)
{
    if (lo && hi && !(*lo < *hi))
        throw Error(ErrorCode::InvalidInterval, "interval needs lo < hi, got (" + to_string(*lo) + ", " + to_string(*hi) + ")");
    return Interval{std::move(lo), std::move(hi)};
}

bool Interval::contains(const Rational& x) const
{
    return (!lo || *lo < x) && (!hi || x < *hi);
}

std::string to_string(const Interval& interval)
{
    std::ostringstream os;
    os << '(' << (interval.lo ? to_string(*interval.lo) : std::string("-inf")) << ", "
       << (interval.hi ? to_string(*interval.hi) : std::string("+inf")) << ')';
    return os.str();
}

Rational default_isolation_width() { return Rational(1, 1U << 20U); }

SturmSequence::SturmSequence(const LaurentPoly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");

    QPoly base = normalized(p.cleared_coefficients());
    QPoly d = derivative(base);
    QPoly squarefree = base;
    if (!d.empty()) {
        const QPoly g = gcd(base, normalized(d));
        if (g.size() > 1)
            squarefree = normalized(quotient(base, g));
    }

    chain_.push_back(primitive(squarefree));
    QPoly prev = squarefree;
    QPoly cur = derivative(squarefree);
    while (!cur.empty()) {
        cur = normalized(cur);
        chain_.push_back(primitive(cur));
        QPoly next = remainder(prev, cur);
        for (auto& c : next)
            c = -c;
        prev = std::move(cur);
        cur = std::move(next);
    }
}

int SturmSequence::squarefree_degree() const { return static_cast<int>(chain_.front().size()) - 1; }

int SturmSequence::variations(const Rational& x) const
{
    int count = 0;
    int last = 0;
    for (const auto& member : chain_) {
        const int s = radext::sign_at(member, x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

int SturmSequence::variations_at_infinity() const
{
    int count = 0;
    int last = 0;
    for (const auto& member : chain_) {
        const int s = sgn(member.back());
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

int SturmSequence::sign_at(const Rational& x) const { return radext::sign_at(chain_.front(), x); }

int SturmSequence::count_roots(const Rational& a, const std::optional<Rational>& b) const
{
    // V(a) - V(b) counts roots in (a, b] for a square-free chain.
    if (!b)
        return variations(a) - variations_at_infinity();
    if (!(a < *b))
        return 0;
    return variations(a) - variations(*b) - (sign_at(*b) == 0 ? 1 : 0);
}

Rational SturmSequence::root_bound() const
{
    const IPoly& p = chain_.front();
    Rational worst(0);
    const Rational lead = abs(Rational(p.back()));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        worst = std::max(worst, Rational(abs(Rational(p[i])) / lead));
    return worst + 1;
}

std::vector<IsolatingInterval> SturmSequence::isolate(const Rational& a, const std::optional<Rational>& b) const
{
    if (a < 0)
        throw Error(ErrorCode::InvalidInterval, "root isolation is restricted to y >= 0");
    const Rational bound = root_bound();
    Rational hi = b ? std::min(*b, bound) : bound;
    std::vector<IsolatingInterval> found;
    if (!(a < hi))
        return found;

    struct Pending {
        Rational lo;
        Rational hi;
        int count;
    };
    std::vector<Pending> stack;
    // If b was clamped, (a, bound) carries the same roots as (a, b).
    stack.push_back({a, hi, count_roots(a, hi)});
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0)
            continue;
        if (cur.count == 1) {
            found.push_back({cur.lo, cur.hi, false});
            continue;
        }
        const Rational mid = split_point(cur.lo, cur.hi);
        const bool mid_is_root = sign_at(mid) == 0;
        if (mid_is_root)
            found.push_back({mid, mid, true});
        const int left = count_roots(cur.lo, mid);
        const int right = cur.count - left - (mid_is_root ? 1 : 0);
        stack.push_back({mid, cur.hi, right});
        stack.push_back({cur.lo, mid, left});
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return found;
}

void SturmSequence::bisect(IsolatingInterval& iv) const
{
    if (iv.exact)
        return;
    const Rational mid = split_point(iv.lo, iv.hi);
    if (sign_at(mid) == 0) {
        iv = {mid, mid, true};
        return;
    }
    if (count_roots(iv.lo, mid) == 1)
        iv.hi = mid;
    else
        iv.lo = mid;
}

void SturmSequence::refine(IsolatingInterval& iv, const Rational& width) const
{
    while (!iv.exact && iv.width() > width)
        bisect(iv);
}

void SturmSequence::try_make_exact(IsolatingInterval& iv, const Rational& width) const
{
    while (!iv.exact) {
        const Rational candidate = simplest_between(iv.lo, iv.hi);
        if (sign_at(candidate) == 0) {
            iv = {candidate, candidate, true};
            return;
        }
        if (iv.width() <= width)
            return;
        bisect(iv);
    }
}

std::vector<IsolatingInterval> isolate_positive_roots(const LaurentPoly& p)
{
    return SturmSequence(p).isolate(Rational(0), std::nullopt);
}

std::vector<IsolatingInterval> isolate_roots_in(const LaurentPoly& p, const Interval& interval)
{
    if (!interval.lo || *interval.lo < 0)
        throw Error(ErrorCode::InvalidInterval, "interval must start at y >= 0");
    return SturmSequence(p).isolate(*interval.lo, interval.hi);
}

PositivityCertificate certify_sign_on_interval(const LaurentPoly& p, const Interval& interval)
{
    if (!interval.lo || *interval.lo < 0)
        throw Error(ErrorCode::InvalidInterval, "certification needs an interval inside y >= 0, got " + to_string(interval));
    if (p.is_zero())
        return IdenticallyZero{};

    const SturmSequence sturm(p);
    std::vector<IsolatingInterval> roots = sturm.isolate(*interval.lo, interval.hi);

    // Gap i lies between root i-1 and root i (or the interval ends). The
    // root-free open stretch between neighbouring isolating intervals is
    // widened by bisection until it is nonempty.
    const std::size_t m = roots.size();
    for (std::size_t i = 0; i <= m; ++i) {
        auto left_edge = [&]() -> Rational { return i == 0 ? *interval.lo : roots[i - 1].hi; };
        auto right_edge = [&]() -> std::optional<Rational> {
            if (i == m)
                return interval.hi;
            return roots[i].lo;
        };
        while (right_edge() && !(left_edge() < *right_edge())) {
            if (i > 0)
                sturm.bisect(roots[i - 1]);
            if (i < m)
                sturm.bisect(roots[i]);
        }
        const Rational sample = simplest_between(left_edge(), right_edge());
        Rational value = p.eval(sample);
        if (value < 0)
            return NegativeWitness{sample, std::move(value)};
    }
    return NonnegativeOn{interval};
}

bool is_nonnegative(const PositivityCertificate& cert)
{
    return !std::holds_alternative<NegativeWitness>(cert);
}

} // namespace radext
