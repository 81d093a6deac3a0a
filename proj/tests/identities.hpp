#ifndef RADEXT_TESTS_IDENTITIES_HPP
#define RADEXT_TESTS_IDENTITIES_HPP

// Independent closed forms and parameter families shared by the property
// tests and the acceptance binary.

#include "generators.hpp"

#include "radext/family.hpp"
#include "radext/roots.hpp"

namespace radext::testgen {

inline LaurentPoly mono(const Rational& c, int e) { return LaurentPoly::monomial(c, e); }

// Q_2 written out term by term.
inline LaurentPoly eq_k2(const ExtremalParams& p, AmbientSign eps)
{
    const int n = p.n;
    const Rational e(value(eps));
    return mono(-p.A, 1 - n) + mono(-p.B, 2 - n) + mono(e - p.C, 2) + mono(-p.D, 3);
}

// Q_3 written out term by term.
inline LaurentPoly eq_k3(const ExtremalParams& p, AmbientSign eps)
{
    const Rational& A = p.A;
    const Rational& B = p.B;
    const Rational& C = p.C;
    const Rational& D = p.D;
    const int n = p.n;
    const Rational e(value(eps));
    return mono(A * A * (1 - n), 1 - 2 * n) + mono(A * B * (3 - 2 * n), 2 - 2 * n) + mono(B * B * (2 - n), 3 - 2 * n)
        + mono(A * (n + 1), 1 - n) + mono(A * (C * (3 - n) - 3 * e) + B * n, 2 - n)
        + mono((A * D + B * C) * (4 - n) - 3 * B * e, 3 - n) + mono(B * D * (5 - n), 4 - n)
        + mono(2 * C * C - 3 * C * e - D + e * e, 3) + mono(D * (5 * C - 3 * e), 4) + mono(3 * D * D, 5);
}

enum class Regime { DNonzero, DZero, ANonzero, AZeroBNonzero };

inline ExtremalParams regime_params(Engine& g, Regime regime, int n)
{
    ExtremalParams p = params(g, n);
    switch (regime) {
    case Regime::DNonzero:
        p.D = nonzero_rational(g);
        break;
    case Regime::DZero:
        p.D = 0;
        break;
    case Regime::ANonzero:
        p.A = nonzero_rational(g);
        break;
    case Regime::AZeroBNonzero:
        p.A = 0;
        p.B = nonzero_rational(g);
        break;
    }
    return p;
}

// KE parameters (B = D = 0) with psi(root) = 0 for the given lambda.
inline ExtremalParams ke_with_root(const Rational& root, const Rational& lambda, int n = 2)
{
    ExtremalParams p{Rational(0), Rational(0), Rational(lambda / (2 * (n + 1))), Rational(0), n};
    p.A = (root - p.C * root * root) / pow(root, 1 - n);
    return p;
}

// A point right of `root` with no other root of psi in between: the
// midpoint to the next root, or root + 1 when there is none.
inline Rational right_of_root(const LaurentPoly& psi, const Rational& root)
{
    const SturmSequence sturm(psi);
    auto roots = sturm.isolate(root, std::nullopt);
    if (roots.empty())
        return root + 1;
    while (!roots[0].exact && roots[0].lo == root)
        sturm.bisect(roots[0]);
    return (root + roots[0].lo) / 2;
}

} // namespace radext::testgen

#endif
