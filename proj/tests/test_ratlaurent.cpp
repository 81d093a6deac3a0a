#include "generators.hpp"

#include "radext/det.hpp"
#include "radext/error.hpp"
#include "radext/family.hpp"
#include "radext/laurent.hpp"
#include "radext/roots.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace radext;
namespace tg = radext::testgen;

namespace {

LaurentPoly Y() { return LaurentPoly::y(); }
LaurentPoly K(long p, long q = 1) { return LaurentPoly(make_rational(p, q)); }
Rational R(long p, long q = 1) { return make_rational(p, q); }

template <class F>
ErrorCode code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no radext::Error thrown";
    return ErrorCode::InvalidArgument;
}

} // namespace

// Rationals

TEST(Rational, ParsesCanonicalForms)
{
    EXPECT_EQ(parse_rational("4/6"), R(2, 3));
    EXPECT_EQ(parse_rational(" -3 "), R(-3));
    EXPECT_EQ(parse_rational("+7/21"), R(1, 3));
    EXPECT_EQ(to_string(R(-4, 3)), "-4/3");
    EXPECT_EQ(to_string(R(5)), "5");
}

TEST(Rational, RefusesFloatsAndGarbage)
{
    EXPECT_EQ(code_of([] { parse_rational("0.5"); }), ErrorCode::FloatLiteralRefused);
    EXPECT_EQ(code_of([] { parse_rational("1e3"); }), ErrorCode::FloatLiteralRefused);
    EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_rational("1/-2"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_rational("abc"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_rational(""); }), ErrorCode::ParseError);
}

TEST(Rational, FloorCeil)
{
    EXPECT_EQ(floor(R(-3, 2)), -2);
    EXPECT_EQ(ceil(R(-3, 2)), -1);
    EXPECT_EQ(floor(R(7)), 7);
    EXPECT_EQ(ceil(R(7, 3)), 3);
}

TEST(Rational, SimplestBetweenIsInsideAndMinimal)
{
    EXPECT_EQ(simplest_between(R(1, 3), R(1, 2)), R(2, 5));
    EXPECT_EQ(simplest_between(R(1), R(3)), R(2));
    EXPECT_EQ(simplest_between(R(-5, 2), R(3)), R(0));
    EXPECT_EQ(simplest_between(R(-1, 2), R(-1, 3)), R(-2, 5));
    EXPECT_EQ(simplest_between(R(5, 2), std::nullopt), R(3));

    tg::Engine g(11);
    for (int i = 0; i < 300; ++i) {
        Rational a = tg::rational(g, 40, 30);
        Rational b = tg::rational(g, 40, 30);
        if (a == b)
            continue;
        if (b < a)
            std::swap(a, b);
        const Rational s = simplest_between(a, b);
        EXPECT_LT(a, s);
        EXPECT_LT(s, b);
        // No fraction with a smaller denominator fits strictly between.
        for (long q = 1; q < s.get_den().get_si(); ++q) {
            const Integer p = floor(a * q) + 1;
            EXPECT_FALSE(Rational(p, q) < b) << a << " " << b << " q=" << q;
        }
    }
}

// Laurent polynomials

TEST(Laurent, NormalizeExamples)
{
    EXPECT_TRUE(normalize({}).is_zero());
    EXPECT_TRUE(normalize({{1, R(1)}, {1, R(-1)}}).is_zero());
    const LaurentPoly p = normalize({{3, R(2)}, {1, R(1)}, {2, R(3)}});
    EXPECT_EQ(p.to_string(), "2*y^3 + 3*y^2 + y");
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.valuation(), 1);
}

TEST(Laurent, ArithExamples)
{
    EXPECT_EQ(arith(Y(), Y() - K(1), LaurentOp::Mul), Y() * Y() - Y());
    const LaurentPoly exfond = arith(arith(Y(), Y() + K(1), LaurentOp::Mul), K(2) * Y() + K(1), LaurentOp::Mul);
    EXPECT_EQ(exfond, build_psi({R(0), R(0), R(-3), R(-2), 2}));
    EXPECT_EQ(exfond.to_string(), "2*y^3 + 3*y^2 + y");
    const LaurentPoly inv = LaurentPoly::monomial(R(1), -1);
    EXPECT_EQ(arith(Y() + inv, -inv, LaurentOp::Add), Y());
}

TEST(Laurent, DifferentiateExamples)
{
    EXPECT_EQ(differentiate(LaurentPoly::monomial(R(1), 3)), LaurentPoly::monomial(R(3), 2));
    EXPECT_EQ(differentiate(LaurentPoly::monomial(R(1), -1)), LaurentPoly::monomial(R(-1), -2));
    EXPECT_TRUE(differentiate(K(5)).is_zero());
    const LaurentPoly psi = build_psi({R(4, 3), R(0), R(-1, 3), R(0), 2});
    EXPECT_EQ(eval(differentiate(psi), R(1)), R(3));
}

TEST(Laurent, EvalExamples)
{
    EXPECT_EQ(eval(Y() * Y() - Y(), R(1)), R(0));
    EXPECT_EQ(eval(build_psi({R(-1), R(0), R(2), R(0), 2}), R(1, 2)), R(2));
    EXPECT_EQ(code_of([] { eval(LaurentPoly::monomial(R(1), -1), R(0)); }), ErrorCode::EvalAtPole);
    EXPECT_EQ(eval(Y() * Y() + K(3), R(0)), R(3));
}

TEST(Laurent, ZeroPolynomialQueriesThrow)
{
    const LaurentPoly z;
    EXPECT_EQ(code_of([&] { (void)z.degree(); }), ErrorCode::ZeroPolynomial);
    EXPECT_EQ(code_of([&] { (void)z.valuation(); }), ErrorCode::ZeroPolynomial);
    EXPECT_EQ(code_of([&] { (void)z.leading(); }), ErrorCode::ZeroPolynomial);
    EXPECT_EQ(z.to_string(), "0");
}

TEST(LaurentProperty, RingAxioms)
{
    tg::Engine g(1);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = tg::laurent(g), b = tg::laurent(g), c = tg::laurent(g);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * K(1), a);
    }
}

TEST(LaurentProperty, DegreeAndValuationOfProducts)
{
    tg::Engine g(2);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = tg::laurent(g), b = tg::laurent(g);
        if (a.is_zero() || b.is_zero())
            continue;
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
        EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
    }
}

TEST(LaurentProperty, LeibnizRule)
{
    tg::Engine g(3);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = tg::laurent(g), b = tg::laurent(g);
        EXPECT_EQ(differentiate(arith(a, b, LaurentOp::Mul)),
            arith(differentiate(a), b, LaurentOp::Mul) + arith(a, differentiate(b), LaurentOp::Mul));
    }
}

TEST(LaurentProperty, EvalIsARingHomomorphism)
{
    tg::Engine g(4);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = tg::laurent(g), b = tg::laurent(g);
        const Rational x = tg::nonzero_rational(g);
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
        EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
        EXPECT_NEAR(a.eval(x.get_d()), a.eval(x).get_d(), 1e-9 * (1 + std::abs(a.eval(x).get_d())));
    }
}

TEST(LaurentProperty, ExactDivisionUndoesMultiplication)
{
    tg::Engine g(5);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = tg::laurent(g), b = tg::laurent(g);
        if (b.is_zero())
            continue;
        EXPECT_EQ((a * b).divide_exact(b), a);
    }
    EXPECT_EQ(code_of([] { (Y() * Y() + K(1)).divide_exact(Y() + K(1)); }), ErrorCode::InexactDivision);
    EXPECT_EQ(code_of([] { Y().divide_exact(LaurentPoly()); }), ErrorCode::ZeroPolynomial);
}

// Root isolation

TEST(Roots, LinearRoot)
{
    const auto roots = isolate_positive_roots(Y() - K(1));
    ASSERT_EQ(roots.size(), 1U);
    EXPECT_TRUE(roots[0].exact ? roots[0].lo == 1 : roots[0].lo < 1 && 1 < roots[0].hi);
    IsolatingInterval iv = roots[0];
    SturmSequence(Y() - K(1)).try_make_exact(iv, default_isolation_width());
    EXPECT_TRUE(iv.exact);
    EXPECT_EQ(iv.lo, R(1));
}

TEST(Roots, ParabolaWithoutRealRoots)
{
    // -2y^2 + y - 2/9 has discriminant 1 - 16/9 < 0.
    const LaurentPoly psi = build_psi({R(0), R(2, 9), R(2), R(0), 2});
    EXPECT_EQ(psi, K(-2) * Y() * Y() + Y() - K(2, 9));
    EXPECT_TRUE(isolate_positive_roots(psi).empty());
}

TEST(Roots, ParabolaWithTwoRationalRoots)
{
    // -2y^2 + y - 1/9 = -2 (y - 1/6)(y - 1/3).
    const LaurentPoly psi = build_psi({R(0), R(1, 9), R(2), R(0), 2});
    const SturmSequence s(psi);
    auto roots = s.isolate(R(0), std::nullopt);
    ASSERT_EQ(roots.size(), 2U);
    for (auto& iv : roots)
        s.try_make_exact(iv, default_isolation_width());
    EXPECT_EQ(roots[0], (IsolatingInterval{R(1, 6), R(1, 6), true}));
    EXPECT_EQ(roots[1], (IsolatingInterval{R(1, 3), R(1, 3), true}));
}

TEST(Roots, ParabolaWithIrrationalRootsMatchesQuadraticFormula)
{
    // -2y^2 + y - 1/10: roots 1/4 -+ sqrt(5)/20.
    const LaurentPoly psi = build_psi({R(0), R(1, 10), R(2), R(0), 2});
    const SturmSequence s(psi);
    auto roots = s.isolate(R(0), std::nullopt);
    ASSERT_EQ(roots.size(), 2U);
    const double expected[2] = {0.25 - std::sqrt(5.0) / 20.0, 0.25 + std::sqrt(5.0) / 20.0};
    for (int i = 0; i < 2; ++i) {
        s.refine(roots[i], default_isolation_width());
        EXPECT_FALSE(roots[i].exact);
        EXPECT_LE(roots[i].width(), default_isolation_width());
        EXPECT_LT(roots[i].lo.get_d(), expected[i]);
        EXPECT_GT(roots[i].hi.get_d(), expected[i]);
    }
}

TEST(Roots, ExampleWithSingleRootAtOne)
{
    // y + 1/y - 2y^2 = (1 - y)(2y^2 + y + 1) / y.
    const LaurentPoly psi = build_psi({R(-1), R(0), R(2), R(0), 2});
    const SturmSequence s(psi);
    auto roots = s.isolate(R(0), std::nullopt);
    ASSERT_EQ(roots.size(), 1U);
    s.try_make_exact(roots[0], default_isolation_width());
    EXPECT_EQ(roots[0].lo, R(1));
    EXPECT_TRUE(roots[0].exact);
}

TEST(Roots, ZeroPolynomialIsRejected)
{
    EXPECT_EQ(code_of([] { isolate_positive_roots(LaurentPoly()); }), ErrorCode::ZeroPolynomial);
}

TEST(RootsProperty, CountsMatchFactorization)
{
    tg::Engine g(6);
    for (int i = 0; i < 200; ++i) {
        const tg::FactoredPoly f = tg::factored(g, 12);
        if (f.poly.is_zero())
            continue;
        // Multiply by a random power of y: the positive roots do not move.
        const LaurentPoly p = f.poly.shifted(static_cast<int>(tg::uniform_int(g, -3, 3)));
        std::vector<Rational> expected;
        for (const auto& [root, mult] : f.roots)
            if (root > 0 && std::find(expected.begin(), expected.end(), root) == expected.end())
                expected.push_back(root);
        std::sort(expected.begin(), expected.end());

        const SturmSequence s(p);
        auto roots = s.isolate(R(0), std::nullopt);
        ASSERT_EQ(roots.size(), expected.size()) << p.to_string();
        EXPECT_EQ(s.count_roots(R(0), std::nullopt), static_cast<int>(expected.size()));
        // Each isolating interval holds exactly one root.
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (!roots[j].exact) {
                EXPECT_EQ(s.count_roots(roots[j].lo, roots[j].hi), 1);
            }
            s.try_make_exact(roots[j], default_isolation_width());
            EXPECT_TRUE(roots[j].exact);
            EXPECT_EQ(roots[j].lo, expected[j]);
        }
    }
}

TEST(RootsProperty, IrrationalRootsOfRandomQuadratics)
{
    tg::Engine g(7);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Rational a = tg::nonzero_rational(g), b = tg::rational(g), c = tg::rational(g);
        const LaurentPoly p = LaurentPoly(a) * Y() * Y() + LaurentPoly(b) * Y() + LaurentPoly(c);
        const Rational disc_exact = b * b - 4 * a * c;
        const double disc = disc_exact.get_d();
        std::vector<double> expected;
        if (disc_exact > 0) {
            for (const double sgn : {-1.0, 1.0}) {
                const double root = (-b.get_d() + sgn * std::sqrt(disc)) / (2 * a.get_d());
                if (root > 1e-9)
                    expected.push_back(root);
            }
        } else if (disc_exact == 0 && -b.get_d() / (2 * a.get_d()) > 0) {
            expected.push_back(-b.get_d() / (2 * a.get_d()));
        }
        std::sort(expected.begin(), expected.end());
        if (c == 0)
            continue; // root at y = 0 sits on the boundary
        const SturmSequence s(p);
        auto roots = s.isolate(R(0), std::nullopt);
        ASSERT_EQ(roots.size(), expected.size()) << p.to_string();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            s.refine(roots[j], default_isolation_width());
            EXPECT_LE(roots[j].lo.get_d(), expected[j] + 1e-12);
            EXPECT_GE(roots[j].hi.get_d(), expected[j] - 1e-12);
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

// Sign certification

TEST(Certify, Examples)
{
    EXPECT_EQ(certify_sign_on_interval(Y() * Y(), Interval::positive_axis()),
        PositivityCertificate(NonnegativeOn{Interval::positive_axis()}));
    const LaurentPoly q = K(-1) - Y() * Y();
    const auto cert = certify_sign_on_interval(q, Interval::open(R(1), std::nullopt));
    EXPECT_EQ(cert, PositivityCertificate(NegativeWitness{R(2), R(-5)}));
    EXPECT_EQ(certify_sign_on_interval(LaurentPoly(), Interval::positive_axis()), PositivityCertificate(IdenticallyZero{}));
}

TEST(Certify, TouchingZeroIsNonnegative)
{
    const LaurentPoly p = (Y() - K(1, 2)) * (Y() - K(1, 2)) * (Y() - K(3)) * (Y() - K(3));
    EXPECT_TRUE(is_nonnegative(certify_sign_on_interval(p, Interval::positive_axis())));
    EXPECT_FALSE(is_nonnegative(certify_sign_on_interval(-p, Interval::positive_axis())));
}

TEST(Certify, NarrowNegativeGapBetweenCloseRoots)
{
    // Negative only on (1, 1 + 1/10^6).
    const LaurentPoly p = (Y() - K(1)) * (Y() - K(1'000'001, 1'000'000));
    const auto cert = certify_sign_on_interval(p, Interval::positive_axis());
    const auto* w = std::get_if<NegativeWitness>(&cert);
    ASSERT_NE(w, nullptr);
    EXPECT_LT(R(1), w->point);
    EXPECT_LT(w->point, R(1'000'001, 1'000'000));
    EXPECT_EQ(w->value, p.eval(w->point));
}

TEST(Certify, RejectsIntervalsLeftOfZero)
{
    EXPECT_EQ(code_of([] { certify_sign_on_interval(Y(), Interval::open(R(-1), R(1))); }), ErrorCode::InvalidInterval);
    EXPECT_EQ(code_of([] { Interval::open(R(2), R(1)); }), ErrorCode::InvalidInterval);
}

TEST(CertifyProperty, AgreesWithDenseSampling)
{
    tg::Engine g(8);
    int negatives = 0;
    int nonnegatives = 0;
    for (int i = 0; i < 40; ++i) {
        const tg::FactoredPoly f = tg::factored(g, 30);
        const LaurentPoly p = f.poly.shifted(static_cast<int>(tg::uniform_int(g, -2, 2)));
        Rational lo = tg::positive_rational(g, 4, 3) - 1;
        if (lo < 0)
            lo = 0;
        const Rational hi = lo + tg::positive_rational(g, 6, 2);
        const Interval iv = Interval::open(lo, hi);
        const auto cert = certify_sign_on_interval(p, iv);

        bool sampled_negative = false;
        for (int j = 1; j <= 1000; ++j) {
            const Rational x = lo + (hi - lo) * Rational(j, 1001);
            if (p.eval(x) < 0)
                sampled_negative = true;
        }
        if (const auto* w = std::get_if<NegativeWitness>(&cert)) {
            ++negatives;
            EXPECT_TRUE(iv.contains(w->point));
            EXPECT_LT(w->value, 0);
            EXPECT_EQ(w->value, p.eval(w->point));
        } else {
            ++nonnegatives;
            EXPECT_FALSE(sampled_negative) << p.to_string() << " on " << to_string(iv);
        }
    }
    EXPECT_GT(negatives, 5);
    EXPECT_GT(nonnegatives, 5);
}

// Determinants

namespace {

LaurentPoly cofactor_det(const LaurentMatrix& m)
{
    const std::size_t size = m.size();
    if (size == 0)
        return K(1);
    if (size == 1)
        return m[0][0];
    LaurentPoly total;
    for (std::size_t col = 0; col < size; ++col) {
        LaurentMatrix minor;
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<LaurentPoly> row;
            for (std::size_t c = 0; c < size; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const LaurentPoly term = m[0][col] * cofactor_det(minor);
        total = (col % 2 == 0) ? total + term : total - term;
    }
    return total;
}

} // namespace

TEST(Determinant, SmallCases)
{
    EXPECT_EQ(determinant({}), K(1));
    EXPECT_EQ(determinant({{Y()}}), Y());
    EXPECT_EQ(determinant({{Y(), K(1)}, {K(1), Y()}}), Y() * Y() - K(1));
    // A zero pivot forces a row swap.
    EXPECT_EQ(determinant({{LaurentPoly(), K(1)}, {K(1), LaurentPoly()}}), K(-1));
    EXPECT_TRUE(determinant({{Y(), Y()}, {Y(), Y()}}).is_zero());
}

TEST(DeterminantProperty, MatchesCofactorExpansion)
{
    tg::Engine g(9);
    for (int i = 0; i < 60; ++i) {
        const int size = static_cast<int>(tg::uniform_int(g, 1, 5));
        LaurentMatrix m(size, std::vector<LaurentPoly>(size));
        for (auto& row : m)
            for (auto& e : row)
                e = tg::laurent(g, -2, 2, 3);
        EXPECT_EQ(determinant(m), cofactor_det(m));
    }
}
