#include "identities.hpp"

#include "radext/error.hpp"
#include "radext/ke.hpp"

#include <gtest/gtest.h>

using namespace radext;
namespace tg = radext::testgen;
using tg::ke_with_root;

namespace {

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

const ExtremalParams kKenwb{R(4, 3), R(0), R(-1, 3), R(0), 2};

} // namespace

TEST(KeInvariants, Kenwb)
{
    const KEDiagnostics d = ke_invariants(kKenwb, R(2));
    EXPECT_EQ(d.lambda, -2);
    EXPECT_EQ(d.y_inf, Endpoint::exact(R(1)));
    ASSERT_TRUE(d.n_tilde);
    EXPECT_EQ(*d.n_tilde, 3);
    EXPECT_TRUE(d.y_inf_integral);
    EXPECT_TRUE(d.n_tilde_integral);
    EXPECT_FALSE(d.predicted_obstruction_k);
    EXPECT_FALSE(verify_prediction(kKenwb, d));
}

TEST(KeInvariants, WellBehavedIsTrivial)
{
    const ExtremalParams p{R(0), R(0), R(-1), R(0), 2};
    const KEDiagnostics d = ke_invariants(p, R(1));
    EXPECT_EQ(d.y_inf, Endpoint::zero());
    EXPECT_EQ(*d.n_tilde, 2);
    EXPECT_FALSE(d.predicted_obstruction_k);
}

TEST(KeInvariants, RationalNonIntegerRootPredictsObstruction)
{
    const ExtremalParams p = ke_with_root(R(3, 2), R(1));
    ASSERT_EQ(build_psi(p).eval(R(3, 2)), 0);
    const KEDiagnostics d = ke_invariants(p, R(2));
    EXPECT_EQ(d.y_inf, Endpoint::exact(R(3, 2)));
    EXPECT_FALSE(d.y_inf_integral);
    ASSERT_TRUE(d.predicted_obstruction_k);
    EXPECT_EQ(*d.predicted_obstruction_k, 3);
    EXPECT_EQ(q_sequence(p, AmbientSign::Plus, 3)[3].eval(R(3, 2)), R(-3, 8));

    const auto check = verify_prediction(p, d);
    ASSERT_TRUE(check);
    EXPECT_EQ(check->k, 3);
    EXPECT_EQ(*check->value, R(-3, 8));
    EXPECT_TRUE(check->sound);
    EXPECT_TRUE(check->neighborhood.strictly_negative);
    EXPECT_EQ(*check->neighborhood.interval.lo, R(3, 2));
}

TEST(KeInvariants, IntegralRootWithNonIntegralNTilde)
{
    // y_inf = 2, n~ = n - (lambda/2) y_inf = 2 - lambda; lambda = 1/2 gives n~ = 3/2.
    const ExtremalParams p = ke_with_root(R(2), R(1, 2));
    const KEDiagnostics d = ke_invariants(p, R(3));
    EXPECT_EQ(d.y_inf, Endpoint::exact(R(2)));
    EXPECT_EQ(*d.n_tilde, R(3, 2));
    EXPECT_TRUE(d.y_inf_integral);
    EXPECT_FALSE(d.n_tilde_integral);
    ASSERT_TRUE(d.predicted_obstruction_k);
    EXPECT_EQ(*d.predicted_obstruction_k, 2 + 1 + 2);

    const auto check = verify_prediction(p, d);
    ASSERT_TRUE(check);
    EXPECT_EQ(*check->value, 0);
    EXPECT_LT(*check->derivative, 0);
    EXPECT_TRUE(check->sound);
}

TEST(KeInvariants, IrrationalLowerEnd)
{
    // psi = y - A/y - C y^2 with A = 1, C = -1: y^3 + y^2 - 1 has one positive irrational root.
    const ExtremalParams p{R(1), R(0), R(-1), R(0), 2};
    const KEDiagnostics d = ke_invariants(p, R(2));
    ASSERT_EQ(d.y_inf.kind, Endpoint::Kind::IsolatedRoot);
    EXPECT_FALSE(d.y_inf_integral);
    ASSERT_TRUE(d.n_tilde_enclosure);
    EXPECT_FALSE(d.n_tilde);
    ASSERT_TRUE(d.predicted_obstruction_k);
    EXPECT_EQ(*d.predicted_obstruction_k, 2);
    const auto check = verify_prediction(p, d);
    ASSERT_TRUE(check);
    EXPECT_TRUE(check->sound);
}

TEST(KeInvariants, Errors)
{
    EXPECT_EQ(code_of([] { ke_invariants({R(0), R(1), R(0), R(0), 2}, R(2)); }), ErrorCode::NotKE);
    EXPECT_EQ(code_of([] { ke_invariants({R(0), R(0), R(0), R(1), 2}, R(1, 2)); }), ErrorCode::NotKE);
    EXPECT_EQ(code_of([] { ke_invariants(kKenwb, R(1, 2)); }), ErrorCode::NotInDomain);
}

TEST(FallingFactorialCheck, Examples)
{
    EXPECT_TRUE(falling_factorial_check(kKenwb, R(1), 11));
    EXPECT_EQ(q_sequence(kKenwb, AmbientSign::Plus, 11)[11].eval(R(1)), 0);
    EXPECT_TRUE(falling_factorial_check(ke_with_root(R(3, 2), R(1)), R(3, 2), 6));
    ExtremalParams perturbed = kKenwb;
    perturbed.A += R(1, 100);
    EXPECT_EQ(code_of([&] { falling_factorial_check(perturbed, R(1), 5); }), ErrorCode::NotARoot);
}

TEST(KeProperty, NTildeIdentityAndPredictionSoundness)
{
    tg::Engine g(41);
    int fired = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = static_cast<int>(tg::uniform_int(g, 2, 4));
        const Rational root = tg::positive_rational(g, 9, 4);
        const Rational lambda = tg::rational(g, 6, 3);
        const ExtremalParams p = ke_with_root(root, lambda, n);
        const LaurentPoly psi = build_psi(p);
        ASSERT_EQ(psi.eval(root), 0);
        EXPECT_EQ(psi.derivative().eval(root), n - lambda / 2 * root);
        EXPECT_TRUE(falling_factorial_check(p, root, 12));

        // Anchor just to the right of the root when psi is positive there.
        const Rational right = tg::right_of_root(psi, root);
        if (psi.eval(right) <= 0)
            continue;
        const KEDiagnostics d = ke_invariants(p, right);
        if (d.y_inf != Endpoint::exact(root))
            continue;
        EXPECT_EQ(*d.n_tilde, n - lambda / 2 * root);
        if (d.predicted_obstruction_k) {
            ++fired;
            const auto check = verify_prediction(p, d);
            ASSERT_TRUE(check);
            EXPECT_TRUE(check->sound) << "root " << root << " lambda " << lambda << " n " << n;
        }
    }
    EXPECT_GT(fired, 10);
}

TEST(NeighborhoodCertificate, ExampleAndFailure)
{
    const NeighborhoodCertificate c = certify_negative_right_neighborhood(q_sequence(kKenwb, AmbientSign::Plus, 11)[11], R(1));
    EXPECT_TRUE(c.strictly_negative);
    EXPECT_EQ(c.interval, Interval::open(R(1), R(281, 280)));
    EXPECT_LT(c.value, 0);

    const LaurentPoly positive = LaurentPoly::y() - LaurentPoly(R(1));
    EXPECT_FALSE(certify_negative_right_neighborhood(positive, R(1)).strictly_negative);
}

TEST(StabilityScan, ConstantCurvatureFamily)
{
    const ExtremalParams fs{R(0), R(0), R(1), R(0), 2};
    const auto entries = stability_scan(fs, {R(1, 2), R(2, 3), R(1), R(3, 2), R(2)}, R(1, 2), 8);
    ASSERT_EQ(entries.size(), 5U);
    EXPECT_EQ(std::get<ObstructedAt>(entries[0].report.verdict).k, 2);
    EXPECT_EQ(std::get<ObstructedAt>(entries[1].report.verdict).k, 2);
    EXPECT_EQ(entries[2].report.verdict, ObstructionVerdict(IdenticallyZeroFrom{2}));
    // alpha > 1 leaves Q_2 = (1 - 1/alpha) y^2 >= 0; the failure comes one step later.
    EXPECT_EQ(std::get<ObstructedAt>(entries[3].report.verdict).k, 3);
    // alpha = 2: C = 1/2, a degree-2 Veronese member, Q vanishes from k = 3.
    EXPECT_EQ(entries[4].report.verdict, ObstructionVerdict(IdenticallyZeroFrom{3}));
    EXPECT_EQ(*entries[1].lambda, R(6) / R(2, 3));
}

TEST(StabilityScan, NonIntegerMultiplesAboveOneFailAfterTheirCeiling)
{
    const ExtremalParams fs{R(0), R(0), R(1), R(0), 2};
    const std::vector<std::pair<Rational, int>> cases = {{R(11, 10), 3}, {R(5, 4), 3}, {R(5, 2), 4}, {R(7, 2), 5}};
    for (const auto& [alpha, k] : cases) {
        const auto entries = stability_scan(fs, {alpha}, R(1, 2), 12);
        EXPECT_EQ(std::get<ObstructedAt>(entries[0].report.verdict).k, k) << alpha;
    }
}

TEST(StabilityScan, HyperbolicMemberIsClear)
{
    const ExtremalParams hyp{R(0), R(0), R(-1), R(0), 2};
    for (const auto& entry : stability_scan(hyp, {R(9, 10), R(1), R(11, 10)}, R(1), 15))
        EXPECT_EQ(entry.report.verdict, ObstructionVerdict(ClearUpTo{15})) << entry.alpha;
}

TEST(StabilityScan, CommutesWithScaling)
{
    const ExtremalParams p = ke_with_root(R(3, 2), R(1));
    for (const Rational& alpha : {R(1, 3), R(4, 5), R(7, 2)}) {
        const auto via_scan = stability_scan(p, {alpha}, R(2), 6);
        const auto direct = stability_scan(scale_params(p, alpha), {R(1)}, alpha * 2, 6);
        EXPECT_EQ(via_scan[0].report, direct[0].report);
    }
    EXPECT_EQ(code_of([&] { stability_scan(p, {R(0)}, R(2), 3); }), ErrorCode::NonPositiveScale);
}
