#include <gtest/gtest.h>

#include "braidtwist/braidtwist.hpp"
#include "support.hpp"

using namespace braidtwist;
using braidtwist::testing::artin_equal;
using braidtwist::testing::WordSampler;

namespace {

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

BraidWord torus(int p, int q) { return generate(FamilyTorus{p, q}); }

}  // namespace

TEST(Floor, PaperFamilyGrid) {
    for (int m = 0; m <= 4; ++m) {
        for (int k = 1; k <= 4; ++k) {
            EXPECT_EQ(dehornoy_floor(generate(FamilyKtd{m, k})).floor, m) << "m=" << m << " k=" << k;
        }
    }
}

TEST(Floor, ShiftsByFullTwistPowers) {
    WordSampler s;
    for (int i = 0; i < 40; ++i) {
        const int n = s.pick(2, 4);
        const auto b = s.word(n, 10);
        const int c = s.pick(-3, 3);
        EXPECT_EQ(dehornoy_floor(concat(full_twist_power(n, c), b)).floor, c + dehornoy_floor(b).floor);
    }
}

TEST(Floor, SingleGenerator) { EXPECT_EQ(dehornoy_floor(W(3, {1})).floor, 0); }

TEST(Floor, ExactFullTwistPowers) {
    for (int n = 2; n <= 5; ++n) {
        for (int t = -3; t <= 3; ++t) EXPECT_EQ(dehornoy_floor(full_twist_power(n, t)).floor, t);
    }
}

TEST(Floor, IdentityAndInverseGenerator) {
    EXPECT_EQ(dehornoy_floor(BraidWord(3, {})).floor, 0);
    EXPECT_EQ(dehornoy_floor(W(2, {-1})).floor, -1);
    EXPECT_EQ(dehornoy_ceiling(W(2, {-1})), 0);
}

TEST(FdtcInterval, Identity) {
    for (int N : {1, 3, 10}) {
        const auto iv = fdtc_interval(BraidWord(4, {}), N);
        EXPECT_EQ(iv.first, Rational(0));
        EXPECT_EQ(iv.second, Rational(1, N));
    }
}

TEST(FdtcInterval, FullTwistSquared) {
    // The floor of Delta^4 is 2, so the interval is (2/2, 3/2).
    EXPECT_EQ(dehornoy_floor(power(full_twist(3), 2)).floor, 2);
    const auto iv = fdtc_interval(full_twist(3), 2);
    EXPECT_EQ(iv.first, Rational(1));
    EXPECT_EQ(iv.second, Rational(3, 2));
}

TEST(FdtcInterval, CubeRootOfFullTwist) {
    const auto w = W(3, {1, 2});
    ASSERT_TRUE(artin_equal(power(w, 3), full_twist(3)));
    const auto iv = fdtc_interval(w, 3);
    EXPECT_EQ(iv.first, Rational(1, 3));
    EXPECT_EQ(iv.second, Rational(2, 3));
}

TEST(FdtcExact, TorusBraids) {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {4, 3}, {3, 5}, {5, 2}, {2, 7}}) {
        EXPECT_EQ(fdtc_exact(torus(p, q)).value, Rational(q, p)) << p << "," << q;
    }
}

TEST(FdtcExact, NegativeThreeBraids) {
    EXPECT_EQ(fdtc_exact(W(3, {-1, -2})).value, Rational(-1, 3));
    EXPECT_EQ(fdtc_exact(W(3, {-1, -1, -2})).value, Rational(-1, 2));
    EXPECT_EQ(fdtc_exact(W(3, {-1, -1, -1, -2})).value, Rational(-2, 3));
}

TEST(FdtcExact, RootsOfFullTwistOracle) {
    // w^k = Delta^{2j} (checked independently) forces BT(w) = j/k.
    struct Case {
        BraidWord w;
        int k;
        int j;
    };
    const std::vector<Case> cases = {
        {W(3, {-1, -2}), 3, -1},
        {W(3, {-1, -1, -2}), 2, -1},
        {W(4, {1, 2, 3}), 4, 1},
        {W(4, {1, 2, 3, 1}), 3, 1},
        {garside_delta(5), 2, 1},
    };
    for (const auto& c : cases) {
        ASSERT_TRUE(artin_equal(power(c.w, c.k), full_twist_power(c.w.strands(), c.j))) << to_text(c.w);
        EXPECT_EQ(fdtc_exact(c.w).value, Rational(c.j, c.k)) << to_text(c.w);
    }
}

TEST(FdtcExact, IdentityIsZero) {
    const auto r = fdtc_exact(BraidWord(3, {}));
    EXPECT_EQ(r.value, Rational(0));
    EXPECT_EQ(r.power_used, 10);
}

TEST(FdtcExact, CertificateBracketsValue) {
    WordSampler s;
    for (int i = 0; i < 40; ++i) {
        const int n = s.pick(2, 4);
        const auto r = fdtc_exact(s.word(n, 10));
        EXPECT_EQ(r.power_used, n * n + 1);
        EXPECT_EQ(r.lo, Rational(r.floor_of_power, r.power_used));
        EXPECT_EQ(r.hi, Rational(r.floor_of_power + 1, r.power_used));
        EXPECT_LE(r.lo, r.value);
        EXPECT_LE(r.value, r.hi);
        EXPECT_LE(r.value.denominator(), n);
    }
}

TEST(FdtcExact, StepCapPropagates) {
    FdtcOptions opts;
    opts.step_cap = 0;
    EXPECT_THROW(fdtc_exact(W(3, {1, -2}), opts), step_cap_exceeded);
}

TEST(SignBounds, Examples) {
    EXPECT_EQ(word_sign_bounds(W(3, {1, -2, 1})), (SignBounds{true, true}));
    EXPECT_EQ(fdtc_exact(W(3, {1, -2, 1})).value, Rational(0));
    EXPECT_EQ(word_sign_bounds(full_twist(3)), (SignBounds{true, false}));
    EXPECT_EQ(word_sign_bounds(W(3, {1, -1, 2, -2})), (SignBounds{false, false}));
}

TEST(DestabBounds, Examples) {
    EXPECT_EQ(destab_bounds(W(3, {1, 1, 2})), (std::pair{Rational(0), Rational(1)}));
    EXPECT_EQ(destab_bounds(W(3, {1, -2})), (std::pair{Rational(-1), Rational(0)}));
    EXPECT_EQ(destab_bounds(full_twist(3)), std::nullopt);
}

TEST(Rationals, TextForm) {
    EXPECT_EQ(to_string(Rational(3)), "3");
    EXPECT_EQ(to_string(Rational(-2, 6)), "-1/3");
    EXPECT_EQ(parse_rational("-1/3"), Rational(-1, 3));
    EXPECT_EQ(parse_rational("4"), Rational(4));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
