#include <gtest/gtest.h>

#include "braidtwist/braidtwist.hpp"
#include "support.hpp"

using namespace braidtwist;
using braidtwist::testing::artin_equal;

namespace {

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

}  // namespace

TEST(MurasugiWord, Transcriptions) {
    EXPECT_EQ(to_word(MurasugiClass1{0, {1}}), W(3, {1, -2}));
    EXPECT_EQ(to_word(MurasugiClass2{1, -2}), W(3, {1, 2, 1, 1, 2, 1, -2, -2}));
    EXPECT_EQ(to_word(MurasugiClass3{0, -1}), W(3, {-1, -2}));
}

TEST(MurasugiWord, InvalidForms) {
    EXPECT_THROW(to_word(MurasugiClass1{0, {}}), braid_error);
    EXPECT_THROW(to_word(MurasugiClass1{0, {0, 0}}), braid_error);
    EXPECT_THROW(to_word(MurasugiClass1{0, {1, -1}}), braid_error);
    EXPECT_THROW(to_word(MurasugiClass3{0, -4}), braid_error);
    EXPECT_THROW(to_word(MurasugiClass3{0, 1}), braid_error);
}

TEST(MurasugiFdtc, ClosedForms) {
    EXPECT_EQ(fdtc_3braid(MurasugiClass1{2, {1, 3}}), Rational(2));
    EXPECT_EQ(fdtc_3braid(MurasugiClass3{0, -2}), Rational(-1, 2));
    EXPECT_EQ(fdtc_3braid(MurasugiClass2{0, 5}), Rational(0));
    EXPECT_EQ(fdtc_3braid(MurasugiClass3{1, -3}), Rational(1, 3));
}

TEST(MurasugiQA, Examples) {
    EXPECT_TRUE(is_quasi_alternating(MurasugiClass1{0, {2}}));
    EXPECT_TRUE(is_quasi_alternating(MurasugiClass2{1, -3}));
    EXPECT_FALSE(is_quasi_alternating(MurasugiClass3{2, -1}));
    EXPECT_FALSE(is_quasi_alternating(MurasugiClass1{2, {1}}));
    EXPECT_TRUE(is_quasi_alternating(MurasugiClass2{-1, 2}));
    EXPECT_FALSE(is_quasi_alternating(MurasugiClass2{1, 2}));
    EXPECT_TRUE(is_quasi_alternating(MurasugiClass3{1, -2}));
}

TEST(MurasugiCrossCheck, Examples) {
    EXPECT_TRUE(cross_check(MurasugiClass3{0, -1}));
    EXPECT_TRUE(cross_check(MurasugiClass1{-1, {1, 1}}));
    EXPECT_TRUE(cross_check(MurasugiClass2{3, -4}));
    EXPECT_EQ(fdtc_exact(to_word(MurasugiClass1{-1, {1, 1}})).value, Rational(-1));
    EXPECT_EQ(fdtc_exact(to_word(MurasugiClass2{3, -4})).value, Rational(3));
}

TEST(MurasugiCrossCheck, QuasiAlternatingFiniteOrderHasSmallTwist) {
    for (int d = -3; d <= 3; ++d) {
        for (int m : {-1, -2, -3}) {
            const Murasugi3Form f = MurasugiClass3{d, m};
            if (is_quasi_alternating(f)) {
                EXPECT_LE(abs(fdtc_3braid(f)), Rational(1));
            }
        }
        const Murasugi3Form f1 = MurasugiClass1{d, {1, 2}};
        if (is_quasi_alternating(f1)) {
            EXPECT_LE(abs(fdtc_3braid(f1)), Rational(1));
        }
    }
}

TEST(Families, Ktd) {
    const auto w = generate(FamilyKtd{1, 1});
    EXPECT_EQ(w.size(), 10u);
    EXPECT_EQ(w, W(3, {2, 1, 2, 1, 2, 1, 2, 1, -2, -2}));
    EXPECT_EQ(closure_components(w), 1);
}

TEST(Families, BTtau) {
    const auto w = generate(FamilyBTtau{1});
    EXPECT_TRUE(artin_equal(w, concat(full_twist(3), W(3, {-1, -2, -2, -2, -2, -2}))));
    EXPECT_EQ(w.size(), 12u);
}

TEST(Families, Torus) { EXPECT_EQ(generate(FamilyTorus{3, 4}), W(3, {1, 2, 1, 2, 1, 2, 1, 2})); }

TEST(Families, FullTwists) {
    const auto base = W(3, {1, -2});
    const auto w = generate(FamilyFullTwists{base, 2});
    EXPECT_TRUE(artin_equal(w, concat(base, full_twist_power(3, 2))));
    EXPECT_EQ(fdtc_exact(w).value, fdtc_exact(base).value + 2);
}

TEST(Families, InvalidParameters) {
    EXPECT_THROW(generate(FamilyKtd{-1, 1}), braid_error);
    EXPECT_THROW(generate(FamilyKtd{1, 0}), braid_error);
    EXPECT_THROW(generate(FamilyBTtau{0}), braid_error);
    EXPECT_THROW(generate(FamilyTorus{1, 3}), braid_error);
    EXPECT_THROW(generate(FamilyTorus{3, 0}), braid_error);
}

TEST(Families, BTtauBetweenKMinusOneAndK) {
    for (int k = 1; k <= 3; ++k) {
        const auto bt = fdtc_exact(generate(FamilyBTtau{k})).value;
        EXPECT_GE(bt, Rational(k - 1));
        EXPECT_LE(bt, Rational(k));
    }
}

TEST(Families, TorusFdtc) {
    for (int p = 2; p <= 4; ++p) {
        for (int q = 1; q <= 5; ++q) EXPECT_EQ(fdtc_exact(generate(FamilyTorus{p, q})).value, Rational(q, p));
    }
}
