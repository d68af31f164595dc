#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "svt/checks.hpp"
#include "svt/enumerate.hpp"

using namespace svt;
using namespace svt::test;

TEST(Crystal, LoweringOnATwoRowExample)
{
    SkewShape s(Partition{2, 2}, Partition{1});
    auto t = svt_of(s, {{{1}}, {{1, 2}, {2}}});
    auto f = lowering(t, 2, 3);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, svt_of(s, {{{1}}, {{1, 2}, {3}}}));
}

TEST(Crystal, ZeroExactlyWhenNoUncanceledPlus)
{
    auto t = highest_weight_tableau(Partition{2, 1});
    EXPECT_EQ(*lowering(t, 2, 3), svt_of(t.shape, {{{1}, {1}}, {{3}}}));
    EXPECT_FALSE(lowering(highest_weight_tableau(Partition{1, 1}), 1, 3));
    EXPECT_FALSE(raising(t, 1, 3));
    EXPECT_FALSE(raising(t, 2, 3));
    for (int i = 1; i <= 2; ++i)
        EXPECT_EQ(string_lengths(t, i, 3).first, 0);
}

TEST(Crystal, SingleLetter)
{
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(string_lengths(Word{i}, i, 4), (std::pair{0, 1}));
        EXPECT_EQ(*lowering(Word{i}, i, 4), Word{i + 1});
    }
}

TEST(Crystal, IndexOutOfRangeThrows)
{
    auto t = highest_weight_tableau(Partition{1});
    EXPECT_THROW(lowering(t, 0, 3), std::out_of_range);
    EXPECT_THROW(raising(t, 3, 3), std::out_of_range);
}

// Exhaustive on SVT_3((2,2)/(1)) with excess (0,1).
TEST(Crystal, AxiomsOnTwoTwoOverOne)
{
    SkewShape s(Partition{2, 2}, Partition{1});
    auto set = enumerate_svt(s, constant_flag(2, 3), Composition{0, 1});
    for (const auto& t : set)
        for (int i = 1; i <= 2; ++i) {
            if (auto f = lowering(t, i, 3)) {
                EXPECT_EQ(*raising(*f, i, 3), t);
                EXPECT_EQ(excess(*f), excess(t));
            }
            auto [eps, phi] = string_lengths(t, i, 3);
            auto sig = signature(t, i);
            EXPECT_EQ(eps, static_cast<int>(sig.minus.size()));
            EXPECT_EQ(phi, static_cast<int>(sig.plus.size()));
            auto w = weight(t, 3);
            EXPECT_EQ(phi - eps, w[i - 1] - w[i]);
        }
}

TEST(Crystal, TensorOfRowsAgreesWithDirectOperators)
{
    SkewShape s(Partition{4, 3, 2}, Partition{2, 1});
    auto t = svt_of(s, {{{1}, {2, 3}}, {{1, 2}, {2}}, {{3}, {4}}});
    ASSERT_TRUE(is_valid_svt(t));
    auto factors = row_factors(t);
    EXPECT_EQ(assemble_rows(s, factors), t);
    for (int i = 1; i <= 3; ++i) {
        auto direct = lowering(t, i, 4);
        auto tensor = tensor_lowering(factors, i, 4);
        ASSERT_EQ(direct.has_value(), tensor.has_value());
        if (direct)
            EXPECT_EQ(assemble_rows(s, *tensor), *direct);
        EXPECT_EQ(tensor_string_lengths(factors, i, 4), string_lengths(t, i, 4));
    }
}

// phi of a two-letter tensor against repeated application on the word.
TEST(Crystal, TensorStringLengthsOnLetterPairs)
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int i = 1; i <= 2; ++i)
                EXPECT_EQ(tensor_string_lengths(std::vector<Word>{{a}, {b}}, i, 3), string_lengths(Word{a, b}, i, 3));
}

TEST(Crystal, AxiomSuiteSmall)
{
    auto r = check_crystal_axioms(4, 3);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_GT(r.cases, 0u);
}

TEST(Demazure, FiveElementCrystal)
{
    auto b = demazure_generate(Partition{2, 1, 0}, {1, 2}, 3);
    EXPECT_EQ(b.size(), 5u);
    EXPECT_EQ(demazure_label(b, 3), (Composition{0, 2, 1}));
    EXPECT_EQ(character(b, 3), key_polynomial(Composition{0, 2, 1}));
}

TEST(Demazure, IdentityAndLongestElement)
{
    Partition lam{2, 1};
    auto id = demazure_generate(lam, {}, 3);
    ASSERT_EQ(id.size(), 1u);
    EXPECT_EQ(id[0], highest_weight_tableau(lam));

    auto full = demazure_generate(lam, {1, 2, 1}, 3);
    auto ssyt = enumerate_ssyt(SkewShape(lam), constant_flag(2, 3));
    ASSERT_EQ(full.size(), ssyt.size());
    std::set<SetValuedTableau, CanonicalLess> a(full.begin(), full.end()), b;
    for (const auto& t : ssyt)
        b.insert(to_svt(t));
    EXPECT_TRUE(a == b);
    EXPECT_EQ(character(full, 3), schur_poly(lam, 3));
}

TEST(Demazure, IndependentOfReducedWord)
{
    for (const auto& lam : partitions_up_to(5, 3))
        EXPECT_EQ(demazure_generate(lam, {1, 2, 1}, 3), demazure_generate(lam, {2, 1, 2}, 3));
}

// character(B_w(lambda)) = kappa_{w.lambda} for every lambda with |lambda| <= 6 and n = 3
TEST(Demazure, CharacterIsTheKeyPolynomial)
{
    const std::vector<std::vector<int>> words = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
    for (const auto& lam : partitions_up_to(6, 3))
        for (const auto& w : words) {
            Composition alpha = act(permutation_of_word(w, 3), pad(lam.parts(), 3));
            auto b = demazure_generate(lam, w, 3);
            EXPECT_EQ(character(b, 3), key_polynomial(alpha)) << to_string(lam) << " " << word_string(w);
            EXPECT_EQ(demazure_label(b, 3), alpha);
        }
}

TEST(Demazure, EmptySetHasZeroCharacter)
{
    EXPECT_TRUE(character({}, 3).is_zero());
}

TEST(Demazure, DominantLabel)
{
    Partition lam{3, 1, 0};
    EXPECT_EQ(demazure_label({highest_weight_tableau(lam)}, 3), (Composition{3, 1, 0}));
}
