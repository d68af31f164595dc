#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"

using namespace svt;
using namespace svt::test;

TEST(Shapes, ConnectedComponents)
{
    EXPECT_EQ(connected_components(SkewShape(Partition{5, 3, 3, 1}, Partition{4, 2, 1})).size(), 3u);
    EXPECT_EQ(connected_components(SkewShape(Partition{3, 3, 2}, Partition{2, 1})).size(), 1u);
    EXPECT_TRUE(SkewShape(Partition{3, 3, 2}, Partition{2, 1}).is_connected());
    EXPECT_TRUE(connected_components(SkewShape(Partition{2, 1}, Partition{2, 1})).empty());
}

TEST(Shapes, ComponentsAreNormalized)
{
    for (const auto& c : connected_components(SkewShape(Partition{5, 3, 3, 1}, Partition{4, 2, 1}))) {
        EXPECT_TRUE(c.shape.is_connected());
        EXPECT_EQ(c.shape.min_col(), 1);
        EXPECT_GT(c.shape.row_length(1), 0);
    }
}

TEST(Shapes, StarComposition)
{
    SkewShape s(Partition{6, 4, 4, 3, 1}, Partition{4, 4, 2, 2, 0});
    std::vector<SkewShape> parts;
    for (const auto& c : connected_components(s))
        parts.push_back(c.shape);
    EXPECT_EQ(star_layout(parts).composite, SkewShape(Partition{5, 3, 2, 1}, Partition{3, 1, 1, 0}));

    SkewShape box(Partition{1});
    EXPECT_EQ(star_compose(box, box), SkewShape(Partition{2, 1}, Partition{1, 0}));
    SkewShape theta(Partition{3, 2}, Partition{1});
    EXPECT_EQ(star_compose(theta, SkewShape()), theta);
}

TEST(Tableaux, WeightAndExcessOfAFourRowFilling)
{
    SkewShape s(Partition{4, 3, 2, 1}, Partition{2, 1});
    auto u = svt_of(s, {{{1, 2}, {2}}, {{1}, {2, 3}}, {{1}, {2, 3, 4}}, {{3}}});
    // as drawn, column 3 has {1,2} above {2,3}
    EXPECT_FALSE(is_valid_svt(u));
    EXPECT_EQ(weight(u, 4), (Composition{3, 4, 3, 1}));
    EXPECT_EQ(excess(u), (Composition{1, 1, 2, 0}));
}

TEST(Tableaux, RppStatistics)
{
    auto r = int_of(SkewShape(Partition{4, 3, 2}, Partition{1}), {{2, 3, 4}, {1, 2, 3}, {1, 3}});
    ASSERT_TRUE(is_valid_rpp(r));
    EXPECT_EQ(ceq(r), (Composition{2, 1, 0}));

    auto r2 = straight_tableau({{1, 2, 3}, {1, 3}});
    ASSERT_TRUE(is_valid_rpp(r2));
    EXPECT_EQ(rpp_weight(r2, 3), (Composition{1, 1, 2}));
    EXPECT_FALSE(is_valid_ssyt(r2));
}

TEST(Enumerate, HighestWeightElementsOfTheWorkedExample)
{
    SkewShape s(Partition{2, 2, 0}, Partition{1, 0, 0});
    std::vector<SetValuedTableau> hw;
    for (const auto& t : enumerate_svt(s, {1, 3, 3}))
        if (is_highest_weight(t, 3))
            hw.push_back(t);
    std::vector<SetValuedTableau> expected = {
        svt_of(s, {{{1}}, {{1}, {2}}}),
        svt_of(s, {{{1}}, {{1, 2}, {2}}}),
        svt_of(s, {{{1}}, {{1}, {2, 3}}}),
        svt_of(s, {{{1}}, {{1, 2}, {2, 3}}}),
    };
    std::set<SetValuedTableau, CanonicalLess> a(hw.begin(), hw.end()), b(expected.begin(), expected.end());
    EXPECT_EQ(hw.size(), 4u);
    EXPECT_TRUE(a == b);
}

TEST(Enumerate, ZeroExcessGivesSemistandardTableaux)
{
    SkewShape s(Partition{3, 2, 1}, Partition{1});
    Flag flag{2, 3, 3};
    auto zero = enumerate_svt(s, flag, Composition{0, 0, 0});
    auto ssyt = enumerate_ssyt(s, flag);
    ASSERT_EQ(zero.size(), ssyt.size());
    for (std::size_t k = 0; k < zero.size(); ++k)
        EXPECT_EQ(to_ssyt(zero[k]), ssyt[k]);
}

TEST(Enumerate, CountsFromExhaustiveGeneration)
{
    SkewShape s(Partition{2, 2}, Partition{1});
    EXPECT_EQ(enumerate_svt(s, constant_flag(2, 3), Composition{0, 1}).size(), 9u);
    EXPECT_EQ(enumerate_rpp(SkewShape(Partition{1}), {1}).size(), 1u);
    EXPECT_EQ(enumerate_rpp(SkewShape(Partition{2}), {2}).size(), 3u);
}

// Independent count: each of the 2^n - 1 nonempty subsets of [n] is a single-box SVT.
TEST(Enumerate, SingleBox)
{
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(enumerate_svt(SkewShape(Partition{1}), {n}).size(), static_cast<std::size_t>((1 << n) - 1));
}

TEST(Enumerate, FlagsAreRespected)
{
    SkewShape s(Partition{3, 2, 2}, Partition{1, 1});
    Flag flag{1, 2, 4};
    for (const auto& t : enumerate_svt(s, flag)) {
        EXPECT_TRUE(is_valid_svt(t));
        EXPECT_TRUE(respects_flag(t, flag));
    }
}

TEST(Enumerate, ExcessFilterPartitionsTheSet)
{
    SkewShape s(Partition{3, 2}, Partition{1});
    Flag flag{3, 3};
    auto all = enumerate_svt(s, flag);
    std::size_t sum = 0;
    std::set<Composition> seen;
    for (const auto& t : all)
        seen.insert(excess(t));
    for (const auto& e : seen)
        sum += enumerate_svt(s, flag, e).size();
    EXPECT_EQ(sum, all.size());
}

TEST(Enumerate, NormalizedShapesHaveNoEmptyRowsOrColumns)
{
    for (const auto& s : normalized_skew_shapes(5)) {
        EXPECT_EQ(s.min_col(), 1);
        for (int r = 1; r <= s.rows(); ++r)
            EXPECT_GT(s.row_length(r), 0);
    }
}
