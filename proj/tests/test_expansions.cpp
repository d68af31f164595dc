#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "svt/checks.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"
#include "svt/io.hpp"

using namespace svt;
using namespace svt::test;

namespace {

const SkewShape kWorked(Partition{2, 2, 0}, Partition{1, 0, 0});

Polynomial kappa_sum(const std::vector<Composition>& labels)
{
    Polynomial p(static_cast<int>(labels.front().size()), 0);
    for (const auto& a : labels)
        p += key_polynomial(a);
    return p;
}

}  // namespace

TEST(Expansions, WorkedKeyExpansion)
{
    auto k = key_expansion_G(kWorked, {1, 3, 3}, 3);
    KeyExpansion expected{
        {{{0, 0, 0}, {1, 0, 2}}, 1},
        {{{0, 1, 0}, {2, 0, 2}}, -1},
        {{{0, 1, 0}, {1, 1, 2}}, -1},
        {{{0, 2, 0}, {2, 1, 2}}, 1},
    };
    EXPECT_EQ(k, expected);
    EXPECT_EQ(assemble(k, 3), grothendieck_flagged(kWorked, {1, 3, 3}, 3));
}

TEST(Expansions, WorkedCompatibleTableaux)
{
    Flag flag{1, 3, 3};
    std::vector<IntTableau> rs;
    std::vector<Flag> flags;
    for (const auto& c : classify_svt(kWorked, flag, 3)) {
        rs.push_back(c.r_prime);
        flags.push_back(c.flag);
    }
    std::vector<IntTableau> expected{
        straight_tableau({{1, 2}, {2}}),
        straight_tableau({{1, 2}, {2, 3}}),
        straight_tableau({{1, 2}, {2}, {3}}),
        straight_tableau({{1, 2}, {2, 3}, {4}}),
    };
    for (const auto& r : expected)
        EXPECT_NE(std::find(rs.begin(), rs.end(), r), rs.end()) << to_string(r);
    EXPECT_EQ(rs.size(), 4u);
    EXPECT_NE(std::find(flags.begin(), flags.end(), Flag{1, 3, 3, 3}), flags.end());
}

TEST(Expansions, SingleBox)
{
    auto g = grothendieck_flagged(SkewShape(Partition{1}), {1}, 1);
    EXPECT_EQ(g, Polynomial::monomial({1}, {0}));
    auto d = dual_g_flagged(SkewShape(Partition{1}), {3}, 3);
    EXPECT_EQ(d.set_t(0), schur_poly(Partition{1}, 3).widened(3, 3).set_t(0));
}

TEST(Expansions, ZeroTSpecializationIsFlaggedSchur)
{
    auto r = check_random_expansions(50, 8, 3, 2024);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Expansions, DualKeyExpansionReassembles)
{
    SkewShape s(Partition{3, 2, 0}, Partition{1, 0, 0});
    for (const auto& flag : all_flags(3, 3)) {
        auto k = key_expansion_g(s, flag, 3);
        EXPECT_EQ(assemble(k, 3), dual_g_flagged(s, flag, 3));
    }
}

TEST(Expansions, RppClassesOfTheExample)
{
    SkewShape s(Partition{3, 2, 0}, Partition{1, 0, 0});
    auto classes = classify_rpp(s, constant_flag(3, 3), 3);
    std::vector<IntTableau> highest;
    for (const auto& c : classes) {
        highest.push_back(c.highest);
        EXPECT_TRUE(is_yamanouchi(rpp_row_reading(c.highest).first));
    }
    EXPECT_EQ(highest.size(), 3u);
    auto ts = compatible_tableaux(s, 3, Source::rpp);
    std::set<std::pair<std::string, Composition>> got, want{
        {to_string(straight_tableau({{1, 1, 2}, {2}})), {0, 0, 0}},
        {to_string(straight_tableau({{1, 1}, {2, 2}})), {0, 0, 0}},
        {to_string(straight_tableau({{1, 2, 2}})), {1, 0, 0}},
    };
    for (const auto& c : ts)
        got.insert({to_string(c.tableau), c.stat});
    EXPECT_EQ(got, want);
}

TEST(Expansions, RppsOfTheFirstCompatibleTableau)
{
    auto t1 = straight_tableau({{1, 1, 2}, {2}});
    for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
             {{1, 1, 2}, {2}}, {{1, 1, 2}, {1, 2}}, {{1, 1, 2}, {1, 2, 2}}}) {
        auto r = straight_tableau(rows);
        ASSERT_TRUE(is_valid_rpp(r));
        EXPECT_EQ(rect(rpp_reading_word(r)), t1);
    }
}

TEST(Expansions, DualRefinedInTheGBasis)
{
    auto e = expand_in_g(SkewShape(Partition{3, 2, 0}, Partition{1, 0, 0}), 3, Source::rpp);
    BasisExpansion expected{
        {{{0, 0, 0}, Partition{3, 1}}, 1},  {{{0, 0, 0}, Partition{3}}, -1},
        {{{0, 0, 0}, Partition{2, 2}}, 1},  {{{0, 0, 0}, Partition{2, 1}}, -1},
        {{{1, 0, 0}, Partition{3}}, 1},
    };
    EXPECT_EQ(e, expected);
}

TEST(Expansions, RowRefinedInBothBases)
{
    SkewShape s(Partition{2, 2}, Partition{1});
    auto g = expand_in_g(s, 2, Source::svt);
    BasisExpansion expected_g{
        {{{0, 0}, Partition{2, 1}}, 1},
        {{{0, 0}, Partition{2}}, -1},
        {{{0, 1}, Partition{2, 2}}, -1},
        {{{0, 1}, Partition{2, 1}}, 1},
    };
    EXPECT_EQ(g, expected_g);
    auto G = expand_in_G(s, 2, Source::svt, 6);
    EXPECT_EQ(assemble(G, Basis::G, 2, 6), direct_function(s, 2, Source::svt).truncate_x_degree(6));
}

TEST(Expansions, SchurExpansionOfRowRefined)
{
    SkewShape s(Partition{2, 2}, Partition{1});
    auto e = schur_expansion(compatible_tableaux(s, 2, Source::svt), 2);
    EXPECT_EQ(assemble(e, Basis::schur, 2), direct_function(s, 2, Source::svt));
}

TEST(Expansions, EmptyShape)
{
    SkewShape empty(Partition{1}, Partition{1});
    BasisExpansion one{{{{0, 0}, Partition{}}, 1}};
    EXPECT_EQ(expand_in_g(empty, 2, Source::svt), one);
    EXPECT_EQ(expand_in_G(empty, 2, Source::rpp), one);
    EXPECT_EQ(format_text(key_expansion_G(SkewShape(), {1}, 1)), "1");
}

TEST(Classify, ThreeRowBlock)
{
    SkewShape theta(Partition{4, 3, 2}, Partition{2, 1, 0});
    auto classes = classify_svt(theta, {2, 3, 4}, 4, Composition{1, 2, 0});
    SkewShape tilde(Partition{4, 4, 3, 1}, Partition{2, 1, 0, 0});
    BoxLabels q{{{2, 4}, 1}, {{3, 3}, 2}, {{4, 1}, 2}};
    std::vector<const SvtClass*> block;
    std::size_t members = 0;
    for (const auto& c : classes)
        if (c.sigma == tilde && c.q == q) {
            block.push_back(&c);
            members += c.members.size();
            EXPECT_EQ(c.flag, (Flag{2, 2, 3, 3}));
        }
    EXPECT_EQ(members, 3u);
    ASSERT_EQ(block.size(), 2u);
    std::set<Composition> labels{block[0]->label, block[1]->label};
    EXPECT_EQ(labels, (std::set<Composition>{{3, 4, 2, 0}, {3, 3, 3, 0}}));

    // the block is strictly smaller than the flagged Schur function of its shape
    Polynomial block_ch = character(block[0]->image, 4) + character(block[1]->image, 4);
    EXPECT_EQ(block_ch, kappa_sum({{3, 4, 2, 0}, {3, 3, 3, 0}}));
    Polynomial rest = flagged_schur(tilde, {2, 2, 3, 3}, 4) - block_ch;
    EXPECT_FALSE(rest.is_zero());
    EXPECT_EQ(rest, kappa_sum({{2, 4, 3, 0}, {4, 4, 1, 0}}));
}

TEST(Classify, ClassesAreDemazureCrystals)
{
    SkewShape s(Partition{3, 2, 1}, Partition{1});
    auto all = enumerate_svt(s, {2, 3, 3});
    auto classes = classify_svt(s, {2, 3, 3}, 3);
    std::size_t total = 0;
    for (const auto& c : classes) {
        EXPECT_EQ(verify_class(c, 3), "");
        total += c.members.size();
    }
    EXPECT_EQ(total, all.size());
}

TEST(Classify, DemazureStructureSuiteSmall)
{
    auto r = check_theorem_main(5, 3);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Parallel, GeneratingFunctionsMatchSerial)
{
    SkewShape s(Partition{3, 3, 1}, Partition{1});
    Flag flag{3, 3, 3};
    EXPECT_EQ(grothendieck_flagged(s, flag, 3, Execution::serial), grothendieck_flagged(s, flag, 3, Execution::parallel));
    EXPECT_EQ(dual_g_flagged(s, flag, 3, Execution::serial), dual_g_flagged(s, flag, 3, Execution::parallel));
    EXPECT_EQ(key_expansion_G(s, flag, 3, Execution::serial), key_expansion_G(s, flag, 3, Execution::parallel));
}

TEST(Parallel, ClassesMatchSerial)
{
    SkewShape s(Partition{3, 2, 2}, Partition{2});
    Flag flag{2, 3, 3};
    auto a = classify_svt(s, flag, 3, std::nullopt, Execution::serial);
    auto b = classify_svt(s, flag, 3, std::nullopt, Execution::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].members, b[k].members);
        EXPECT_EQ(a[k].label, b[k].label);
    }
}

TEST(Parallel, ChecksMatchSerial)
{
    auto a = check_crystal_axioms(4, 3, Execution::serial);
    auto b = check_crystal_axioms(4, 3, Execution::parallel);
    EXPECT_EQ(a.ok, b.ok);
    EXPECT_EQ(a.cases, b.cases);
}
