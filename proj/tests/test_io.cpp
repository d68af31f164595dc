#include <gtest/gtest.h>

#include "helpers.hpp"
#include "svt/enumerate.hpp"
#include "svt/io.hpp"

using namespace svt;
using namespace svt::test;

TEST(Json, TableauRoundTrip)
{
    SkewShape s(Partition{4, 3, 2, 1}, Partition{2, 1});
    auto t = svt_of(s, {{{1, 2}, {2}}, {{1}, {2, 3}}, {{1}, {2, 3, 4}}, {{3}}});
    Json j = to_json(t);
    EXPECT_EQ(svt_from_json(Json::parse(j.dump())), t);
    auto r = straight_tableau({{1, 2, 3}, {1, 3}});
    EXPECT_EQ(int_tableau_from_json(to_json(r)), r);
}

TEST(Json, RejectsMalformedTableaux)
{
    Json missing = {{"outer", {2}}, {"cells", Json::array({Json::array({1, 1, {1}})})}};
    EXPECT_THROW(svt_from_json(missing), std::invalid_argument);
    Json outside = {{"outer", {1}}, {"cells", Json::array({Json::array({1, 2, {1}})})}};
    EXPECT_THROW(svt_from_json(outside), std::invalid_argument);
    Json empty_cell = {{"outer", {1}}, {"cells", Json::array({Json::array({1, 1, Json::array()})})}};
    EXPECT_THROW(svt_from_json(empty_cell), std::invalid_argument);
}

TEST(Json, PolynomialRoundTrip)
{
    Polynomial p = grothendieck_flagged(SkewShape(Partition{2, 1}), {2, 3}, 3);
    Json j = to_json(p);
    EXPECT_EQ(j.at("vars").size(), 6u);
    EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), p);
}

TEST(Json, LabelsRoundTrip)
{
    BoxLabels q{{{2, 4}, 1}, {{3, 3}, 2}, {{4, 1}, 2}};
    EXPECT_EQ(labels_from_json(to_json(q)), q);
}

TEST(Format, KeyExpansionText)
{
    auto k = key_expansion_G(SkewShape(Partition{2, 2, 0}, Partition{1, 0, 0}), {1, 3, 3}, 3);
    EXPECT_EQ(format_text(k), "k(1,0,2) - t2*k(1,1,2) - t2*k(2,0,2) + t2^2*k(2,1,2)");
    EXPECT_EQ(format_latex(k),
              "\\kappa_{(1,0,2)} - t_{2}\\kappa_{(1,1,2)} - t_{2}\\kappa_{(2,0,2)} + t_{2}^{2}\\kappa_{(2,1,2)}");
    EXPECT_EQ(to_json(k).at("terms").size(), 4u);
}

TEST(Format, BasisExpansionText)
{
    BasisExpansion e{{{{0, 0}, Partition{2, 1}}, 1}, {{{0, 1}, Partition{2, 2}}, -2}};
    EXPECT_EQ(format_text(e, Basis::g), "g(2,1) - 2*t2*g(2,2)");
    EXPECT_EQ(format_text(BasisExpansion{}, Basis::G), "0");
}

TEST(Format, CrystalDot)
{
    auto set = enumerate_svt(SkewShape(Partition{1}), {2}, Composition{0});
    std::string dot = crystal_dot(set, 2);
    EXPECT_NE(dot.find("digraph crystal"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1 [label=\"1\"]"), std::string::npos);
}
