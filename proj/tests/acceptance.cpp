// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "svt/checks.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"
#include "svt/insertion.hpp"
#include "svt/io.hpp"
#include "svt/keys.hpp"

using namespace svt;

namespace {

struct Result {
    bool ok;
    std::string detail;
};

SetValuedTableau svt_of(const SkewShape& shape, const std::vector<std::vector<std::vector<int>>>& rows)
{
    SetValuedTableau t{shape};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            t.rows[i][k] = mask_of(rows[i][k]);
    return t;
}

std::string str(const Word& w)
{
    std::string s;
    for (int x : w)
        s += std::to_string(x);
    return s;
}

Result worked_key_expansion()
{
    SkewShape s(Partition{2, 2, 0}, Partition{1, 0, 0});
    Flag flag{1, 3, 3};
    auto k = key_expansion_G(s, flag, 3);
    KeyExpansion expected{
        {{{0, 0, 0}, {1, 0, 2}}, 1},
        {{{0, 1, 0}, {2, 0, 2}}, -1},
        {{{0, 1, 0}, {1, 1, 2}}, -1},
        {{{0, 2, 0}, {2, 1, 2}}, 1},
    };
    bool same = assemble(k, 3) == grothendieck_flagged(s, flag, 3, Execution::serial);
    return {k == expected && same, format_text(k)};
}

Result dual_refined_in_g()
{
    SkewShape s(Partition{3, 2, 0}, Partition{1, 0, 0});
    auto e = expand_in_g(s, 3, Source::rpp);
    BasisExpansion expected{
        {{{0, 0, 0}, Partition{3, 1}}, 1}, {{{0, 0, 0}, Partition{3}}, -1}, {{{0, 0, 0}, Partition{2, 2}}, 1},
        {{{0, 0, 0}, Partition{2, 1}}, -1}, {{{1, 0, 0}, Partition{3}}, 1},
    };
    bool same = assemble(e, Basis::g, 3) == direct_function(s, 3, Source::rpp);
    return {e == expected && same, format_text(e, Basis::g)};
}

Result row_refined_in_g_and_G()
{
    SkewShape s(Partition{2, 2}, Partition{1});
    auto g = expand_in_g(s, 2, Source::svt);
    BasisExpansion expected{
        {{{0, 0}, Partition{2, 1}}, 1},
        {{{0, 0}, Partition{2}}, -1},
        {{{0, 1}, Partition{2, 2}}, -1},
        {{{0, 1}, Partition{2, 1}}, 1},
    };
    Polynomial direct = direct_function(s, 2, Source::svt);
    bool g_ok = g == expected && assemble(g, Basis::g, 2) == direct;
    auto G = expand_in_G(s, 2, Source::svt, 6);
    bool G_ok = assemble(G, Basis::G, 2, 6) == direct.truncate_x_degree(6);
    return {g_ok && G_ok, format_text(g, Basis::g) + "; G basis through degree 6: " + format_text(G, Basis::G)};
}

Result burge_example()
{
    Biword bw = biword_of_matrix({{1, 2, 0}, {2, 1, 3}});
    bool printed = str(bw.top) == "222222111" && str(bw.bottom) == "112333122";
    auto r = check_burge_round_trip(500, 3, 3, 3, 7);
    return {printed && r.ok, str(bw.top) + "/" + str(bw.bottom) + ", " + std::to_string(r.cases) + " round trips"};
}

Result word_set()
{
    auto w = word_set_W(Composition{1, 2, 0, 1}, Flag{1, 2, 3, 4});
    std::vector<std::string> got;
    for (const auto& x : w)
        got.push_back(str(x));
    std::sort(got.begin(), got.end());
    std::vector<std::string> printed{"3121", "3221", "4221"};
    std::string b = str(b_word(Composition{2, 3, 0, 1}));
    std::ostringstream os;
    os << "W = {";
    for (std::size_t k = 0; k < got.size(); ++k)
        os << (k ? "," : "") << got[k];
    os << "}, b(2,3,0,1) = " << b;
    if (got != printed)
        os << " (expected exactly 3121,3221,4221)";
    return {got == printed && b == "422211", os.str()};
}

Result demazure_figure()
{
    auto b = demazure_generate(Partition{2, 1, 0}, {1, 2}, 3);
    bool ok = b.size() == 5 && character(b, 3) == key_polynomial(Composition{0, 2, 1});
    return {ok, std::to_string(b.size()) + " elements, label " + to_string(demazure_label(b, 3))};
}

Result uncrowding()
{
    SkewShape theta(Partition{4, 3, 3, 2}, Partition{2, 2, 0, 0});
    SkewShape tau(Partition{4, 3, 3, 2}, Partition{1, 0, 0, 0});
    auto t = svt_of(tau, {{{1}, {1, 2}, {2}}, {{2}, {3}, {4}}, {{3, 5}, {6}, {6, 7}}, {{8}, {9}}});
    auto rec = uncrowd(theta, tau, {{{1, 2}, 1}, {{2, 1}, 2}, {{2, 2}, 1}}, t);
    SkewShape sigma(Partition{4, 3, 3, 2, 2, 2, 1, 1}, Partition{2, 2});
    bool eleven =
        rec.sigma == sigma &&
        rec.straightened ==
            svt_of(sigma, {{{1}, {2}}, {{4}}, {{1}, {2}, {6}}, {{2}, {3}}, {{3}, {6}}, {{5}, {9}}, {{7}}, {{8}}}) &&
        rec.recording == BoxLabels{{{5, 1}, 3}, {{5, 2}, 1}, {{6, 1}, 3}, {{6, 2}, 1}, {{7, 1}, 2}, {{8, 1}, 1}};

    SkewShape pt(Partition{4, 3, 2}, Partition{2, 1, 0});
    auto p = svt_of(pt, {{{1}, {1, 2}}, {{1, 2}, {2, 3}}, {{1}, {3}}});
    auto pr = uncrowd(p);
    SkewShape tilde(Partition{4, 4, 3, 1}, Partition{2, 1, 0, 0});
    bool phi = pr.sigma == tilde &&
               pr.straightened == svt_of(tilde, {{{1}, {1}}, {{1}, {2}, {2}}, {{1}, {2}, {3}}, {{3}}}) &&
               pr.recording == BoxLabels{{{2, 4}, 1}, {{3, 3}, 2}, {{4, 1}, 2}} &&
               flag_evolution(pr, {2, 3, 4}).back() == Flag{2, 2, 3, 3} &&
               uncrowd_inverse(pt, pr.sigma, pr.recording, pr.straightened) == p;
    auto r = check_uncrowd_round_trip(8, 3, 3);
    std::string detail = std::string("eleven-box ") + (eleven ? "ok" : "mismatch") + ", three-row example " +
                         (phi ? "ok" : "mismatch") + ", " + std::to_string(r.cases) + " round trips";
    if (!r.ok)
        detail += ": " + r.detail;
    return {eleven && phi && r.ok, detail};
}

Result theorem_suite()
{
    auto r = check_theorem_main(7, 3);
    return {r.ok, std::to_string(r.cases) + " flagged tableaux" + (r.ok ? "" : ": " + r.detail)};
}

Result remark()
{
    SkewShape theta(Partition{4, 3, 2}, Partition{2, 1, 0});
    SkewShape tilde(Partition{4, 4, 3, 1}, Partition{2, 1, 0, 0});
    BoxLabels q{{{2, 4}, 1}, {{3, 3}, 2}, {{4, 1}, 2}};
    Polynomial block(4, 0);
    for (const auto& c : classify_svt(theta, {2, 3, 4}, 4, Composition{1, 2, 0}))
        if (c.sigma == tilde && c.q == q)
            block += character(c.image, 4);
    Polynomial expected_block = key_polynomial(Composition{3, 4, 2, 0}) + key_polynomial(Composition{3, 3, 3, 0});
    Polynomial rest = flagged_schur(tilde, {2, 2, 3, 3}, 4) - block;
    Polynomial expected_rest = key_polynomial(Composition{2, 4, 3, 0}) + key_polynomial(Composition{4, 4, 1, 0});
    std::map<Composition, Polynomial::Coeff> kb = key_expand(block), kr = key_expand(rest);
    auto show = [](const std::map<Composition, Polynomial::Coeff>& m) {
        std::string s;
        for (const auto& [a, c] : m)
            s += (s.empty() ? "" : "+") + (c == 1 ? "" : std::to_string(c)) + "k" + to_string(a);
        return s;
    };
    return {block == expected_block && rest == expected_rest, "classes " + show(kb) + ", remainder " + show(kr)};
}

Result crystal_suite()
{
    auto r = check_crystal_axioms(6, 3);
    return {r.ok, std::to_string(r.cases) + " tableaux" + (r.ok ? "" : ": " + r.detail)};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds, 0 for none
        std::function<Result()> run;
    };
    std::vector<Criterion> criteria{
        {1, "worked key expansion", 1, worked_key_expansion},
        {2, "refined dual g in the g basis", 1, dual_refined_in_g},
        {3, "row-refined G in the g and G bases", 5, row_refined_in_g_and_G},
        {4, "Burge example and round trips", 5, burge_example},
        {5, "word set W and b word", 0, word_set},
        {6, "Demazure crystal B_{s1s2}(2,1,0)", 0, demazure_figure},
        {7, "uncrowding examples and round trips", 60, uncrowding},
        {8, "Demazure structure suite", 600, theorem_suite},
        {9, "class characters versus flagged Schur", 0, remark},
        {10, "crystal axiom suite", 60, crystal_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit <= 0 || secs < c.limit;
        bool ok = r.ok && in_time;
        failed += !ok;
        std::ostringstream os;
        os.precision(3);
        os << std::fixed << secs;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << os.str() << " s"
                  << (in_time ? "" : ", over the time limit") << "] " << r.detail << std::endl;
    }
    return failed ? 1 : 0;
}
