#include "svt/keys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace svt {

IntTableau key_tableau(const Composition& alpha)
{
    Partition lam = sort_decreasing(alpha);
    IntTableau t{SkewShape(lam)};
    for (int c = 1; c <= lam[0]; ++c) {
        int r = 1;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] >= c)
                t.at(r++, c) = static_cast<int>(i) + 1;
    }
    return t;
}

Composition key_weight(const IntTableau& t)
{
    int n = std::max(max_letter(t), t.shape.rows());
    Composition a = weight(t, n);
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    if (!(key_tableau(a) == t))
        throw std::invalid_argument("key_weight: not a key tableau");
    return a;
}

bool is_key(const IntTableau& t)
{
    if (!t.shape.is_straight() || !is_valid_ssyt(t))
        return false;
    int width = t.shape.rows() ? t.shape.row_end(1) : 0;
    // each column's entry set contains the next column's
    for (int c = 2; c <= width; ++c)
        for (int r = 1; r <= t.shape.rows() && t.shape.contains(r, c); ++r) {
            bool found = false;
            for (int q = 1; q <= t.shape.rows() && t.shape.contains(q, c - 1); ++q)
                found = found || t.at(q, c - 1) == t.at(r, c);
            if (!found)
                return false;
        }
    return true;
}

IntTableau left_key(const IntTableau& r)
{
    if (!r.shape.is_straight() || !is_valid_ssyt(r))
        throw std::invalid_argument("left_key: expected a semistandard tableau of partition shape");
    const auto& s = r.shape;
    IntTableau k = r;
    int width = s.rows() ? s.row_end(1) : 0;
    auto height = [&](int c) {
        int h = 0;
        while (h < s.rows() && s.contains(h + 1, c))
            ++h;
        return h;
    };
    for (int j = 1; j <= width; ++j) {
        int hj = height(j);
        std::vector<std::vector<bool>> used(j + 1);
        for (int c = 1; c < j; ++c)
            used[c].assign(height(c), false);
        std::vector<int> col;
        for (int row = hj; row >= 1; --row) {
            int cur = r.at(row, j);
            for (int c = j - 1; c >= 1; --c) {
                int pick = -1;
                for (int q = 0; q < static_cast<int>(used[c].size()); ++q)
                    if (!used[c][q] && r.at(q + 1, c) <= cur)
                        pick = q;
                if (pick < 0)
                    throw std::logic_error("left_key: scan found no entry");
                used[c][pick] = true;
                cur = r.at(pick + 1, c);
            }
            col.push_back(cur);
        }
        std::sort(col.begin(), col.end());
        for (int row = 1; row <= hj; ++row)
            k.at(row, j) = col[row - 1];
    }
    return k;
}

namespace {

SetValuedTableau lowest_weight_tableau(const Partition& lambda, int n)
{
    SetValuedTableau t{SkewShape(lambda)};
    for (int c = 1; c <= lambda[0]; ++c) {
        int h = 0;
        while (h < lambda.length() && lambda[h] >= c)
            ++h;
        for (int r = 1; r <= h; ++r)
            t.at(r, c) = letter_bit(n - h + r);
    }
    return t;
}

// one reduced word per permutation of [n]
std::vector<std::vector<int>> reduced_words(int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        // bubble sort perm to the identity; the reversed swaps give a reduced word
        std::vector<int> p = perm, word;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int k = 0; k + 1 < n; ++k)
                if (p[k] > p[k + 1]) {
                    std::swap(p[k], p[k + 1]);
                    word.push_back(k + 1);
                    moved = true;
                }
        }
        std::reverse(word.begin(), word.end());
        out.push_back(word);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

IntTableau left_key_oracle(const IntTableau& r, int n)
{
    if (!r.shape.is_straight() || !is_valid_ssyt(r))
        throw std::invalid_argument("left_key_oracle: expected a semistandard tableau of partition shape");
    Partition lam = r.shape.outer();
    if (lam.length() > n || max_letter(r) > n)
        throw std::invalid_argument("left_key_oracle: tableau does not fit in n letters");
    SetValuedTableau target = to_svt(r);
    SetValuedTableau low = lowest_weight_tableau(lam, n);
    Composition rev = pad(lam.parts(), n);
    std::reverse(rev.begin(), rev.end());
    std::size_t best_size = 0;
    Composition best;
    for (const auto& word : reduced_words(n)) {
        auto set = string_closure({low}, word, n, false);
        bool hit = std::binary_search(set.begin(), set.end(), target, CanonicalLess{});
        if (!hit)
            continue;
        if (best.empty() || set.size() < best_size) {
            best_size = set.size();
            best = act(permutation_of_word(word, n), rev);
        }
    }
    return key_tableau(best);
}

Composition beta(const IntTableau& r, int n) { return weight(left_key(r), n); }

std::vector<Word> word_set_W(const Composition& alpha, const Flag& flag)
{
    int n = static_cast<int>(alpha.size());
    if (static_cast<int>(flag.size()) < n)
        throw std::invalid_argument("word_set_W: flag shorter than alpha");
    Word b = b_word(alpha);
    IntTableau key = key_tableau(alpha);
    std::vector<Word> out;
    Word v;
    // blocks are filled from v^(n) down to v^(1)
    std::function<void(int, int)> block = [&](int i, int prev_last) {
        if (i == 0) {
            auto [p, q] = burge(Biword{b, v});
            if (q == key)
                out.push_back(v);
            return;
        }
        int len = alpha[i - 1];
        if (len == 0) {
            block(i - 1, prev_last);
            return;
        }
        int cap = flag[i - 1];
        std::function<void(int, int)> fill = [&](int k, int lo) {
            if (k == len) {
                block(i - 1, v.back());
                return;
            }
            int hi = cap;
            if (k == 0 && prev_last > 0)
                hi = std::min(hi, prev_last - 1);
            for (int x = lo; x <= hi; ++x) {
                v.push_back(x);
                fill(k + 1, x);
                v.pop_back();
            }
        };
        fill(0, 1);
    };
    block(n, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace svt
