#include "svt/crystal.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace svt {

namespace {

void check_index(int i, int n)
{
    if (i < 1 || i > n - 1)
        throw std::out_of_range("crystal index " + std::to_string(i) + " outside [1, " + std::to_string(n - 1) + "]");
}

// '+' = 1, '-' = -1, '0' = 0 per position; returns uncanceled positions.
Signature reduce_signs(const std::vector<int>& signs, int offset)
{
    Signature s;
    for (std::size_t k = 0; k < signs.size(); ++k) {
        int p = static_cast<int>(k) + offset;
        if (signs[k] < 0)
            s.minus.push_back(p);
        else if (signs[k] > 0) {
            if (!s.minus.empty())
                s.minus.pop_back();
            else
                s.plus.push_back(p);
        }
    }
    return s;
}

int row_with_letter_in_column(const SetValuedTableau& t, int col, int a)
{
    for (int r = 1; r <= t.shape.rows(); ++r)
        if (t.shape.contains(r, col) && mask_has(t.at(r, col), a))
            return r;
    throw std::logic_error("signature column lost its letter");
}

}  // namespace

namespace {

// Unmatched signs of the column signature: counts, the leftmost '-' and the rightmost '+'.
struct SignSummary {
    int minus = 0, plus = 0;
    int first_minus = 0, last_plus = 0;
};

template <class Visit>
void column_signs(const SetValuedTableau& t, int i, Visit visit)
{
    const auto& s = t.shape;
    if (s.empty())
        return;
    int rows = s.rows();
    int c0 = s.min_col(), c1 = s.max_col();
    std::array<Mask, 64> small;
    std::vector<Mask> large;
    Mask* col = small.data();
    if (c1 - c0 + 1 > static_cast<int>(small.size())) {
        large.assign(c1 - c0 + 1, 0);
        col = large.data();
    } else {
        std::fill_n(col, c1 - c0 + 1, Mask{0});
    }
    for (int r = 1; r <= rows; ++r) {
        const auto& row = t.rows[r - 1];
        int b = s.row_begin(r);
        for (std::size_t k = 0; k < row.size(); ++k)
            col[b + static_cast<int>(k) - c0] |= row[k];
    }
    Mask bi = letter_bit(i), bj = letter_bit(i + 1);
    for (int c = c0; c <= c1; ++c) {
        bool has_i = col[c - c0] & bi, has_j = col[c - c0] & bj;
        if (has_i != has_j)
            visit(c, has_i ? 1 : -1);
    }
}

SignSummary summary(const SetValuedTableau& t, int i)
{
    SignSummary r;
    column_signs(t, i, [&](int c, int sign) {
        if (sign < 0) {
            if (r.minus++ == 0)
                r.first_minus = c;
        } else if (r.minus > 0) {
            --r.minus;
        } else {
            ++r.plus;
            r.last_plus = c;
        }
    });
    return r;
}

}  // namespace

Signature signature(const SetValuedTableau& t, int i)
{
    Signature sig;
    column_signs(t, i, [&](int c, int sign) {
        if (sign < 0)
            sig.minus.push_back(c);
        else if (!sig.minus.empty())
            sig.minus.pop_back();
        else
            sig.plus.push_back(c);
    });
    return sig;
}

namespace {

bool lower_in_place(SetValuedTableau& u, int i)
{
    auto sig = summary(u, i);
    if (sig.plus == 0)
        return false;
    int c = sig.last_plus;
    int r = row_with_letter_in_column(u, c, i);
    Mask bi = letter_bit(i), bj = letter_bit(i + 1);
    if (u.shape.contains(r, c + 1) && mask_has(u.at(r, c + 1), i)) {
        u.at(r, c + 1) &= ~bi;
        u.at(r, c) |= bj;
    } else {
        u.at(r, c) = (u.at(r, c) & ~bi) | bj;
    }
    return true;
}

bool raise_in_place(SetValuedTableau& u, int i)
{
    auto sig = summary(u, i);
    if (sig.minus == 0)
        return false;
    int c = sig.first_minus;
    int r = row_with_letter_in_column(u, c, i + 1);
    Mask bi = letter_bit(i), bj = letter_bit(i + 1);
    if (u.shape.contains(r, c - 1) && mask_has(u.at(r, c - 1), i + 1)) {
        u.at(r, c - 1) &= ~bj;
        u.at(r, c) |= bi;
    } else {
        u.at(r, c) = (u.at(r, c) & ~bj) | bi;
    }
    return true;
}

}  // namespace

std::optional<SetValuedTableau> lowering(const SetValuedTableau& t, int i, int n)
{
    check_index(i, n);
    if (summary(t, i).plus == 0)
        return kZero;
    SetValuedTableau u = t;
    lower_in_place(u, i);
    return u;
}

std::optional<SetValuedTableau> raising(const SetValuedTableau& t, int i, int n)
{
    check_index(i, n);
    if (summary(t, i).minus == 0)
        return kZero;
    SetValuedTableau u = t;
    raise_in_place(u, i);
    return u;
}

template <class E>
static std::pair<int, int> repeated_lengths(const E& x, int i, int n)
{
    int eps = 0, phi = 0;
    for (auto y = raising(x, i, n); y; y = raising(*y, i, n))
        ++eps;
    for (auto y = lowering(x, i, n); y; y = lowering(*y, i, n))
        ++phi;
    return {eps, phi};
}

// Applies the operators to one working copy instead of allocating per step.
std::pair<int, int> string_lengths(const SetValuedTableau& t, int i, int n)
{
    check_index(i, n);
    int eps = 0, phi = 0;
    SetValuedTableau u = t;
    while (raise_in_place(u, i))
        ++eps;
    u = t;
    while (lower_in_place(u, i))
        ++phi;
    return {eps, phi};
}

Signature signature(const Word& w, int i)
{
    std::vector<int> signs(w.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == i)
            signs[k] = 1;
        else if (w[k] == i + 1)
            signs[k] = -1;
    }
    return reduce_signs(signs, 0);
}

std::optional<Word> lowering(const Word& w, int i, int n)
{
    check_index(i, n);
    auto sig = signature(w, i);
    if (sig.plus.empty())
        return kZero;
    Word u = w;
    u[sig.plus.back()] = i + 1;
    return u;
}

std::optional<Word> raising(const Word& w, int i, int n)
{
    check_index(i, n);
    auto sig = signature(w, i);
    if (sig.minus.empty())
        return kZero;
    Word u = w;
    u[sig.minus.front()] = i;
    return u;
}

std::pair<int, int> string_lengths(const Word& w, int i, int n) { return repeated_lengths(w, i, n); }

bool is_highest_weight(const Word& w, int n)
{
    for (int i = 1; i < n; ++i)
        if (raising(w, i, n))
            return false;
    return true;
}

bool is_highest_weight(const SetValuedTableau& t, int n)
{
    for (int i = 1; i < n; ++i)
        if (raising(t, i, n))
            return false;
    return true;
}

std::vector<SetValuedTableau> row_factors(const SetValuedTableau& t)
{
    std::vector<SetValuedTableau> out;
    const auto& s = t.shape;
    for (int r = s.rows(); r >= 1; --r) {
        SetValuedTableau row(SkewShape(Partition({s.row_end(r)}), Partition({s.row_begin(r) - 1})));
        row.rows[0] = t.rows[r - 1];
        out.push_back(row);
    }
    return out;
}

SetValuedTableau assemble_rows(const SkewShape& shape, const std::vector<SetValuedTableau>& factors)
{
    SetValuedTableau t(shape);
    int k = 0;
    for (int r = shape.rows(); r >= 1; --r, ++k)
        t.rows[r - 1] = factors.at(k).rows[0];
    return t;
}

SetValuedTableau highest_weight_tableau(const Partition& lambda)
{
    SetValuedTableau t{SkewShape(lambda)};
    for (int r = 1; r <= lambda.length(); ++r)
        for (auto& m : t.rows[r - 1])
            m = letter_bit(r);
    return t;
}

std::vector<int> permutation_of_word(const std::vector<int>& word, int n)
{
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k)
        perm[k] = k + 1;
    for (int a : word) {
        check_index(a, n);
        std::swap(perm[a - 1], perm[a]);
    }
    return perm;
}

int permutation_length(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inv;
    return inv;
}

bool is_reduced(const std::vector<int>& word, int n)
{
    return permutation_length(permutation_of_word(word, n)) == static_cast<int>(word.size());
}

Composition act(const std::vector<int>& perm, const Composition& alpha)
{
    Composition out(alpha.size(), 0);
    for (std::size_t j = 0; j < alpha.size(); ++j)
        out[perm[j] - 1] = alpha[j];
    return out;
}

std::vector<SetValuedTableau> string_closure(const std::vector<SetValuedTableau>& start, const std::vector<int>& word,
                                             int n, bool lower)
{
    std::set<SetValuedTableau, CanonicalLess> cur(start.begin(), start.end());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::set<SetValuedTableau, CanonicalLess> next;
        for (const auto& x : cur) {
            next.insert(x);
            auto y = lower ? lowering(x, *it, n) : raising(x, *it, n);
            while (y) {
                next.insert(*y);
                y = lower ? lowering(*y, *it, n) : raising(*y, *it, n);
            }
        }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

std::vector<SetValuedTableau> demazure_generate(const Partition& lambda, const std::vector<int>& word, int n)
{
    if (!is_reduced(word, n))
        throw std::invalid_argument("demazure_generate: word is not reduced");
    if (lambda.length() > n)
        throw std::invalid_argument("demazure_generate: partition has more than n parts");
    return string_closure({highest_weight_tableau(lambda)}, word, n, true);
}

Polynomial character(const std::vector<SetValuedTableau>& set, int n)
{
    Polynomial p(n, 0);
    for (const auto& t : set)
        p.add_term(weight(t, n), 1);
    return p;
}

Composition key_label(const Polynomial& ch, const Partition& lambda, int n)
{
    Composition lam = pad(lambda.parts(), n);
    if (static_cast<int>(lam.size()) > n)
        lam.resize(n);
    Composition gamma = lam;
    std::sort(gamma.begin(), gamma.end());
    std::vector<Composition> hits;
    do {
        if (key_polynomial(gamma) == ch)
            hits.push_back(gamma);
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    if (hits.size() != 1)
        throw NoKeyMatch("key_label: " + std::to_string(hits.size()) + " key polynomials match the character " +
                         ch.to_string());
    return hits.front();
}

Composition demazure_label(const std::vector<SetValuedTableau>& component, int n)
{
    if (component.empty())
        throw NoKeyMatch("demazure_label: empty set");
    return key_label(character(component, n), component.front().shape.outer(), n);
}

}  // namespace svt
