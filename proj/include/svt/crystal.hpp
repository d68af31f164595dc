#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "svt/polynomial.hpp"
#include "svt/tableau.hpp"

namespace svt {

using Word = std::vector<int>;

// Crystal operators return std::nullopt for the zero element.
inline constexpr std::nullopt_t kZero = std::nullopt;

struct Signature {
    std::vector<int> plus;   // columns (or positions) of uncanceled +, left to right
    std::vector<int> minus;  // columns (or positions) of uncanceled -, left to right
};

// Column-sign scan: - over columns containing i+1 but not i, + over columns
// containing i but not i+1; (-,+) pairs cancel.
Signature signature(const SetValuedTableau& t, int i);
std::optional<SetValuedTableau> lowering(const SetValuedTableau& t, int i, int n);
std::optional<SetValuedTableau> raising(const SetValuedTableau& t, int i, int n);
// (epsilon_i, phi_i) by repeated application
std::pair<int, int> string_lengths(const SetValuedTableau& t, int i, int n);

// Words as tensor products of letters, leftmost letter first.
Signature signature(const Word& w, int i);
std::optional<Word> lowering(const Word& w, int i, int n);
std::optional<Word> raising(const Word& w, int i, int n);
std::pair<int, int> string_lengths(const Word& w, int i, int n);
bool is_highest_weight(const Word& w, int n);
bool is_highest_weight(const SetValuedTableau& t, int n);

template <class E>
concept CrystalElement = requires(const E& e, int i, int n) {
    { lowering(e, i, n) } -> std::same_as<std::optional<E>>;
    { raising(e, i, n) } -> std::same_as<std::optional<E>>;
    { string_lengths(e, i, n) } -> std::same_as<std::pair<int, int>>;
};

// f_i on x_1 (x) ... (x) x_k: acts on the first j maximizing
// sum_{h<=j} phi(x_h) - sum_{h<j} eps(x_h).
template <CrystalElement E>
std::optional<std::vector<E>> tensor_lowering(const std::vector<E>& xs, int i, int n)
{
    int best = 0;
    int arg = -1;
    int run = 0;
    int prev_eps = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        auto [eps, phi] = string_lengths(xs[j], i, n);
        run += phi - prev_eps;
        prev_eps = eps;
        if (arg < 0 || run > best) {
            best = run;
            arg = static_cast<int>(j);
        }
    }
    if (arg < 0 || best <= 0)
        return kZero;
    auto y = lowering(xs[arg], i, n);
    if (!y)
        return kZero;
    auto out = xs;
    out[arg] = *y;
    return out;
}

// e_i on x_k (x) ... (x) x_1 (x_1 rightmost): acts on the first j, counted
// from the right, maximizing sum_{h<=j} eps(x_h) - sum_{h<j} phi(x_h).
template <CrystalElement E>
std::optional<std::vector<E>> tensor_raising(const std::vector<E>& xs, int i, int n)
{
    int best = 0;
    int arg = -1;
    int run = 0;
    int prev_phi = 0;
    for (std::size_t r = xs.size(); r-- > 0;) {
        auto [eps, phi] = string_lengths(xs[r], i, n);
        run += eps - prev_phi;
        prev_phi = phi;
        if (arg < 0 || run > best) {
            best = run;
            arg = static_cast<int>(r);
        }
    }
    if (arg < 0 || best <= 0)
        return kZero;
    auto y = raising(xs[arg], i, n);
    if (!y)
        return kZero;
    auto out = xs;
    out[arg] = *y;
    return out;
}

template <CrystalElement E>
std::pair<int, int> tensor_string_lengths(const std::vector<E>& xs, int i, int n)
{
    int phi = 0, run = 0, prev_eps = 0;
    bool first = true;
    for (const auto& x : xs) {
        auto [e, p] = string_lengths(x, i, n);
        run += p - prev_eps;
        prev_eps = e;
        if (first || run > phi)
            phi = run;
        first = false;
    }
    int eps = 0;
    run = 0;
    int prev_phi = 0;
    first = true;
    for (std::size_t r = xs.size(); r-- > 0;) {
        auto [e, p] = string_lengths(xs[r], i, n);
        run += e - prev_phi;
        prev_phi = p;
        if (first || run > eps)
            eps = run;
        first = false;
    }
    return {std::max(eps, 0), std::max(phi, 0)};
}

// Rows of a tableau as one-row tableaux, bottom row first.
std::vector<SetValuedTableau> row_factors(const SetValuedTableau& t);
SetValuedTableau assemble_rows(const SkewShape& shape, const std::vector<SetValuedTableau>& factors);

// T_lambda: the SSYT of shape lambda with row i filled by i.
SetValuedTableau highest_weight_tableau(const Partition& lambda);
// Permutation of [n] from a word in simple reflections (one-line notation).
std::vector<int> permutation_of_word(const std::vector<int>& word, int n);
int permutation_length(const std::vector<int>& perm);
bool is_reduced(const std::vector<int>& word, int n);

// B_w(lambda) = {f_{i1}^{k1} ... f_{ip}^{kp} T_lambda} \ {0}, canonical order.
std::vector<SetValuedTableau> demazure_generate(const Partition& lambda, const std::vector<int>& word, int n);
// Closure of `start` under powers of the given operators, rightmost letter first.
std::vector<SetValuedTableau> string_closure(const std::vector<SetValuedTableau>& start, const std::vector<int>& word,
                                             int n, bool lower);

// (w.alpha)_i = alpha_{w^{-1}(i)}
Composition act(const std::vector<int>& perm, const Composition& alpha);

Polynomial character(const std::vector<SetValuedTableau>& set, int n);
// The unique rearrangement gamma of lambda with character(set) = kappa_gamma.
Composition demazure_label(const std::vector<SetValuedTableau>& component, int n);

// The unique rearrangement gamma of lambda (padded to n) with kappa_gamma = ch.
Composition key_label(const Polynomial& ch, const Partition& lambda, int n);

struct NoKeyMatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace svt
