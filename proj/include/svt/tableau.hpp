#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svt/shape.hpp"

namespace svt {

// A set of letters 1..63 stored as bits (bit k <-> letter k).
using Mask = std::uint64_t;
inline constexpr int kMaxLetter = 63;

inline Mask letter_bit(int a) { return Mask{1} << a; }
inline int mask_min(Mask m) { return std::countr_zero(m); }
inline int mask_max(Mask m) { return 63 - std::countl_zero(m); }
inline int mask_count(Mask m) { return std::popcount(m); }
inline bool mask_has(Mask m, int a) { return (m >> a) & 1u; }
Mask mask_of(const std::vector<int>& letters);
std::vector<int> letters_of(Mask m);
// lexicographic comparison of the sorted letter lists
bool mask_less(Mask a, Mask b);

// A filling of a skew shape stored row by row; rows[i-1][k] is box (i, inner_i + 1 + k).
template <class V>
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<V>> rows;

    Tableau() = default;
    explicit Tableau(SkewShape s) : shape(std::move(s))
    {
        rows.resize(shape.rows());
        for (int i = 1; i <= shape.rows(); ++i)
            rows[i - 1].assign(shape.row_length(i), V{});
    }

    V& at(int i, int j) { return rows[i - 1][j - shape.row_begin(i)]; }
    const V& at(int i, int j) const { return rows[i - 1][j - shape.row_begin(i)]; }
    V& at(Box b) { return at(b.row, b.col); }
    const V& at(Box b) const { return at(b.row, b.col); }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.shape == b.shape && a.rows == b.rows; }
};

using SetValuedTableau = Tableau<Mask>;
// SSYT and reverse plane partitions.
using IntTableau = Tableau<int>;
// Recording tableaux on arbitrary box sets (T', T'', Q'').
using BoxLabels = std::map<Box, int>;

// Canonical order: shape, then row-major lexicographic on sorted cell contents.
bool canonical_less(const SetValuedTableau& a, const SetValuedTableau& b);
bool canonical_less(const IntTableau& a, const IntTableau& b);
struct CanonicalLess {
    template <class T>
    bool operator()(const T& a, const T& b) const
    {
        return canonical_less(a, b);
    }
};

bool is_valid_svt(const SetValuedTableau& t);
bool is_valid_ssyt(const IntTableau& t);
bool is_valid_rpp(const IntTableau& t);
bool respects_flag(const SetValuedTableau& t, const Flag& flag);

// Rows of T given as rows of a straight shape (inner = 0).
IntTableau straight_tableau(const std::vector<std::vector<int>>& rows);
SetValuedTableau to_svt(const IntTableau& t);
// Requires every cell to be a singleton.
IntTableau to_ssyt(const SetValuedTableau& t);

Composition weight(const SetValuedTableau& t, int n);
Composition weight(const IntTableau& t, int n);
// ex_i = entries in row i - boxes in row i; length = rows of the outer shape
Composition excess(const SetValuedTableau& t);
int total_excess(const SetValuedTableau& t);
int max_letter(const SetValuedTableau& t);
int max_letter(const IntTableau& t);
// ceq_i = number of boxes (i,j) with (i+1,j) in the shape holding the same value
Composition ceq(const IntTableau& r);
// r_i = number of columns containing i
Composition rpp_weight(const IntTableau& r, int n);

bool is_reverse_row_strict(const BoxLabels& p);
// strict: every entry in row i is < i; otherwise <= i
bool is_row_bounded(const BoxLabels& p, bool strict);
Composition label_weight(const BoxLabels& p, int n);

std::string to_string(const SetValuedTableau& t);
std::string to_string(const IntTableau& t);

}  // namespace svt
