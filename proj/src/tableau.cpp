#include "svt/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace svt {

Mask mask_of(const std::vector<int>& letters)
{
    Mask m = 0;
    for (int a : letters) {
        if (a < 1 || a > kMaxLetter)
            throw std::invalid_argument("letter out of range 1.." + std::to_string(kMaxLetter) + ": " +
                                        std::to_string(a));
        m |= letter_bit(a);
    }
    return m;
}

std::vector<int> letters_of(Mask m)
{
    std::vector<int> out;
    while (m) {
        int a = std::countr_zero(m);
        out.push_back(a);
        m &= m - 1;
    }
    return out;
}

bool mask_less(Mask a, Mask b)
{
    Mask d = a ^ b;
    if (!d)
        return false;
    int x = std::countr_zero(d);
    Mask above = ~((letter_bit(x) << 1) - 1);
    if (mask_has(a, x))
        return (b & above) != 0;
    return (a & above) == 0;
}

namespace {

template <class V, class Less>
bool rows_less(const Tableau<V>& a, const Tableau<V>& b, Less less)
{
    if (a.shape != b.shape)
        return a.shape < b.shape;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.rows[i].size(); ++k) {
            if (less(a.rows[i][k], b.rows[i][k]))
                return true;
            if (less(b.rows[i][k], a.rows[i][k]))
                return false;
        }
    return false;
}

}  // namespace

bool canonical_less(const SetValuedTableau& a, const SetValuedTableau& b) { return rows_less(a, b, mask_less); }

bool canonical_less(const IntTableau& a, const IntTableau& b) { return rows_less(a, b, std::less<int>()); }

bool is_valid_svt(const SetValuedTableau& t)
{
    const auto& s = t.shape;
    if (static_cast<int>(t.rows.size()) != s.rows())
        return false;
    for (int i = 1; i <= s.rows(); ++i) {
        if (static_cast<int>(t.rows[i - 1].size()) != s.row_length(i))
            return false;
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
            Mask m = t.at(i, j);
            if (m == 0 || (m & 1u))
                return false;
            if (s.contains(i, j + 1) && mask_max(m) > mask_min(t.at(i, j + 1)))
                return false;
            if (s.contains(i + 1, j) && mask_max(m) >= mask_min(t.at(i + 1, j)))
                return false;
        }
    }
    return true;
}

bool is_valid_ssyt(const IntTableau& t)
{
    const auto& s = t.shape;
    if (static_cast<int>(t.rows.size()) != s.rows())
        return false;
    for (int i = 1; i <= s.rows(); ++i) {
        if (static_cast<int>(t.rows[i - 1].size()) != s.row_length(i))
            return false;
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
            int v = t.at(i, j);
            if (v < 1)
                return false;
            if (s.contains(i, j + 1) && v > t.at(i, j + 1))
                return false;
            if (s.contains(i + 1, j) && v >= t.at(i + 1, j))
                return false;
        }
    }
    return true;
}

bool is_valid_rpp(const IntTableau& t)
{
    const auto& s = t.shape;
    if (static_cast<int>(t.rows.size()) != s.rows())
        return false;
    for (int i = 1; i <= s.rows(); ++i) {
        if (static_cast<int>(t.rows[i - 1].size()) != s.row_length(i))
            return false;
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
            int v = t.at(i, j);
            if (v < 1)
                return false;
            if (s.contains(i, j + 1) && v > t.at(i, j + 1))
                return false;
            if (s.contains(i + 1, j) && v > t.at(i + 1, j))
                return false;
        }
    }
    return true;
}

bool respects_flag(const SetValuedTableau& t, const Flag& flag)
{
    for (int i = 1; i <= t.shape.rows(); ++i)
        for (Mask m : t.rows[i - 1]) {
            if (i > static_cast<int>(flag.size()))
                return false;
            if (mask_max(m) > flag[i - 1])
                return false;
        }
    return true;
}

IntTableau straight_tableau(const std::vector<std::vector<int>>& rows)
{
    std::vector<int> lens;
    for (const auto& r : rows)
        lens.push_back(static_cast<int>(r.size()));
    IntTableau t{SkewShape(Partition(lens))};
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        t.rows[i] = rows[i];
    return t;
}

SetValuedTableau to_svt(const IntTableau& t)
{
    SetValuedTableau s(t.shape);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t k = 0; k < t.rows[i].size(); ++k)
            s.rows[i][k] = letter_bit(t.rows[i][k]);
    return s;
}

IntTableau to_ssyt(const SetValuedTableau& t)
{
    IntTableau s(t.shape);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
            if (mask_count(t.rows[i][k]) != 1)
                throw std::invalid_argument("to_ssyt: cell is not a singleton");
            s.rows[i][k] = mask_min(t.rows[i][k]);
        }
    return s;
}

Composition weight(const SetValuedTableau& t, int n)
{
    Composition w(n, 0);
    for (const auto& row : t.rows)
        for (Mask m : row)
            for (int a : letters_of(m)) {
                if (a > n)
                    throw std::invalid_argument("weight: letter exceeds n");
                ++w[a - 1];
            }
    return w;
}

Composition weight(const IntTableau& t, int n)
{
    Composition w(n, 0);
    for (const auto& row : t.rows)
        for (int a : row) {
            if (a > n)
                throw std::invalid_argument("weight: letter exceeds n");
            ++w[a - 1];
        }
    return w;
}

Composition excess(const SetValuedTableau& t)
{
    Composition e(t.shape.rows(), 0);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (Mask m : t.rows[i])
            e[i] += mask_count(m) - 1;
    return e;
}

int total_excess(const SetValuedTableau& t) { return total(excess(t)); }

int max_letter(const SetValuedTableau& t)
{
    int m = 0;
    for (const auto& row : t.rows)
        for (Mask c : row)
            m = std::max(m, mask_max(c));
    return m;
}

int max_letter(const IntTableau& t)
{
    int m = 0;
    for (const auto& row : t.rows)
        for (int c : row)
            m = std::max(m, c);
    return m;
}

Composition ceq(const IntTableau& r)
{
    const auto& s = r.shape;
    Composition c(s.rows(), 0);
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
            if (s.contains(i + 1, j) && r.at(i, j) == r.at(i + 1, j))
                ++c[i - 1];
    return c;
}

Composition rpp_weight(const IntTableau& r, int n)
{
    Composition w(n, 0);
    const auto& s = r.shape;
    for (int j = s.min_col(); j >= 1 && j <= s.max_col(); ++j) {
        Mask seen = 0;
        for (int i = 1; i <= s.rows(); ++i)
            if (s.contains(i, j))
                seen |= letter_bit(r.at(i, j));
        for (int a : letters_of(seen)) {
            if (a > n)
                throw std::invalid_argument("rpp_weight: letter exceeds n");
            ++w[a - 1];
        }
    }
    return w;
}

bool is_reverse_row_strict(const BoxLabels& p)
{
    for (const auto& [b, v] : p) {
        auto right = p.find({b.row, b.col + 1});
        if (right != p.end() && !(right->second < v))
            return false;
        auto below = p.find({b.row + 1, b.col});
        if (below != p.end() && !(below->second <= v))
            return false;
    }
    return true;
}

bool is_row_bounded(const BoxLabels& p, bool strict)
{
    for (const auto& [b, v] : p) {
        if (v < 1)
            return false;
        if (strict ? !(v < b.row) : !(v <= b.row))
            return false;
    }
    return true;
}

Composition label_weight(const BoxLabels& p, int n)
{
    Composition w(n, 0);
    for (const auto& [b, v] : p) {
        if (v > n)
            throw std::invalid_argument("label_weight: label exceeds n");
        ++w[v - 1];
    }
    return w;
}

std::string to_string(const SetValuedTableau& t)
{
    std::ostringstream os;
    os << to_string(t.shape) << " [";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << (i ? " / " : "");
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
            os << (k ? " " : "") << "{";
            auto ls = letters_of(t.rows[i][k]);
            for (std::size_t q = 0; q < ls.size(); ++q)
                os << (q ? "," : "") << ls[q];
            os << "}";
        }
    }
    os << "]";
    return os.str();
}

std::string to_string(const IntTableau& t)
{
    std::ostringstream os;
    os << to_string(t.shape) << " [";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << (i ? " / " : "");
        for (std::size_t k = 0; k < t.rows[i].size(); ++k)
            os << (k ? " " : "") << t.rows[i][k];
    }
    os << "]";
    return os.str();
}

}  // namespace svt
