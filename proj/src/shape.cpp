#include "svt/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0)
            throw std::invalid_argument("partition has a negative part");
    if (!is_weakly_decreasing(parts_))
        throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string(parts_));
}

int Partition::length() const
{
    int n = 0;
    for (int p : parts_)
        if (p > 0)
            ++n;
    return n;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::trimmed() const
{
    std::vector<int> v(parts_.begin(), parts_.begin() + length());
    return v;
}

bool is_weakly_decreasing(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1])
            return false;
    return true;
}

bool is_flag(const Flag& flag)
{
    for (std::size_t i = 0; i < flag.size(); ++i) {
        if (flag[i] < 1)
            return false;
        if (i > 0 && flag[i] < flag[i - 1])
            return false;
    }
    return true;
}

int total(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

Partition sort_decreasing(const Composition& a)
{
    Composition s = a;
    std::sort(s.begin(), s.end(), std::greater<>());
    return Partition(s);
}

Composition pad(Composition a, int n)
{
    if (static_cast<int>(a.size()) < n)
        a.resize(n, 0);
    return a;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    int len = std::max(outer_.length(), inner_.length());
    for (int i = 0; i < len; ++i)
        if (inner_[i] > outer_[i])
            throw std::invalid_argument("inner partition not contained in outer: " + to_string(outer_) + "/" +
                                        to_string(inner_));
}

bool SkewShape::contains(int i, int j) const
{
    if (i < 1 || i > rows())
        return false;
    return inner_[i - 1] < j && j <= outer_[i - 1];
}

int SkewShape::min_col() const
{
    int m = 0;
    int n = rows();
    for (int i = 1; i <= n; ++i)
        if (row_length(i) > 0 && (m == 0 || row_begin(i) < m))
            m = row_begin(i);
    return m;
}

int SkewShape::max_col() const { return outer_[0]; }

std::vector<Box> SkewShape::boxes() const
{
    std::vector<Box> out;
    for (int i = 1; i <= rows(); ++i)
        for (int j = row_begin(i); j <= row_end(i); ++j)
            out.push_back({i, j});
    return out;
}

bool SkewShape::is_connected() const { return connected_components(*this).size() <= 1; }

std::vector<Component> connected_components(const SkewShape& shape)
{
    std::vector<Component> out;
    int n = shape.rows();
    int i = 1;
    while (i <= n) {
        if (shape.row_length(i) == 0) {
            ++i;
            continue;
        }
        int first = i;
        int last = i;
        // consecutive nonempty rows are joined iff their column ranges overlap
        while (last + 1 <= n && shape.row_length(last + 1) > 0 && shape.row_end(last + 1) >= shape.row_begin(last))
            ++last;
        int col_off = shape.inner()[last - 1];
        std::vector<int> o, in;
        for (int r = first; r <= last; ++r) {
            o.push_back(shape.outer()[r - 1] - col_off);
            in.push_back(shape.inner()[r - 1] - col_off);
        }
        out.push_back({SkewShape(Partition(o), Partition(in)), first - 1, col_off});
        i = last + 1;
    }
    return out;
}

SkewShape normalize(const SkewShape& shape)
{
    std::vector<int> o, in;
    for (int i = 1; i <= shape.rows(); ++i)
        if (shape.row_length(i) > 0) {
            o.push_back(shape.outer()[i - 1]);
            in.push_back(shape.inner()[i - 1]);
        }
    if (o.empty())
        return SkewShape();
    int shift = in.back();
    for (auto& x : o)
        x -= shift;
    for (auto& x : in)
        x -= shift;
    return SkewShape(Partition(o), Partition(in));
}

StarLayout star_layout(const std::vector<SkewShape>& parts)
{
    StarLayout lay;
    std::size_t k = parts.size();
    lay.row_offsets.assign(k, 0);
    lay.col_offsets.assign(k, 0);
    int ro = 0;
    for (std::size_t p = 0; p < k; ++p) {
        lay.row_offsets[p] = ro;
        ro += parts[p].rows();
    }
    int co = 0;
    for (std::size_t p = k; p-- > 0;) {
        lay.col_offsets[p] = co;
        co += parts[p].max_col();
    }
    std::vector<int> o, in;
    for (std::size_t p = 0; p < k; ++p)
        for (int i = 1; i <= parts[p].rows(); ++i) {
            o.push_back(parts[p].outer()[i - 1] + lay.col_offsets[p]);
            in.push_back(parts[p].inner()[i - 1] + lay.col_offsets[p]);
        }
    lay.composite = SkewShape(Partition(o), Partition(in));
    return lay;
}

SkewShape star_compose(const SkewShape& upper, const SkewShape& lower)
{
    std::vector<SkewShape> parts;
    if (!upper.empty())
        parts.push_back(normalize(upper));
    if (!lower.empty())
        parts.push_back(normalize(lower));
    return star_layout(parts).composite;
}

std::string to_string(const Composition& c)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

std::string to_string(const Partition& p) { return to_string(p.parts()); }

std::string to_string(const SkewShape& s) { return to_string(s.outer()) + "/" + to_string(s.inner()); }

}  // namespace svt
