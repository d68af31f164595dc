#pragma once

#include <compare>
#include <string>
#include <vector>

namespace svt {

using Composition = std::vector<int>;
using Flag = std::vector<int>;

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// kept in storage but ignored by equality and ordering.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int operator[](int i) const { return i < static_cast<int>(parts_.size()) ? parts_[i] : 0; }
    int length() const;
    int size() const;
    const std::vector<int>& parts() const { return parts_; }
    std::vector<int> trimmed() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.trimmed() == b.trimmed(); }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.trimmed() <=> b.trimmed(); }

private:
    std::vector<int> parts_;
};

bool is_weakly_decreasing(const std::vector<int>& v);
bool is_flag(const Flag& flag);
int total(const Composition& a);
// alpha dagger: the partition obtained by sorting alpha decreasingly
Partition sort_decreasing(const Composition& a);
Composition pad(Composition a, int n);

struct Box {
    int row;
    int col;
    friend auto operator<=>(const Box&, const Box&) = default;
};

// lambda/mu with 1-based boxes (i,j), mu_i < j <= lambda_i.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int row_begin(int i) const { return inner_[i - 1] + 1; }
    int row_end(int i) const { return outer_[i - 1]; }
    int row_length(int i) const { return outer_[i - 1] - inner_[i - 1]; }
    bool contains(int i, int j) const;
    bool contains(Box b) const { return contains(b.row, b.col); }
    int size() const { return outer_.size() - inner_.size(); }
    bool empty() const { return size() == 0; }
    int min_col() const;
    int max_col() const;
    std::vector<Box> boxes() const;
    bool is_straight() const { return inner_.length() == 0; }
    bool is_connected() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b)
    {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }
    friend auto operator<=>(const SkewShape& a, const SkewShape& b)
    {
        if (auto c = a.outer_ <=> b.outer_; c != 0)
            return c;
        return a.inner_ <=> b.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
};

// A connected component re-expressed as a skew shape whose top row is row 1
// and whose leftmost column is column 1. Original box (i,j) corresponds to
// (i - row_offset, j - col_offset).
struct Component {
    SkewShape shape;
    int row_offset = 0;
    int col_offset = 0;
};

// Ordered top component first.
std::vector<Component> connected_components(const SkewShape& shape);

// Shape with empty rows removed and shifted so the leftmost column is 1.
SkewShape normalize(const SkewShape& shape);

// upper sits strictly above and strictly right of lower.
SkewShape star_compose(const SkewShape& upper, const SkewShape& lower);

// Offsets placing each part (listed top first) inside the composite
// parts[0] * parts[1] * ... ; parts must be normalized.
struct StarLayout {
    SkewShape composite;
    std::vector<int> row_offsets;
    std::vector<int> col_offsets;
};
StarLayout star_layout(const std::vector<SkewShape>& parts);

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);
std::string to_string(const SkewShape& s);

}  // namespace svt
