#include "svt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace svt {

namespace {

void check_flag(const SkewShape& shape, const Flag& flag)
{
    if (static_cast<int>(flag.size()) < shape.rows())
        throw std::invalid_argument("flag shorter than the number of rows of " + to_string(shape));
    for (int f : flag)
        if (f > kMaxLetter)
            throw std::invalid_argument("flag bound exceeds the maximal letter");
}

// nonempty subsets of [lo, hi] in lexicographic order of sorted contents
void lex_subsets(int lo, int hi, Mask prefix, std::vector<Mask>& out)
{
    for (int a = lo; a <= hi; ++a) {
        Mask m = prefix | letter_bit(a);
        out.push_back(m);
        lex_subsets(a + 1, hi, m, out);
    }
}

class SvtWalker {
public:
    SvtWalker(const SkewShape& shape, const Flag& flag, const SvtFilter& filter,
              const std::function<void(const SetValuedTableau&)>& visit)
        : flag_(flag), filter_(filter), visit_(visit), t_(shape), boxes_(shape.boxes())
    {
        row_excess_.assign(shape.rows(), 0);
    }

    void run() { step(0, 0); }

private:
    const std::vector<Mask>& candidates(int lo, int hi)
    {
        auto key = std::make_pair(lo, hi);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        std::vector<Mask> out;
        lex_subsets(lo, hi, 0, out);
        return cache_.emplace(key, std::move(out)).first->second;
    }

    void step(std::size_t k, int total_ex)
    {
        if (k == boxes_.size()) {
            visit_(t_);
            return;
        }
        const auto& s = t_.shape;
        auto [i, j] = boxes_[k];
        int lo = 1;
        if (s.contains(i, j - 1))
            lo = std::max(lo, mask_max(t_.at(i, j - 1)));
        if (s.contains(i - 1, j))
            lo = std::max(lo, mask_max(t_.at(i - 1, j)) + 1);
        int hi = flag_[i - 1];
        if (lo > hi)
            return;
        bool row_last = j == s.row_end(i);
        for (Mask m : candidates(lo, hi)) {
            int extra = mask_count(m) - 1;
            int re = row_excess_[i - 1] + extra;
            if (filter_.max_total_excess >= 0 && total_ex + extra > filter_.max_total_excess)
                continue;
            if (filter_.excess) {
                int want = i - 1 < static_cast<int>(filter_.excess->size()) ? (*filter_.excess)[i - 1] : 0;
                if (re > want || (row_last && re != want))
                    continue;
            }
            t_.at(i, j) = m;
            row_excess_[i - 1] = re;
            step(k + 1, total_ex + extra);
            row_excess_[i - 1] = re - extra;
        }
    }

    const Flag& flag_;
    const SvtFilter& filter_;
    const std::function<void(const SetValuedTableau&)>& visit_;
    SetValuedTableau t_;
    std::vector<Box> boxes_;
    std::vector<int> row_excess_;
    std::map<std::pair<int, int>, std::vector<Mask>> cache_;
};

bool excess_filter_possible(const SkewShape& shape, const SvtFilter& filter)
{
    if (!filter.excess)
        return true;
    const auto& e = *filter.excess;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0)
            return false;
        if (e[i] > 0 && (static_cast<int>(i) >= shape.rows() || shape.row_length(static_cast<int>(i) + 1) == 0))
            return false;
    }
    return true;
}

template <class Visit>
void walk_int(IntTableau& t, const std::vector<Box>& boxes, std::size_t k, const Flag& flag, bool strict_columns,
              Visit& visit)
{
    if (k == boxes.size()) {
        visit(t);
        return;
    }
    const auto& s = t.shape;
    auto [i, j] = boxes[k];
    int lo = 1;
    if (s.contains(i, j - 1))
        lo = std::max(lo, t.at(i, j - 1));
    if (s.contains(i - 1, j))
        lo = std::max(lo, t.at(i - 1, j) + (strict_columns ? 1 : 0));
    for (int v = lo; v <= flag[i - 1]; ++v) {
        t.at(i, j) = v;
        walk_int(t, boxes, k + 1, flag, strict_columns, visit);
    }
}

std::vector<IntTableau> enumerate_int(const SkewShape& shape, const Flag& flag, bool strict_columns)
{
    check_flag(shape, flag);
    std::vector<IntTableau> out;
    IntTableau t(shape);
    auto boxes = shape.boxes();
    auto visit = [&](const IntTableau& x) { out.push_back(x); };
    walk_int(t, boxes, 0, flag, strict_columns, visit);
    return out;
}

}  // namespace

void for_each_svt(const SkewShape& shape, const Flag& flag, const SvtFilter& filter,
                  const std::function<void(const SetValuedTableau&)>& visit)
{
    check_flag(shape, flag);
    if (!excess_filter_possible(shape, filter))
        return;
    SvtWalker w(shape, flag, filter, visit);
    w.run();
}

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape, const Flag& flag, const SvtFilter& filter)
{
    std::vector<SetValuedTableau> out;
    for_each_svt(shape, flag, filter, [&](const SetValuedTableau& t) { out.push_back(t); });
    return out;
}

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape, const Flag& flag,
                                            const std::optional<Composition>& excess)
{
    SvtFilter f;
    f.excess = excess;
    return enumerate_svt(shape, flag, f);
}

std::vector<IntTableau> enumerate_ssyt(const SkewShape& shape, const Flag& flag)
{
    return enumerate_int(shape, flag, true);
}

std::vector<IntTableau> enumerate_rpp(const SkewShape& shape, const Flag& flag)
{
    return enumerate_int(shape, flag, false);
}

Flag constant_flag(int rows, int n) { return Flag(std::max(rows, 0), n); }

std::vector<Partition> partitions_of(int k)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::vector<Partition> partitions_up_to(int k, int max_rows)
{
    std::vector<Partition> out;
    for (int s = 0; s <= k; ++s)
        for (auto& p : partitions_of(s))
            if (max_rows < 0 || p.length() <= max_rows)
                out.push_back(p);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    int len = lambda.length();
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int i, int bound) {
        if (i == len) {
            out.emplace_back(cur);
            return;
        }
        for (int m = 0; m <= std::min(bound, lambda[i]); ++m) {
            cur[i] = m;
            rec(i + 1, m);
        }
    };
    rec(0, lambda[0]);
    return out;
}

std::vector<Flag> all_flags(int length, int n)
{
    std::vector<Flag> out;
    Flag cur(length, 1);
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

std::vector<SkewShape> normalized_skew_shapes(int k)
{
    std::vector<SkewShape> out;
    for (int rows = 1; rows <= k; ++rows)
        for (int width = 1; width <= k; ++width) {
            // outer and inner of length `rows`, outer_1 = width, inner_rows = 0
            std::vector<int> o(rows), in(rows);
            std::function<void(int)> rec_outer;
            std::function<void(int, int)> rec_inner = [&](int i, int used) {
                if (used + (rows - i) > k)
                    return;
                if (i == rows) {
                    if (in[rows - 1] != 0)
                        return;
                    SkewShape s{Partition(o), Partition(in)};
                    if (s.size() < 1 || s.size() > k)
                        return;
                    for (int c = 1; c <= width; ++c) {
                        bool hit = false;
                        for (int r = 1; r <= rows && !hit; ++r)
                            hit = s.contains(r, c);
                        if (!hit)
                            return;
                    }
                    out.push_back(s);
                    return;
                }
                int bound = i == 0 ? o[0] - 1 : std::min(in[i - 1], o[i] - 1);
                for (int m = bound; m >= 0; --m) {
                    in[i] = m;
                    if (used + o[i] - m + (rows - i - 1) > k)
                        break;
                    rec_inner(i + 1, used + o[i] - m);
                }
            };
            rec_outer = [&](int i) {
                if (i == rows) {
                    rec_inner(0, 0);
                    return;
                }
                int bound = i == 0 ? width : o[i - 1];
                int lo = i == 0 ? width : 1;
                for (int v = lo; v <= bound; ++v) {
                    o[i] = v;
                    rec_outer(i + 1);
                }
            };
            rec_outer(0);
        }
    return out;
}

}  // namespace svt
