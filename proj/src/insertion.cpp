#include "svt/insertion.hpp"

#include <algorithm>
#include <sstream>

namespace svt {

namespace {

Rows rows_of(const IntTableau& t)
{
    if (!t.shape.is_straight())
        throw std::invalid_argument("expected a straight-shape tableau");
    Rows r(t.rows.begin(), t.rows.begin() + t.shape.rows());
    return r;
}

std::string box_string(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

}  // namespace

Box row_insert(Rows& p, int x)
{
    for (std::size_t r = 0; r < p.size(); ++r) {
        auto& row = p[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        std::swap(*it, x);
    }
    p.push_back({x});
    return {static_cast<int>(p.size()), 1};
}

IntTableau rect(const Word& w)
{
    Rows p;
    for (int x : w)
        row_insert(p, x);
    return straight_tableau(p);
}

bool knuth_equivalent(const Word& u, const Word& v) { return rect(u) == rect(v); }

bool is_yamanouchi(const Word& w)
{
    int n = 1;
    for (int x : w)
        n = std::max(n, x);
    for (int i = 1; i < n; ++i)
        if (!signature(w, i).minus.empty())
            return false;
    return true;
}

bool is_burge_ordered(const Biword& bw)
{
    if (bw.top.size() != bw.bottom.size())
        return false;
    for (std::size_t k = 0; k < bw.top.size(); ++k) {
        if (bw.top[k] < 1 || bw.bottom[k] < 1)
            return false;
        if (k == 0)
            continue;
        if (bw.top[k] > bw.top[k - 1])
            return false;
        if (bw.top[k] == bw.top[k - 1] && bw.bottom[k] < bw.bottom[k - 1])
            return false;
    }
    return true;
}

Biword biword_of_matrix(const Matrix& a)
{
    Biword bw;
    for (std::size_t i = a.size(); i-- > 0;)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] < 0)
                throw std::invalid_argument("biword_of_matrix: negative entry");
            for (int c = 0; c < a[i][j]; ++c) {
                bw.top.push_back(static_cast<int>(i) + 1);
                bw.bottom.push_back(static_cast<int>(j) + 1);
            }
        }
    return bw;
}

Matrix matrix_of_biword(const Biword& bw, int rows, int cols)
{
    Matrix a(rows, std::vector<int>(cols, 0));
    for (std::size_t k = 0; k < bw.top.size(); ++k) {
        int i = bw.top[k], j = bw.bottom[k];
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::invalid_argument("matrix_of_biword: letter outside the matrix");
        ++a[i - 1][j - 1];
    }
    return a;
}

Box column_insert(Rows& p, int x)
{
    for (std::size_t c = 0;; ++c) {
        std::size_t height = 0;
        while (height < p.size() && p[height].size() > c)
            ++height;
        std::size_t r = 0;
        while (r < height && p[r][c] < x)
            ++r;
        if (r == height) {
            if (height == p.size())
                p.push_back({});
            p[height].push_back(x);
            return {static_cast<int>(height) + 1, static_cast<int>(c) + 1};
        }
        std::swap(p[r][c], x);
    }
}

std::pair<IntTableau, IntTableau> burge(const Biword& bw)
{
    if (!is_burge_ordered(bw))
        throw std::invalid_argument("burge: biword is not in Burge order");
    Rows p, q;
    for (std::size_t k = bw.top.size(); k-- > 0;) {
        Box b = column_insert(p, bw.bottom[k]);
        if (b.row > static_cast<int>(q.size()))
            q.push_back({});
        q[b.row - 1].push_back(bw.top[k]);
    }
    return {straight_tableau(p), straight_tableau(q)};
}

Biword burge_inverse(const IntTableau& pt, const IntTableau& qt)
{
    if (pt.shape != qt.shape)
        throw NonInvertible("burge_inverse: P and Q have different shapes");
    Rows p = rows_of(pt), q = rows_of(qt);
    Biword bw;
    while (!q.empty()) {
        // rightmost box holding the largest entry of Q
        int best = 0;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = 0; r < q.size(); ++r)
            for (std::size_t c = 0; c < q[r].size(); ++c)
                if (q[r][c] > best || (q[r][c] == best && c > bc)) {
                    best = q[r][c];
                    br = r;
                    bc = c;
                }
        if (bc + 1 != q[br].size() || (br + 1 < q.size() && q[br + 1].size() > bc))
            throw NonInvertible("burge_inverse: largest entry of Q is not at a corner");
        int y = p[br][bc];
        p[br].pop_back();
        q[br].pop_back();
        if (q[br].empty()) {
            p.pop_back();
            q.pop_back();
        }
        for (std::size_t c = bc; c-- > 0;) {
            std::size_t r = 0;
            std::size_t pick = p.size();
            for (; r < p.size() && p[r].size() > c; ++r)
                if (p[r][c] <= y)
                    pick = r;
            if (pick == p.size())
                throw NonInvertible("burge_inverse: reverse column bump failed");
            std::swap(p[pick][c], y);
        }
        bw.top.push_back(best);
        bw.bottom.push_back(y);
    }
    return bw;
}

Word row_reading_word(const IntTableau& t)
{
    Word w;
    for (std::size_t i = t.rows.size(); i-- > 0;)
        w.insert(w.end(), t.rows[i].begin(), t.rows[i].end());
    return w;
}

Word row_reading_word(const SetValuedTableau& t) { return row_reading_word(to_ssyt(t)); }

Word b_word(const Composition& alpha)
{
    Word w;
    for (std::size_t j = alpha.size(); j-- > 0;)
        w.insert(w.end(), alpha[j], static_cast<int>(j) + 1);
    return w;
}

Word b_word(const SkewShape& shape)
{
    Composition a(shape.rows());
    for (int i = 1; i <= shape.rows(); ++i)
        a[i - 1] = shape.row_length(i);
    return b_word(a);
}

Word svt_reading_word(const SetValuedTableau& s)
{
    Word w;
    for (std::size_t i = s.rows.size(); i-- > 0;) {
        const auto& row = s.rows[i];
        for (std::size_t k = row.size(); k-- > 0;) {
            auto ls = letters_of(row[k]);
            for (std::size_t a = ls.size(); a-- > 1;)
                w.push_back(ls[a]);
        }
        for (Mask m : row)
            w.push_back(mask_min(m));
    }
    return w;
}

Word rpp_reading_word(const IntTableau& r)
{
    const auto& s = r.shape;
    Word w;
    for (int i = s.rows(); i >= 1; --i)
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
            if (!s.contains(i - 1, j) || r.at(i - 1, j) != r.at(i, j))
                w.push_back(r.at(i, j));
    return w;
}

std::pair<Word, Word> rpp_row_reading(const IntTableau& r)
{
    const auto& s = r.shape;
    Word word, heights;
    for (int i = s.rows(); i >= 1; --i)
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
            if (!s.contains(i + 1, j) || r.at(i + 1, j) != r.at(i, j)) {
                word.push_back(r.at(i, j));
                heights.push_back(i);
            }
    return {word, heights};
}

std::vector<Box> a_boxes(const SkewShape& tau, const SkewShape& theta)
{
    std::vector<Box> out;
    for (const Box& b : tau.boxes())
        if (!theta.contains(b) && b.col <= theta.inner()[b.row - 1])
            out.push_back(b);
    return out;
}

std::vector<Box> b_boxes(const SkewShape& tau, const SkewShape& theta)
{
    std::vector<Box> out;
    for (const Box& b : tau.boxes())
        if (!theta.contains(b) && b.col > theta.outer()[b.row - 1])
            out.push_back(b);
    return out;
}

namespace {

// A skew filling stored as (first column, cells) per row while boxes move.
struct Work {
    std::vector<int> begin;
    std::vector<std::vector<Mask>> cells;

    explicit Work(const SetValuedTableau& t)
    {
        for (int i = 1; i <= t.shape.rows(); ++i) {
            begin.push_back(t.shape.row_begin(i));
            cells.push_back(t.rows[i - 1]);
        }
    }

    int rows() const { return static_cast<int>(cells.size()); }
    int end(int i) const { return begin[i - 1] + static_cast<int>(cells[i - 1].size()) - 1; }
    bool contains(int i, int j) const { return i >= 1 && i <= rows() && j >= begin[i - 1] && j <= end(i); }
    Mask& at(int i, int j) { return cells[i - 1][j - begin[i - 1]]; }

    SetValuedTableau tableau() const
    {
        std::vector<int> o, in;
        for (int i = 1; i <= rows(); ++i) {
            o.push_back(end(i));
            in.push_back(begin[i - 1] - 1);
        }
        SetValuedTableau t{SkewShape(Partition(o), Partition(in))};
        for (int i = 1; i <= t.shape.rows(); ++i)
            t.rows[i - 1] = cells[i - 1];
        return t;
    }

    // Row-inserts the single letter x starting at row j; returns the new box.
    Box insert_from(int j, int x)
    {
        for (;; ++j) {
            if (j > rows() || cells[j - 1].empty()) {
                if (j - 1 < 1)
                    throw std::logic_error("uncrowd: insertion above the first row");
                int col = begin[j - 2];
                if (j > rows()) {
                    begin.push_back(col);
                    cells.push_back({});
                } else {
                    begin[j - 1] = col;
                }
                cells[j - 1].push_back(letter_bit(x));
                return {j, col};
            }
            auto& row = cells[j - 1];
            bool bumped = false;
            for (auto& m : row) {
                if (mask_count(m) != 1)
                    throw std::logic_error("uncrowd: insertion into a multi-labelled row");
                if (mask_min(m) > x) {
                    int y = mask_min(m);
                    m = letter_bit(x);
                    x = y;
                    bumped = true;
                    break;
                }
            }
            if (!bumped) {
                int col = end(j) + 1;
                if (!contains(j - 1, col))
                    throw std::logic_error("uncrowd: new box " + box_string({j, col}) + " has no box above");
                row.push_back(letter_bit(x));
                return {j, col};
            }
        }
    }
};

void check_uncrowd_input(const SkewShape& theta, const SkewShape& tau, const BoxLabels& t_prime,
                         const SetValuedTableau& t)
{
    if (theta.empty())
        return;
    if (theta.row_length(1) == 0)
        throw std::invalid_argument("uncrowd: the first row of theta is empty");
    if (!theta.is_connected())
        throw std::invalid_argument("uncrowd: theta is not connected");
    for (int i = 1; i <= theta.rows(); ++i)
        if (theta.row_length(i) == 0)
            throw std::invalid_argument("uncrowd: theta has an empty row " + std::to_string(i));
    if (t.shape != tau)
        throw std::invalid_argument("uncrowd: tableau shape differs from tau");
    if (tau.outer() != theta.outer())
        throw std::invalid_argument("uncrowd: B(tau/theta) is not empty");
    for (int i = 1; i <= std::max(tau.rows(), theta.rows()); ++i)
        if (tau.inner()[i - 1] > theta.inner()[i - 1])
            throw std::invalid_argument("uncrowd: tau does not contain theta in row " + std::to_string(i));
    auto a = a_boxes(tau, theta);
    if (a.size() != t_prime.size())
        throw std::invalid_argument("uncrowd: T' does not fill A(tau/theta)");
    for (const Box& b : a)
        if (!t_prime.count(b))
            throw std::invalid_argument("uncrowd: T' is missing box " + box_string(b));
    if (!is_reverse_row_strict(t_prime))
        throw std::invalid_argument("uncrowd: T' is not reverse row-strict");
    for (const auto& [b, v] : t_prime)
        if (v < 1 || v > b.row)
            throw std::invalid_argument("uncrowd: T' is not row weakly-bounded at " + box_string(b));
    if (!is_valid_svt(t))
        throw std::invalid_argument("uncrowd: input is not a set-valued tableau");
    for (const auto& [b, v] : t_prime)
        if (mask_count(t.at(b)) != 1)
            throw std::invalid_argument("uncrowd: box " + box_string(b) + " of A(tau/theta) is multi-labelled");
}

}  // namespace

UncrowdRecord uncrowd(const SkewShape& theta, const SkewShape& tau, const BoxLabels& t_prime,
                      const SetValuedTableau& t)
{
    check_uncrowd_input(theta, tau, t_prime, t);
    UncrowdRecord rec;
    rec.theta = theta;
    rec.chain.push_back(t);
    Work w(t);
    int r = w.rows();
    for (int k = r; k >= 1; --k) {
        // first part: eject maxima of the rightmost multi-labelled box of row k
        while (true) {
            int col = 0;
            for (int j = w.end(k); j >= w.begin[k - 1]; --j)
                if (mask_count(w.at(k, j)) > 1) {
                    col = j;
                    break;
                }
            if (col == 0)
                break;
            Mask& m = w.at(k, col);
            int top = mask_max(m);
            m &= ~letter_bit(top);
            Box nb = w.insert_from(k + 1, top);
            rec.recording[nb] = k;
            rec.new_boxes.push_back(nb);
            rec.chain.push_back(w.tableau());
        }
        // second part: boxes of A(tau/theta) labelled k, by increasing row
        std::vector<Box> todo;
        for (const auto& [b, v] : t_prime)
            if (v == k)
                todo.push_back(b);
        std::sort(todo.begin(), todo.end());
        for (std::size_t q = 1; q < todo.size(); ++q)
            if (todo[q].row == todo[q - 1].row)
                throw std::logic_error("uncrowd: two boxes of T' in one row share a label");
        for (const Box& b : todo) {
            if (w.begin[b.row - 1] != b.col)
                throw std::logic_error("uncrowd: box " + box_string(b) + " of A(tau/theta) is not leftmost");
            int x = mask_min(w.at(b.row, b.col));
            auto& row = w.cells[b.row - 1];
            row.erase(row.begin());
            ++w.begin[b.row - 1];
            Box nb = w.insert_from(b.row + 1, x);
            rec.recording[nb] = k;
            rec.new_boxes.push_back(nb);
            rec.chain.push_back(w.tableau());
        }
    }
    rec.straightened = w.tableau();
    rec.sigma = rec.straightened.shape;
    return rec;
}

UncrowdRecord uncrowd(const SetValuedTableau& t) { return uncrowd(t.shape, t.shape, {}, t); }

SetValuedTableau uncrowd_inverse(const SkewShape& theta, const SkewShape& sigma, const BoxLabels& q,
                                 const SetValuedTableau& straightened)
{
    if (straightened.shape != sigma)
        throw std::invalid_argument("uncrowd_inverse: tableau shape differs from sigma");
    for (const auto& row : straightened.rows)
        for (Mask m : row)
            if (mask_count(m) != 1)
                throw std::invalid_argument("uncrowd_inverse: tableau is not semistandard");
    auto b = b_boxes(sigma, theta);
    if (b.size() != q.size())
        throw NonInvertible("uncrowd_inverse: Q'' does not fill B(sigma/theta)");
    for (const Box& x : b)
        if (!q.count(x))
            throw NonInvertible("uncrowd_inverse: Q'' is missing box " + box_string(x));
    Work w(straightened);
    int top_label = 0;
    for (const auto& [x, v] : q)
        top_label = std::max(top_label, v);
    for (int k = 1; k <= top_label; ++k) {
        std::vector<Box> todo;
        for (const auto& [x, v] : q)
            if (v == k)
                todo.push_back(x);
        std::sort(todo.begin(), todo.end(), [](Box a, Box c) { return a.row > c.row; });
        for (const Box& x : todo) {
            if (!w.contains(x.row, x.col) || w.end(x.row) != x.col || w.contains(x.row + 1, x.col))
                throw NonInvertible("uncrowd_inverse: box " + box_string(x) + " is not a corner");
            int y = mask_min(w.at(x.row, x.col));
            w.cells[x.row - 1].pop_back();
            if (w.cells[x.row - 1].empty()) {
                if (x.row != w.rows())
                    throw NonInvertible("uncrowd_inverse: emptied an inner row");
                w.cells.pop_back();
                w.begin.pop_back();
            }
            for (int j = x.row - 1; j > k; --j) {
                auto& row = w.cells[j - 1];
                int pick = -1;
                for (int c = 0; c < static_cast<int>(row.size()); ++c)
                    if (mask_min(row[c]) < y)
                        pick = c;
                if (pick < 0)
                    throw NonInvertible("uncrowd_inverse: reverse bump failed in row " + std::to_string(j));
                int z = mask_min(row[pick]);
                row[pick] = letter_bit(y);
                y = z;
            }
            if (k > w.rows())
                throw NonInvertible("uncrowd_inverse: row " + std::to_string(k) + " missing");
            auto& row = w.cells[k - 1];
            int pick = -1;
            for (int c = 0; c < static_cast<int>(row.size()); ++c)
                if (mask_max(row[c]) < y)
                    pick = c;
            if (pick < 0)
                throw NonInvertible("uncrowd_inverse: no box of row " + std::to_string(k) + " accepts the letter");
            row[pick] |= letter_bit(y);
        }
    }
    SetValuedTableau t = w.tableau();
    if (t.shape != theta)
        throw NonInvertible("uncrowd_inverse: recovered shape differs from theta");
    if (!is_valid_svt(t))
        throw NonInvertible("uncrowd_inverse: recovered filling is not a set-valued tableau");
    auto fwd = uncrowd(t);
    if (fwd.sigma != sigma || fwd.recording != q || !(fwd.straightened == straightened))
        throw NonInvertible("uncrowd_inverse: data is not in the image of uncrowding");
    return t;
}

std::vector<Flag> flag_evolution(const UncrowdRecord& rec, const Flag& flag)
{
    std::vector<Flag> trace{flag};
    if (!respects_flag(rec.chain.front(), flag))
        throw std::invalid_argument("flag_evolution: input does not respect the flag");
    Flag cur = flag;
    for (std::size_t j = 0; j < rec.new_boxes.size(); ++j) {
        int k = rec.new_boxes[j].row;
        if (k < 2)
            throw std::logic_error("flag_evolution: box added in the first row");
        int v = cur[k - 2];
        if (k - 1 < static_cast<int>(cur.size()))
            cur[k - 1] = v;
        else if (k - 1 == static_cast<int>(cur.size()))
            cur.push_back(v);
        else
            throw std::logic_error("flag_evolution: flag too short");
        if (!respects_flag(rec.chain[j + 1], cur))
            throw std::logic_error("flag_evolution: T^(" + std::to_string(j + 1) + ") does not respect Phi^(" +
                                   std::to_string(j + 1) + ")");
        trace.push_back(cur);
    }
    return trace;
}

PsiResult psi(const SetValuedTableau& s, const Flag& flag)
{
    PsiResult out;
    auto comps = connected_components(s.shape);
    std::vector<SkewShape> shapes;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        SetValuedTableau part(comp.shape);
        for (const Box& b : comp.shape.boxes())
            part.at(b) = s.at(b.row + comp.row_offset, b.col + comp.col_offset);
        out.parts.push_back(uncrowd(part));
        shapes.push_back(out.parts.back().sigma);
        if (!flag.empty()) {
            int first = comp.row_offset;
            int last = c + 1 < comps.size() ? comp.row_offset + comp.shape.rows() : static_cast<int>(flag.size());
            if (last > static_cast<int>(flag.size()))
                throw std::invalid_argument("psi: flag shorter than the shape");
            Flag local(flag.begin() + first, flag.begin() + last);
            Flag evolved = flag_evolution(out.parts.back(), local).back();
            out.flag.insert(out.flag.end(), evolved.begin(), evolved.end());
        }
    }
    auto lay = star_layout(shapes);
    out.tilde = SetValuedTableau(lay.composite);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& rec = out.parts[c];
        for (const Box& b : rec.sigma.boxes())
            out.tilde.at(b.row + lay.row_offsets[c], b.col + lay.col_offsets[c]) = rec.straightened.at(b);
        for (const auto& [b, v] : rec.recording)
            out.recording[{b.row + lay.row_offsets[c], b.col + lay.col_offsets[c]}] = v;
    }
    return out;
}

}  // namespace svt
