#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "svt/crystal.hpp"
#include "svt/tableau.hpp"

namespace svt {

// Rows of a straight-shape tableau, top row first.
using Rows = std::vector<std::vector<int>>;

// Bumps the leftmost entry strictly larger than x, row by row. Returns the new box.
Box row_insert(Rows& p, int x);
IntTableau rect(const Word& w);
bool knuth_equivalent(const Word& u, const Word& v);
// every word-crystal raising operator vanishes
bool is_yamanouchi(const Word& w);

struct Biword {
    Word top;
    Word bottom;
    friend bool operator==(const Biword&, const Biword&) = default;
};

using Matrix = std::vector<std::vector<int>>;

// top weakly decreasing; bottom weakly increasing within equal top letters
bool is_burge_ordered(const Biword& bw);
// a_{ij} columns [i; j]
Biword biword_of_matrix(const Matrix& a);
Matrix matrix_of_biword(const Biword& bw, int rows, int cols);

// Reads the biword right to left, column-inserting bottom letters into P and
// recording top letters in Q.
std::pair<IntTableau, IntTableau> burge(const Biword& bw);
Biword burge_inverse(const IntTableau& p, const IntTableau& q);
// Column insertion: bumps the smallest entry >= x, column by column.
Box column_insert(Rows& p, int x);

// r_T: bottom row first, each row left to right.
Word row_reading_word(const IntTableau& t);
// Same for a set-valued tableau whose cells are all singletons.
Word row_reading_word(const SetValuedTableau& t);
// b(alpha) = b^(n) ... b^(1), b^(j) = alpha_j copies of j
Word b_word(const Composition& alpha);
// b(lambda/mu) = b(lambda - mu)
Word b_word(const SkewShape& shape);
// w(S): per row, bottom row first: non-minimal entries right to left and
// largest first, then the minimal entries left to right.
Word svt_reading_word(const SetValuedTableau& s);
// w(R): topmost occurrence of each letter in each column, bottom row first.
Word rpp_reading_word(const IntTableau& r);
// (r_T, h(T)): entries not equal to the entry directly below, with their rows.
std::pair<Word, Word> rpp_row_reading(const IntTableau& r);

struct NonInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UncrowdRecord {
    SkewShape theta;
    SkewShape sigma;                        // output shape
    BoxLabels recording;                    // T'' on B(sigma/theta)
    SetValuedTableau straightened;          // all cells singletons
    std::vector<SetValuedTableau> chain;    // T^(0), ..., T^(l)
    std::vector<Box> new_boxes;             // box created by each step, in order
};

// Boxes of tau/theta left of theta (A) and right of theta (B), for tau containing theta.
std::vector<Box> a_boxes(const SkewShape& tau, const SkewShape& theta);
std::vector<Box> b_boxes(const SkewShape& tau, const SkewShape& theta);

// theta connected with a nonempty first row; tau contains theta with
// B(tau/theta) empty; t_prime fills A(tau/theta).
UncrowdRecord uncrowd(const SkewShape& theta, const SkewShape& tau, const BoxLabels& t_prime,
                      const SetValuedTableau& t);
UncrowdRecord uncrowd(const SetValuedTableau& t);

// The unique T with uncrowd(T) = (sigma, q, straightened); shape of T is theta.
SetValuedTableau uncrowd_inverse(const SkewShape& theta, const SkewShape& sigma, const BoxLabels& q,
                                 const SetValuedTableau& straightened);

// Phi^(0), ..., Phi^(l): a box added in row k sets Phi_k := Phi_{k-1}.
std::vector<Flag> flag_evolution(const UncrowdRecord& rec, const Flag& flag);

struct PsiResult {
    SetValuedTableau tilde;             // on the *-composite of the output shapes
    BoxLabels recording;                // composite coordinates
    Flag flag;                          // evolved flag (empty if no flag given)
    std::vector<UncrowdRecord> parts;   // per connected component, top first
};

// Componentwise uncrowding reassembled with *.
PsiResult psi(const SetValuedTableau& s, const Flag& flag = {});

}  // namespace svt
