#pragma once

#include <vector>

#include "svt/crystal.hpp"
#include "svt/insertion.hpp"

namespace svt {

// key(alpha): shape alpha-dagger, column c holds {i : alpha_i >= c}.
IntTableau key_tableau(const Composition& alpha);
bool is_key(const IntTableau& t);
// the composition alpha with key(alpha) = t; throws if t is not a key
Composition key_weight(const IntTableau& t);

// K_-(R) by scanning to the left.
IntTableau left_key(const IntTableau& r);
// K_-(R) as key(w . w0 lambda) for the smallest opposite Demazure set
// {e-closure of the lowest weight tableau along w} containing R.
IntTableau left_key_oracle(const IntTableau& r, int n);
// beta(R) = wt(K_-(R)) padded to n
Composition beta(const IntTableau& r, int n);

// W(alpha, Phi): v^(n) ... v^(1), v^(i) weakly increasing of length alpha_i with
// letters <= Phi_i, descents between consecutive nonempty blocks, and the Burge
// recording tableau of (b(alpha); v) equal to key(alpha).
std::vector<Word> word_set_W(const Composition& alpha, const Flag& flag);

}  // namespace svt
