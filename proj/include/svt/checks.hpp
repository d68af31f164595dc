#pragma once

#include <cstdint>
#include <string>

#include "svt/parallel.hpp"

namespace svt {

struct CheckReport {
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;  // first counterexample when !ok
};

// Axioms (1) and (2), string lengths against the signature, excess along strings and
// agreement with the tensor product of rows, on SVT with letters <= n of every
// normalized skew shape with at most max_boxes boxes.
CheckReport check_crystal_axioms(int max_boxes, int n, Execution ex = Execution::parallel);

// For every lambda with |lambda| <= max_outer and at most n rows (n = 1..max_n), every
// mu strictly inside lambda and every flag of length n with entries <= n: classes
// cover SVT(lambda/mu, flag) disjointly, every class passes verify_class, the key
// expansion reassembles to the generating function, and Psi commutes with e_i and
// f_i on SVT with letters <= n.
CheckReport check_theorem_main(int max_outer, int max_n, Execution ex = Execution::parallel);

// uncrowd followed by uncrowd_inverse is the identity on SVT with letters <= letters
// and total excess <= max_excess of every connected normalized shape with at most
// max_boxes boxes.
CheckReport check_uncrowd_round_trip(int max_boxes, int letters, int max_excess, Execution ex = Execution::parallel);

// matrix -> biword -> (P, Q) -> biword -> matrix on random matrices.
CheckReport check_burge_round_trip(int count, int rows, int cols, int max_entry, std::uint64_t seed);

// Key expansions of the flagged G and g against direct enumeration for random
// (shape, flag) with |outer| <= max_outer and n rows.
CheckReport check_random_expansions(int count, int max_outer, int n, std::uint64_t seed,
                                    Execution ex = Execution::parallel);

}  // namespace svt
