#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "svt/tableau.hpp"

namespace svt {

struct SvtFilter {
    std::optional<Composition> excess;  // exact excess vector
    int max_total_excess = -1;          // -1: unbounded
};

// Flagged SVT in canonical order; row i entries are <= flag[i-1].
std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape, const Flag& flag, const SvtFilter& filter = {});
std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape, const Flag& flag,
                                            const std::optional<Composition>& excess);
void for_each_svt(const SkewShape& shape, const Flag& flag, const SvtFilter& filter,
                  const std::function<void(const SetValuedTableau&)>& visit);
std::vector<IntTableau> enumerate_ssyt(const SkewShape& shape, const Flag& flag);
std::vector<IntTableau> enumerate_rpp(const SkewShape& shape, const Flag& flag);

Flag constant_flag(int rows, int n);

std::vector<Partition> partitions_of(int k);
// partitions of size <= k with at most max_rows parts (max_rows < 0: no bound)
std::vector<Partition> partitions_up_to(int k, int max_rows = -1);
std::vector<Partition> subpartitions(const Partition& lambda);
// weakly increasing sequences of the given length with entries in [1, n]
std::vector<Flag> all_flags(int length, int n);
// skew shapes with no empty rows and no empty columns, 1 <= boxes <= k
std::vector<SkewShape> normalized_skew_shapes(int k);

}  // namespace svt
