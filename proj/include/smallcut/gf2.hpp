#pragma once

#include <vector>

#include "smallcut/bits.hpp"

namespace smallcut {

// Rank over GF(2) of a set of column vectors (all the same width).
int gf2_rank(const std::vector<BitVec>& columns);

// True iff the columns indexed by `subset` XOR to zero.
bool gf2_zero_sum(const std::vector<BitVec>& columns, const std::vector<int>& subset);

// A nonempty subset of columns that XORs to zero and has no nonempty proper
// zero-sum subset. Precondition: the whole set XORs to zero (so one exists).
// Returns indices into `columns`.
std::vector<int> minimal_zero_sum_subset(const std::vector<BitVec>& columns,
                                         std::vector<int> candidates);

// Partition of all column indices into minimal zero-sum sets, extracted
// greedily. Precondition: all columns XOR to zero. Parts are each minimal;
// the partition itself need not be unique.
std::vector<std::vector<int>> minimal_zero_sum_partition(
    const std::vector<BitVec>& columns);

// True iff span(columns[a]) and span(columns[b]) are mutually orthogonal,
// i.e. every generator pair has zero GF(2) inner product.
bool gf2_spans_orthogonal(const std::vector<BitVec>& columns,
                          const std::vector<int>& a, const std::vector<int>& b);

// Minimal zero-sum partition plus the certificates that make it provably
// the unique one: pairwise span orthogonality and rank additivity (the part
// ranks summing to the rank of the whole set). Precondition: the columns
// XOR to zero.
struct CheckedPartition {
  std::vector<int> part_of;  // per column index
  int parts = 0;
  bool checks_ok = true;
};
CheckedPartition checked_partition(const std::vector<BitVec>& columns);

}  // namespace smallcut
