#include "smallcut/gf2.hpp"

#include <cassert>
#include <stdexcept>

namespace smallcut {

namespace {

struct Pivot {
  BitVec vec;
  BitVec combo;  // which candidates XOR to vec
  int lead;
};

// Reduces the candidate columns in order; returns the combination of the
// first one that reduces to zero (a dependency), or an empty vector if the
// candidates are independent.
std::vector<int> first_dependency(const std::vector<BitVec>& columns,
                                  const std::vector<int>& candidates) {
  std::vector<Pivot> pivots;
  int k = static_cast<int>(candidates.size());
  for (int i = 0; i < k; ++i) {
    BitVec vec = columns[candidates[i]];
    BitVec combo(k);
    combo.set(i, true);
    for (const Pivot& p : pivots)
      if (vec.test(p.lead)) {
        vec ^= p.vec;
        combo ^= p.combo;
      }
    if (vec.zero()) {
      std::vector<int> dep;
      combo.for_each_set([&](int j) { dep.push_back(candidates[j]); });
      return dep;
    }
    pivots.push_back({vec, combo, vec.first_set()});
  }
  return {};
}

}  // namespace

int gf2_rank(const std::vector<BitVec>& columns) {
  std::vector<Pivot> pivots;
  for (const BitVec& c : columns) {
    BitVec vec = c;
    for (const Pivot& p : pivots)
      if (vec.test(p.lead)) vec ^= p.vec;
    if (!vec.zero()) pivots.push_back({vec, BitVec(), vec.first_set()});
  }
  return static_cast<int>(pivots.size());
}

bool gf2_zero_sum(const std::vector<BitVec>& columns, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  BitVec acc(columns[subset[0]].width());
  for (int i : subset) acc ^= columns[i];
  return acc.zero();
}

std::vector<int> minimal_zero_sum_subset(const std::vector<BitVec>& columns,
                                         std::vector<int> candidates) {
  if (candidates.empty() || !gf2_zero_sum(columns, candidates))
    throw std::invalid_argument("candidates must be nonempty and XOR to zero");
  for (;;) {
    std::vector<int> dep = first_dependency(columns, candidates);
    assert(!dep.empty());  // candidates sum to zero, so a dependency exists
    if (dep.size() == candidates.size()) return candidates;
    // dep is a proper zero-sum subset; its complement also sums to zero, so
    // shrinking to dep keeps the invariant while strictly reducing the size.
    candidates = std::move(dep);
  }
}

std::vector<std::vector<int>> minimal_zero_sum_partition(
    const std::vector<BitVec>& columns) {
  std::vector<int> remaining(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) remaining[i] = static_cast<int>(i);
  assert(gf2_zero_sum(columns, remaining));

  std::vector<std::vector<int>> parts;
  while (!remaining.empty()) {
    std::vector<int> part = minimal_zero_sum_subset(columns, remaining);
    std::vector<char> taken(columns.size(), 0);
    for (int i : part) taken[i] = 1;
    std::vector<int> rest;
    for (int i : remaining)
      if (!taken[i]) rest.push_back(i);
    parts.push_back(std::move(part));
    remaining = std::move(rest);
  }
  return parts;
}

bool gf2_spans_orthogonal(const std::vector<BitVec>& columns,
                          const std::vector<int>& a, const std::vector<int>& b) {
  for (int i : a)
    for (int j : b)
      if (columns[i].dot(columns[j])) return false;
  return true;
}

CheckedPartition checked_partition(const std::vector<BitVec>& columns) {
  CheckedPartition out;
  out.part_of.assign(columns.size(), -1);
  auto parts = minimal_zero_sum_partition(columns);
  out.parts = static_cast<int>(parts.size());
  int rank_sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int k : parts[i]) out.part_of[k] = static_cast<int>(i);
    std::vector<BitVec> part_cols;
    for (int k : parts[i]) part_cols.push_back(columns[k]);
    rank_sum += gf2_rank(part_cols);
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!gf2_spans_orthogonal(columns, parts[i], parts[j])) out.checks_ok = false;
  }
  if (rank_sum != gf2_rank(columns)) out.checks_ok = false;
  return out;
}

}  // namespace smallcut
