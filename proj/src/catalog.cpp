#include "smallcut/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace smallcut {

namespace {

// Graphs on n <= 7 vertices are edge bitmasks over the C(n,2) pairs.
struct MaskSpace {
  int n;
  int pairs;
  int index[7][7];  // unordered pair -> bit

  explicit MaskSpace(int n_) : n(n_) {
    pairs = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) index[i][j] = index[j][i] = pairs++;
  }

  void degrees(std::uint32_t mask, int* deg) const {
    std::fill(deg, deg + n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> index[i][j]) & 1) {
          ++deg[i];
          ++deg[j];
        }
  }

  bool connected(std::uint32_t mask) const {
    std::uint32_t nbr[7] = {};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> index[i][j]) & 1) {
          nbr[i] |= 1u << j;
          nbr[j] |= 1u << i;
        }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int i = 0; i < n; ++i)
        if ((frontier >> i) & 1) next |= nbr[i];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n) - 1;
  }

  std::uint32_t apply(std::uint32_t mask, const int* perm) const {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> index[i][j]) & 1) out |= 1u << index[perm[i]][perm[j]];
    return out;
  }
};

// Canonical form of a mask whose degree sequence is already non-increasing:
// the min image over all permutations that keep the degree sequence sorted,
// i.e. permutations within equal-degree blocks. The candidate set is closed
// under isomorphism, so equal canonical masks <=> isomorphic graphs.
std::uint32_t canonical_of_sorted(const MaskSpace& space, std::uint32_t mask,
                                  const int* deg) {
  int n = space.n;
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal degree
  for (int b = 0; b < n;) {
    int e = b;
    while (e < n && deg[e] == deg[b]) ++e;
    blocks.push_back({b, e});
    b = e;
  }
  std::vector<int> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  int perm[7];
  std::uint32_t best = ~std::uint32_t{0};
  for (;;) {
    for (int pos = 0; pos < n; ++pos) perm[arrangement[pos]] = pos;
    best = std::min(best, space.apply(mask, perm));
    // Odometer over per-block permutations.
    std::size_t bi = 0;
    while (bi < blocks.size() &&
           !std::next_permutation(arrangement.begin() + blocks[bi].first,
                                  arrangement.begin() + blocks[bi].second))
      ++bi;  // that block wrapped around to sorted order; carry on
    if (bi == blocks.size()) break;
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_graph_catalog(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("catalog covers 1 <= n <= 7");
  MaskSpace space(n);
  std::unordered_set<std::uint32_t> seen;
  std::vector<Graph> out;
  std::uint32_t limit = std::uint32_t{1} << space.pairs;
  int deg[7];
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    // Every isomorphism class has a labeling with non-increasing degrees;
    // skipping the rest loses nothing and saves almost all the work.
    space.degrees(mask, deg);
    bool sorted = true;
    for (int i = 0; i + 1 < n; ++i)
      if (deg[i] < deg[i + 1]) {
        sorted = false;
        break;
      }
    if (!sorted || !space.connected(mask)) continue;
    std::uint32_t canon = canonical_of_sorted(space, mask, deg);
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((canon >> space.index[i][j]) & 1) edges.push_back({i, j});
    out.push_back(Graph(n, std::move(edges)));
  }
  return out;
}

}  // namespace smallcut
