#pragma once

#include <utility>
#include <vector>

#include "smallcut/graph.hpp"

namespace smallcut {

// Brute-force / classical ground truth the Monte Carlo algorithms are tested
// against. Deliberately implemented with different machinery (DFS lowpoints,
// edge deletion, max-flow) and without regard for asymptotics.

// Bridges via DFS lowpoints.
EdgeSet oracle_bridges(const Graph& g);

// Articulation flags via DFS lowpoints (multi-root safe).
std::vector<char> oracle_articulation_flags(const Graph& g);

// All {e, f} (e < f) whose joint deletion disconnects g. Precondition:
// g connected and bridge-free, so these are exactly the induced cuts of
// size two.
std::vector<std::pair<int, int>> oracle_cut_pairs(const Graph& g);

// Cut classes of a connected graph: split off bridges, find pairs per
// bridge-free part, close under transitivity. Classes sorted by smallest
// member edge; each class sorted. Singletons are not classes.
std::vector<std::vector<int>> oracle_cut_classes(const Graph& g);

// Is f = delta(S) for some vertex set S? Decided by contracting the
// components of g - f and 2-coloring with every f edge bichromatic.
bool oracle_is_induced_cut(const Graph& g, const EdgeSet& f);
// Same question settled by scanning all 2^(n-1) vertex subsets; n <= 24.
bool oracle_is_induced_cut_subsets(const Graph& g, const EdgeSet& f);

// Biconnected components; label per edge, dense ids numbered by each block's
// smallest edge index. A bridge forms its own block.
std::vector<int> oracle_block_labels(const Graph& g);

// Max-flow(u, v) >= 3 with unit edge capacities (at most three augmenting
// steps). u == v counts as true.
bool oracle_three_edge_connected(const Graph& g, Vertex u, Vertex v);

// Per-vertex labels (smallest member) of the "cannot be separated by
// removing <= 1 edge" classes, straight from bridge deletion.
std::vector<Vertex> oracle_two_ecc_labels(const Graph& g);

// Components of g minus its bridges and all cut-pair edges. Note this is
// coarser machinery than pairwise 3-edge-connectivity: in a theta graph the
// two hubs are 3-edge-connected to each other yet land in separate
// components here, because all six path edges lie in cut pairs.
std::vector<Vertex> oracle_three_ecc_labels(const Graph& g);

}  // namespace smallcut
