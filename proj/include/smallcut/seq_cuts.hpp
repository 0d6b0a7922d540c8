#pragma once

#include <vector>

#include "smallcut/circulation.hpp"
#include "smallcut/graph.hpp"
#include "smallcut/tree.hpp"

namespace smallcut {

// Monte Carlo small-cut algorithms: sample a circulation wide enough that
// value collisions are unlikely, then read the answers off the values.
// Always one-sided: true cut edges / pairs / vertices are always reported;
// extras appear with probability <= 1/n at the default widths.

// Edges with phi(e) == 0. Superset of the bridges.
EdgeSet cut_edges_from(const BitCirculation& phi);
EdgeSet cut_edges_mc(const Graph& g, Prng& rng, int bits = 0);

struct CutClasses {
  std::vector<std::vector<int>> classes;  // by smallest member, each ascending
  std::vector<int> class_of;              // per edge, -1 if in no class
  std::vector<BitVec> class_value;        // per class
};

// Edges grouped by equal nonzero value, singletons dropped.
CutClasses cut_classes_from(const Graph& g, const BitCirculation& phi);
CutClasses cut_classes_mc(const Graph& g, Prng& rng, int bits = 0);

// Groups indices of `values` by equal value; three-pass LSD radix sort in the
// nominal width regime, comparison sort otherwise. Group order follows the
// sorted values; callers wanting canonical order re-sort by smallest member.
std::vector<std::vector<int>> group_by_value(const std::vector<BitVec>& values);

// v is flagged iff rank of the incident values (ascending edge index) drops
// below degree(v) - 1, i.e. iff G - v likely has >= 2 components. Leaves are
// never flagged.
std::vector<char> cut_vertex_flags_from(const Graph& g, const BitCirculation& phi);
std::vector<char> cut_vertices_mc(const Graph& g, Prng& rng, int bits = 0);

struct BlockLabels {
  bool structure_ok = true;     // local partitions passed the span/rank checks
  std::vector<int> label;       // per edge, dense ids by smallest member edge
  std::vector<char> cut_vertex; // >= 2 distinct incident labels
};

// Blocks from the per-vertex minimal zero-sum partitions, closed under
// union-find across vertices.
BlockLabels block_labels_from(const Graph& g, const BitCirculation& phi);

// Component labels (smallest vertex) after removing candidate cut edges.
std::vector<Vertex> two_ecc_labels(const Graph& g, const EdgeSet& cut_edges);
// Components after also removing all cut-pair edges.
std::vector<Vertex> three_ecc_labels(const Graph& g, const EdgeSet& cut_edges,
                                     const EdgeSet& pair_edges);

// --- Deterministic sequential verifiers (Las Vegas building blocks) ---

// Accepts iff candidate == the bridge set. Sound for any candidate; relies
// only on T and component reasoning, not on phi.
bool verify_cut_edges_seq(const Graph& g, const RootedTree& t, const EdgeSet& candidate);

struct BlockVerdict {
  bool accepted = false;
  std::vector<int> label;        // valid when accepted
  std::vector<char> cut_vertex;  // valid when accepted
};

// Accepts iff the per-vertex partitions provably assemble into the true
// block decomposition: per-vertex span orthogonality + rank additivity, then
// the non-tree-edge and consecutive-tree-edge relations must already be
// merged. Requires t annotated.
BlockVerdict verify_blocks_seq(const Graph& g, const RootedTree& t,
                               const BitCirculation& phi);

}  // namespace smallcut
