#pragma once

#include <cstdint>

#include "smallcut/graph.hpp"

namespace smallcut {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int rows, int cols);
// K_{1,leaves}: center 0, leaves 1..leaves.
Graph gen_star(int leaves);
// Three internally disjoint paths of a, b, c edges between two terminals;
// at most one may have length 1 (the graph must stay simple).
Graph gen_theta(int a, int b, int c);
// Two triangles sharing vertex 0.
Graph gen_bowtie();
// Two triangles joined by one bridge.
Graph gen_barbell();
// Random tree plus random extra edges; connected and simple by construction.
Graph gen_random_connected(int n, int m, std::uint64_t seed);

// Cycle of `len` edges attached at `at`: len - 1 new vertices appended after
// the base's, walk edges appended after the base's edges, the closing edge
// {at, last new vertex} strictly last. attach_path is the same construction
// without the closing edge, so the two graphs share ids for all common
// vertices and edges.
Graph gen_attach_cycle(const Graph& base, int len, Vertex at);
Graph gen_attach_path(const Graph& base, int len, Vertex at);

// The worked 6-vertex example: 9 edges, tree edges first (fc fd fe ca db),
// then cd ad ab be; a..f = 0..5.
Graph gen_fig2();
// The 14-vertex block-decomposition example: 5 blocks, bridges {hk},
// cut vertices {a, h, k}; a..n = 0..13.
Graph gen_fig6();

// Longest BFS distance over all sources.
int diameter(const Graph& g);

}  // namespace smallcut
