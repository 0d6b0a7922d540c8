#pragma once

#include <vector>

#include "smallcut/graph.hpp"

namespace smallcut {

// Spanning tree rooted by BFS. parent[root] == root, parent_edge[root] == -1.
// Children are kept in adjacency order, which also fixes the preorder.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<int> parent_edge;
  std::vector<int> level;
  std::vector<std::vector<Vertex>> children;
  std::vector<char> on_tree;  // per edge index
  int height = 0;

  // Filled by annotate(): preorder number, subtree size, and the min/max
  // preorder reachable from the subtree through one non-tree edge (or within
  // the subtree itself).
  std::vector<int> pre, desc, low, high;
  bool annotated = false;

  bool is_tree_edge(int e) const { return on_tree[e] != 0; }

  // Requires annotate(); ancestor is inclusive (v is its own ancestor).
  bool is_ancestor(Vertex a, Vertex d) const {
    return pre[a] <= pre[d] && pre[d] < pre[a] + desc[a];
  }

  // Vertices of the subtree rooted at v, preorder-first.
  std::vector<Vertex> subtree(Vertex v) const;
};

// Throws GraphError (kMalformed) naming an unreached vertex if g is not
// connected.
RootedTree bfs_tree(const Graph& g, Vertex root);

void annotate(RootedTree& t, const Graph& g);

// Tree path edges between the endpoints of a non-tree edge, plus the edge
// itself.
EdgeSet fundamental_cycle(const Graph& g, const RootedTree& t, int non_tree_edge);
// The same cycle as a vertex list, starting at the deeper endpoint.
std::vector<Vertex> fundamental_cycle_vertices(const Graph& g, const RootedTree& t,
                                               int non_tree_edge);

// delta(S_e) where S_e is the component of T - e holding e's deeper endpoint.
EdgeSet fundamental_cut(const Graph& g, const RootedTree& t, int tree_edge);

}  // namespace smallcut
