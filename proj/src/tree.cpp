#include "smallcut/tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace smallcut {

RootedTree bfs_tree(const Graph& g, Vertex root) {
  assert(root >= 0 && root < g.n());
  RootedTree t;
  t.root = root;
  int n = g.n();
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.level.assign(n, -1);
  t.children.assign(n, {});
  t.on_tree.assign(g.m(), 0);

  // Two passes so the tree is canonical regardless of discovery order:
  // levels by plain BFS, then each vertex picks its smallest neighbor one
  // level up as parent. Children therefore come out sorted by id.
  std::deque<Vertex> queue;
  t.level[root] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    t.height = std::max(t.height, t.level[v]);
    for (const Adjacency& a : g.adj(v)) {
      if (t.level[a.to] != -1) continue;
      t.level[a.to] = t.level[v] + 1;
      queue.push_back(a.to);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (t.level[v] == -1)
      throw GraphError(GraphError::kMalformed,
                       "graph is disconnected: vertex " + std::to_string(v) +
                           " is unreachable from " + std::to_string(root));
  t.parent[root] = root;
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    for (const Adjacency& a : g.adj(v)) {
      if (t.level[a.to] != t.level[v] - 1) continue;
      if (t.parent[v] == -1 || a.to < t.parent[v]) {
        t.parent[v] = a.to;
        t.parent_edge[v] = a.edge;
      }
    }
    t.on_tree[t.parent_edge[v]] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (v != root) t.children[t.parent[v]].push_back(v);
#ifndef NDEBUG
  for (auto& c : t.children) assert(std::is_sorted(c.begin(), c.end()));
#endif
  return t;
}

std::vector<Vertex> RootedTree::subtree(Vertex v) const {
  std::vector<Vertex> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex c : children[out[i]]) out.push_back(c);
  return out;
}

void annotate(RootedTree& t, const Graph& g) {
  int n = g.n();
  t.pre.assign(n, -1);
  t.desc.assign(n, 1);
  t.low.assign(n, 0);
  t.high.assign(n, 0);

  // Iterative preorder, children in adjacency order.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{t.root};
  int counter = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    t.pre[v] = counter++;
    order.push_back(v);
    for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
      stack.push_back(*it);
  }

  // Bottom-up over reversed preorder: desc, then low/high which fold in the
  // non-tree edges incident to each subtree.
  for (Vertex v = 0; v < n; ++v) {
    t.low[v] = t.pre[v];
    t.high[v] = t.pre[v];
  }
  for (int e = 0; e < g.m(); ++e) {
    if (t.is_tree_edge(e)) continue;
    Vertex u = g.edge(e).u, w = g.edge(e).v;
    t.low[u] = std::min(t.low[u], t.pre[w]);
    t.high[u] = std::max(t.high[u], t.pre[w]);
    t.low[w] = std::min(t.low[w], t.pre[u]);
    t.high[w] = std::max(t.high[w], t.pre[u]);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == t.root) continue;
    Vertex p = t.parent[v];
    t.desc[p] += t.desc[v];
    t.low[p] = std::min(t.low[p], t.low[v]);
    t.high[p] = std::max(t.high[p], t.high[v]);
  }
  t.annotated = true;
}

EdgeSet fundamental_cycle(const Graph& g, const RootedTree& t, int non_tree_edge) {
  assert(!t.is_tree_edge(non_tree_edge));
  EdgeSet cycle(g.m());
  cycle.set(non_tree_edge, true);
  Vertex a = g.edge(non_tree_edge).u;
  Vertex b = g.edge(non_tree_edge).v;
  while (a != b) {
    Vertex& deeper = t.level[a] >= t.level[b] ? a : b;
    cycle.set(t.parent_edge[deeper], true);
    deeper = t.parent[deeper];
  }
  return cycle;
}

std::vector<Vertex> fundamental_cycle_vertices(const Graph& g, const RootedTree& t,
                                               int non_tree_edge) {
  Vertex a = g.edge(non_tree_edge).u;
  Vertex b = g.edge(non_tree_edge).v;
  if (t.level[a] < t.level[b]) std::swap(a, b);
  std::vector<Vertex> from_a{a}, from_b{b};
  while (t.level[a] > t.level[b]) {
    a = t.parent[a];
    from_a.push_back(a);
  }
  while (a != b) {
    a = t.parent[a];
    b = t.parent[b];
    from_a.push_back(a);
    from_b.push_back(b);
  }
  from_a.pop_back();  // drop the meeting vertex once
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

EdgeSet fundamental_cut(const Graph& g, const RootedTree& t, int tree_edge) {
  assert(t.is_tree_edge(tree_edge));
  Vertex u = g.edge(tree_edge).u, v = g.edge(tree_edge).v;
  Vertex child = t.parent[u] == v ? u : v;
  std::vector<char> in_s(g.n(), 0);
  for (Vertex x : t.subtree(child)) in_s[x] = 1;
  return g.induced_cut(in_s);
}

}  // namespace smallcut
