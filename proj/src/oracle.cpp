#include "smallcut/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "smallcut/union_find.hpp"

namespace smallcut {

namespace {

// Iterative DFS computing discovery times and lowpoints; shared by the
// bridge, articulation, and block oracles.
struct DfsLow {
  std::vector<int> disc, low, parent_edge;
  std::vector<Vertex> order;  // finish-last order of the DFS forest

  explicit DfsLow(const Graph& g)
      : disc(g.n(), -1), low(g.n(), -1), parent_edge(g.n(), -1) {
    int time = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex root = 0; root < g.n(); ++root) {
      if (disc[root] != -1) continue;
      disc[root] = low[root] = time++;
      stack.push_back({root, 0});
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < g.adj(v).size()) {
          const Adjacency& a = g.adj(v)[next++];
          if (a.edge == parent_edge[v]) continue;
          if (disc[a.to] == -1) {
            parent_edge[a.to] = a.edge;
            disc[a.to] = low[a.to] = time++;
            stack.push_back({a.to, 0});
          } else {
            low[v] = std::min(low[v], disc[a.to]);
          }
        } else {
          order.push_back(v);
          stack.pop_back();
          if (!stack.empty()) {
            Vertex p = stack.back().first;
            low[p] = std::min(low[p], low[v]);
          }
        }
      }
    }
  }
};

}  // namespace

EdgeSet oracle_bridges(const Graph& g) {
  DfsLow d(g);
  EdgeSet bridges(g.m());
  for (Vertex v = 0; v < g.n(); ++v)
    if (d.parent_edge[v] != -1 && d.low[v] == d.disc[v])
      bridges.set(d.parent_edge[v], true);
  return bridges;
}

std::vector<char> oracle_articulation_flags(const Graph& g) {
  std::vector<char> cut(g.n(), 0);
  DfsLow d(g);
  std::vector<int> root_children(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (d.parent_edge[v] == -1) continue;
    Vertex p = g.other(d.parent_edge[v], v);
    if (d.parent_edge[p] == -1) {
      if (++root_children[p] >= 2) cut[p] = 1;
    } else if (d.low[v] >= d.disc[p]) {
      cut[p] = 1;
    }
  }
  return cut;
}

std::vector<std::pair<int, int>> oracle_cut_pairs(const Graph& g) {
  assert(g.connected());
  assert(oracle_bridges(g).zero());
  std::vector<std::pair<int, int>> pairs;
  EdgeSet removed(g.m());
  for (int e = 0; e < g.m(); ++e) {
    for (int f = e + 1; f < g.m(); ++f) {
      removed.set(e, true);
      removed.set(f, true);
      auto label = g.component_labels_without(removed);
      removed.set(e, false);
      removed.set(f, false);
      for (Vertex v = 0; v < g.n(); ++v)
        if (label[v] != 0) {
          pairs.push_back({e, f});
          break;
        }
    }
  }
  return pairs;
}

std::vector<std::vector<int>> oracle_cut_classes(const Graph& g) {
  assert(g.connected());
  EdgeSet bridges = oracle_bridges(g);
  UnionFind uf(g.m());
  std::vector<char> in_pair(g.m(), 0);

  // Pairs live inside the bridge-free parts; process each part separately.
  auto comp = g.component_labels_without(bridges);
  std::vector<Vertex> comps;
  for (Vertex v = 0; v < g.n(); ++v)
    if (comp[v] == v) comps.push_back(v);
  for (Vertex c : comps) {
    std::vector<char> keep(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) keep[v] = comp[v] == c;
    Subgraph sub = induced_subgraph(g, keep);
    if (sub.graph.m() == 0) continue;
    for (auto [e, f] : oracle_cut_pairs(sub.graph)) {
      uf.unite(sub.edge_of[e], sub.edge_of[f]);
      in_pair[sub.edge_of[e]] = in_pair[sub.edge_of[f]] = 1;
    }
  }

  std::vector<std::vector<int>> by_root(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (in_pair[e]) by_root[uf.find(e)].push_back(e);
  std::vector<std::vector<int>> classes;
  for (auto& cls : by_root)
    if (!cls.empty()) classes.push_back(std::move(cls));
  return classes;  // already ordered by smallest member == root
}

bool oracle_is_induced_cut(const Graph& g, const EdgeSet& f) {
  auto comp = g.component_labels_without(f);
  // 2-color the components so that every f edge crosses colors.
  std::vector<int> color(g.n(), -1);  // per component root
  std::vector<std::vector<int>> pending;  // f edges as component pairs
  std::vector<std::pair<Vertex, Vertex>> cedges;
  bool ok = true;
  f.for_each_set([&](int e) {
    Vertex a = comp[g.edge(e).u], b = comp[g.edge(e).v];
    if (a == b) ok = false;  // an f edge inside one component can never cross
    cedges.push_back({a, b});
  });
  if (!ok) return false;
  // BFS 2-coloring over the component graph.
  std::vector<std::vector<Vertex>> cadj(g.n());
  for (auto [a, b] : cedges) {
    cadj[a].push_back(b);
    cadj[b].push_back(a);
  }
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != s || color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : cadj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_is_induced_cut_subsets(const Graph& g, const EdgeSet& f) {
  assert(g.n() <= 24);
  if (g.n() == 0) return f.zero();
  // delta(S) == delta(V - S); fix vertex 0 outside S.
  std::uint32_t limit = std::uint32_t{1} << (g.n() - 1);
  for (std::uint32_t s = 0; s < limit; ++s) {
    std::vector<char> in_s(g.n(), 0);
    for (int v = 1; v < g.n(); ++v) in_s[v] = (s >> (v - 1)) & 1;
    if (g.induced_cut(in_s) == f) return true;
  }
  return false;
}

std::vector<int> oracle_block_labels(const Graph& g) {
  // Biconnected components with an explicit edge stack.
  std::vector<int> label(g.m(), -1);
  std::vector<int> disc(g.n(), -1), low(g.n(), -1), parent_edge(g.n(), -1);
  std::vector<int> estack;
  int time = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = time++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < g.adj(v).size()) {
        const Adjacency& a = g.adj(v)[next++];
        if (a.edge == parent_edge[v]) continue;
        if (disc[a.to] == -1) {
          parent_edge[a.to] = a.edge;
          disc[a.to] = low[a.to] = time++;
          estack.push_back(a.edge);
          stack.push_back({a.to, 0});
        } else if (disc[a.to] < disc[v]) {
          estack.push_back(a.edge);
          low[v] = std::min(low[v], disc[a.to]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        Vertex p = stack.back().first;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // Pop one block: everything above and including edge (p, v).
          std::vector<int> block;
          for (;;) {
            int e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e == parent_edge[v]) break;
          }
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  // Dense ids ordered by each block's smallest edge.
  std::vector<std::pair<int, int>> order;  // (min edge, block index)
  for (std::size_t b = 0; b < blocks.size(); ++b)
    order.push_back({*std::min_element(blocks[b].begin(), blocks[b].end()),
                     static_cast<int>(b)});
  std::sort(order.begin(), order.end());
  for (std::size_t id = 0; id < order.size(); ++id)
    for (int e : blocks[order[id].second]) label[e] = static_cast<int>(id);
  return label;
}

bool oracle_three_edge_connected(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  // Unit-capacity undirected max flow, stop after three augmentations.
  std::vector<int> cap(2 * g.m(), 1);  // arc 2e: u->v, arc 2e+1: v->u
  for (int round = 0; round < 3; ++round) {
    std::vector<int> from_arc(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::deque<Vertex> queue{u};
    seen[u] = 1;
    while (!queue.empty() && !seen[v]) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const Adjacency& a : g.adj(x)) {
        int arc = 2 * a.edge + (g.edge(a.edge).u == x ? 0 : 1);
        if (cap[arc] == 0 || seen[a.to]) continue;
        seen[a.to] = 1;
        from_arc[a.to] = arc;
        queue.push_back(a.to);
      }
    }
    if (!seen[v]) return false;
    for (Vertex x = v; x != u;) {
      int arc = from_arc[x];
      --cap[arc];
      ++cap[arc ^ 1];
      x = g.other(arc / 2, x);
    }
  }
  return true;
}

std::vector<Vertex> oracle_two_ecc_labels(const Graph& g) {
  return g.component_labels_without(oracle_bridges(g));
}

std::vector<Vertex> oracle_three_ecc_labels(const Graph& g) {
  EdgeSet removed = oracle_bridges(g);
  for (const auto& cls : oracle_cut_classes(g))
    for (int e : cls) removed.set(e, true);
  return g.component_labels_without(removed);
}

}  // namespace smallcut
