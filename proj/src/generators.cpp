#include "smallcut/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "smallcut/prng.hpp"

namespace smallcut {

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive sides");
  std::vector<Edge> edges;
  auto id = [&](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
    }
  return Graph(rows * cols, std::move(edges));
}

Graph gen_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph gen_theta(int a, int b, int c) {
  int lens[3] = {a, b, c};
  int ones = 0;
  for (int len : lens) {
    if (len < 1) throw std::invalid_argument("theta path lengths must be >= 1");
    if (len == 1) ++ones;
  }
  if (ones > 1) throw std::invalid_argument("theta allows at most one length-1 path");
  // Terminals 0 and 1; interior vertices appended path by path.
  std::vector<Edge> edges;
  int next = 2;
  for (int len : lens) {
    Vertex prev = 0;
    for (int k = 1; k < len; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(next, std::move(edges));
}

Graph gen_bowtie() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph gen_barbell() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Graph gen_random_connected(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("need n-1 <= m <= n(n-1)/2");
  Prng rng(seed);
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (u == v || !used.insert({u, v}).second) return false;
    edges.push_back({u, v});
    return true;
  };
  for (Vertex v = 1; v < n; ++v)
    add(static_cast<Vertex>(rng.next_below(v)), v);
  while (static_cast<int>(edges.size()) < m)
    add(static_cast<Vertex>(rng.next_below(n)), static_cast<Vertex>(rng.next_below(n)));
  return Graph(n, std::move(edges));
}

Graph gen_attach_cycle(const Graph& base, int len, Vertex at) {
  if (len < 3) throw std::invalid_argument("attached cycle needs len >= 3");
  if (at < 0 || at >= base.n()) throw std::invalid_argument("attach vertex out of range");
  std::vector<Edge> edges = base.edges();
  Vertex prev = at;
  Vertex next = base.n();
  for (int k = 1; k < len; ++k) {
    edges.push_back({prev, next});
    prev = next++;
  }
  edges.push_back({at, prev});
  return Graph(base.n() + len - 1, std::move(edges));
}

Graph gen_attach_path(const Graph& base, int len, Vertex at) {
  Graph with_cycle = gen_attach_cycle(base, len, at);
  std::vector<Edge> edges = with_cycle.edges();
  edges.pop_back();  // drop the closing edge; everything else keeps its id
  return Graph(with_cycle.n(), std::move(edges));
}

Graph gen_fig2() {
  // a..f = 0..5; tree edges fc fd fe ca db first, then cd ad ab be.
  return Graph(6, {{2, 5}, {3, 5}, {4, 5}, {0, 2}, {1, 3},
                   {2, 3}, {0, 3}, {0, 1}, {1, 4}});
}

Graph gen_fig6() {
  // a..n = 0..13; tree edges first (ab ac ad ae cf dg eh gi hj hk jl km kn),
  // then bc bf ag hi hl mn.
  return Graph(14, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 5}, {3, 6}, {4, 7},
                    {6, 8}, {7, 9}, {7, 10}, {9, 11}, {10, 12}, {10, 13},
                    {1, 2}, {1, 5}, {0, 6}, {7, 8}, {7, 11}, {12, 13}});
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      best = std::max(best, dist[v]);
      for (const Adjacency& a : g.adj(v))
        if (dist[a.to] == -1) {
          dist[a.to] = dist[v] + 1;
          queue.push_back(a.to);
        }
    }
  }
  return best;
}

}  // namespace smallcut
