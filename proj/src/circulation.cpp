#include "smallcut/circulation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace smallcut {

BitCirculation complete_circulation(const Graph& g, const RootedTree& t, int bits,
                                    const std::map<int, BitVec>& psi) {
  BitCirculation phi;
  phi.bits = bits;
  phi.value.assign(g.m(), BitVec(bits));

  std::size_t non_tree = 0;
  for (int e = 0; e < g.m(); ++e)
    if (!t.is_tree_edge(e)) ++non_tree;
  if (psi.size() != non_tree)
    throw std::invalid_argument("psi must assign exactly the non-tree edges");
  for (const auto& [e, val] : psi) {
    if (e < 0 || e >= g.m() || t.is_tree_edge(e))
      throw std::invalid_argument("psi key " + std::to_string(e) +
                                  " is not a non-tree edge");
    if (val.width() != bits)
      throw std::invalid_argument("psi value width mismatch on edge " +
                                  std::to_string(e));
    phi.value[e] = val;
  }

  // Deepest level first: when v is processed every incident edge except the
  // parent edge is already assigned, so the parent edge value is forced by
  // the even-XOR constraint at v. This is the leaf-elimination order, and it
  // is why the completion is unique.
  std::vector<Vertex> by_depth;
  by_depth.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != t.root) by_depth.push_back(v);
  std::sort(by_depth.begin(), by_depth.end(),
            [&](Vertex a, Vertex b) { return t.level[a] > t.level[b]; });
  for (Vertex v : by_depth) {
    BitVec acc(bits);
    for (const Adjacency& a : g.adj(v))
      if (a.edge != t.parent_edge[v]) acc ^= phi.value[a.edge];
    phi.value[t.parent_edge[v]] = acc;
  }
  return phi;
}

BitCirculation random_circulation(const Graph& g, const RootedTree& t, int bits,
                                  Prng& rng) {
  std::map<int, BitVec> psi;
  for (int e = 0; e < g.m(); ++e)
    if (!t.is_tree_edge(e)) psi.emplace(e, rng.next_bits(bits));
  return complete_circulation(g, t, bits, psi);
}

bool is_bit_circulation(const Graph& g, const BitCirculation& phi) {
  if (static_cast<int>(phi.value.size()) != g.m()) return false;
  for (const BitVec& v : phi.value)
    if (v.width() != phi.bits) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    BitVec acc(phi.bits);
    for (const Adjacency& a : g.adj(v)) acc ^= phi.value[a.edge];
    if (!acc.zero()) return false;
  }
  return true;
}

BitVec xor_over(const BitCirculation& phi, const EdgeSet& edges) {
  BitVec acc(phi.bits);
  edges.for_each_set([&](int e) { acc ^= phi.value[e]; });
  return acc;
}

double sample_even_intersection_rate(const Graph& g, const EdgeSet& f, int trials,
                                     Prng& rng) {
  assert(trials > 0);
  RootedTree t = bfs_tree(g, 0);
  int even = 0;
  for (int i = 0; i < trials; ++i) {
    BitCirculation phi = random_circulation(g, t, 1, rng);
    if (xor_over(phi, f).zero()) ++even;
  }
  return static_cast<double>(even) / trials;
}

int bits_for_cut_edges(const Graph& g) {
  return std::max(1, ceil_log2(static_cast<std::uint64_t>(g.n()) * g.m()));
}

int bits_for_cut_classes(const Graph& g) {
  return std::max(
      1, ceil_log2(static_cast<std::uint64_t>(g.n()) * g.m() * g.m()));
}

int bits_for_cut_vertices(const Graph& g) {
  return std::max(1, g.max_degree() + 2 * ceil_log2(g.n()));
}

}  // namespace smallcut
