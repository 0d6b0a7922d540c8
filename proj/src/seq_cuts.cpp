#include "smallcut/seq_cuts.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "smallcut/gf2.hpp"
#include "smallcut/union_find.hpp"

namespace smallcut {

EdgeSet cut_edges_from(const BitCirculation& phi) {
  EdgeSet out(static_cast<int>(phi.value.size()));
  for (std::size_t e = 0; e < phi.value.size(); ++e)
    if (phi.value[e].zero()) out.set(static_cast<int>(e), true);
  return out;
}

EdgeSet cut_edges_mc(const Graph& g, Prng& rng, int bits) {
  if (g.m() == 0) return EdgeSet(0);
  if (bits == 0) bits = bits_for_cut_edges(g);
  RootedTree t = bfs_tree(g, 0);
  return cut_edges_from(random_circulation(g, t, bits, rng));
}

std::vector<std::vector<int>> group_by_value(const std::vector<BitVec>& values) {
  int m = static_cast<int>(values.size());
  if (m == 0) return {};
  int bits = values[0].width();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);

  int digit = (bits + 2) / 3;
  if (digit <= 16) {
    // Three stable counting passes over ceil(bits/3)-wide digits; bucket
    // count stays O(2^(bits/3)) which is what makes the nominal widths cheap.
    std::vector<int> next(m);
    std::vector<int> count(std::size_t{1} << digit);
    for (int pass = 0; pass < 3; ++pass) {
      int at = pass * digit;
      int take = std::min(digit, bits - at);
      if (take <= 0) break;
      std::fill(count.begin(), count.end(), 0);
      for (int i : order) ++count[values[i].extract(at, take)];
      int acc = 0;
      for (std::size_t d = 0; d < count.size(); ++d) {
        int c = count[d];
        count[d] = acc;
        acc += c;
      }
      for (int i : order) next[count[values[i].extract(at, take)]++] = i;
      order.swap(next);
    }
  } else {
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
  }

  std::vector<std::vector<int>> groups;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && values[order[j]] == values[order[i]]) ++j;
    groups.emplace_back(order.begin() + i, order.begin() + j);
    i = j;
  }
  return groups;
}

CutClasses cut_classes_from(const Graph& g, const BitCirculation& phi) {
  CutClasses out;
  out.class_of.assign(g.m(), -1);
  std::vector<std::vector<int>> groups = group_by_value(phi.value);
  for (auto& grp : groups) {
    if (grp.size() < 2) continue;
    if (phi.value[grp[0]].zero()) continue;  // zero marks cut edges, not pairs
    std::sort(grp.begin(), grp.end());
    out.classes.push_back(std::move(grp));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    out.class_value.push_back(phi.value[out.classes[c][0]]);
    for (int e : out.classes[c]) out.class_of[e] = static_cast<int>(c);
  }
  return out;
}

CutClasses cut_classes_mc(const Graph& g, Prng& rng, int bits) {
  if (g.m() == 0) return CutClasses{{}, {}, {}};
  if (bits == 0) bits = bits_for_cut_classes(g);
  RootedTree t = bfs_tree(g, 0);
  return cut_classes_from(g, random_circulation(g, t, bits, rng));
}

std::vector<char> cut_vertex_flags_from(const Graph& g, const BitCirculation& phi) {
  std::vector<char> flags(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d <= 1) continue;
    std::vector<BitVec> columns;
    columns.reserve(d);
    for (const Adjacency& a : g.adj(v)) columns.push_back(phi.value[a.edge]);
    if (gf2_rank(columns) < d - 1) flags[v] = 1;
  }
  return flags;
}

std::vector<char> cut_vertices_mc(const Graph& g, Prng& rng, int bits) {
  if (g.n() <= 1 || g.m() == 0) return std::vector<char>(g.n(), 0);
  if (bits == 0) bits = bits_for_cut_vertices(g);
  RootedTree t = bfs_tree(g, 0);
  return cut_vertex_flags_from(g, random_circulation(g, t, bits, rng));
}

namespace {

// Per-vertex minimal zero-sum partition of the incident values; shared by
// the MC block labeling and the block verifier. Returns parts as edge ids.
struct LocalPartition {
  std::vector<std::vector<int>> parts;  // edge ids
  bool checks_ok = true;                // orthogonal spans + rank additivity
};

LocalPartition local_partition(const Graph& g, const BitCirculation& phi, Vertex v) {
  LocalPartition out;
  std::vector<BitVec> columns;
  std::vector<int> edge_ids;
  for (const Adjacency& a : g.adj(v)) {
    columns.push_back(phi.value[a.edge]);
    edge_ids.push_back(a.edge);
  }
  CheckedPartition cp = checked_partition(columns);
  out.checks_ok = cp.checks_ok;
  out.parts.resize(cp.parts);
  for (std::size_t k = 0; k < columns.size(); ++k)
    out.parts[cp.part_of[k]].push_back(edge_ids[k]);
  return out;
}

// Dense block ids (by smallest member edge) from a union-find over edges.
void densify_blocks(const Graph& g, UnionFind& uf, std::vector<int>& label,
                    std::vector<char>& cut_vertex) {
  label.assign(g.m(), -1);
  std::vector<int> id_of_root(g.m(), -1);
  int next = 0;
  for (int e = 0; e < g.m(); ++e) {
    int r = uf.find(e);  // root is the smallest member
    if (id_of_root[r] == -1) id_of_root[r] = next++;
    label[e] = id_of_root[r];
  }
  cut_vertex.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    int first = -1;
    for (const Adjacency& a : g.adj(v)) {
      if (first == -1)
        first = label[a.edge];
      else if (label[a.edge] != first)
        cut_vertex[v] = 1;
    }
  }
}

}  // namespace

BlockLabels block_labels_from(const Graph& g, const BitCirculation& phi) {
  BlockLabels out;
  UnionFind uf(g.m());
  for (Vertex v = 0; v < g.n(); ++v) {
    LocalPartition lp = local_partition(g, phi, v);
    if (!lp.checks_ok) out.structure_ok = false;
    for (const auto& part : lp.parts)
      for (std::size_t k = 1; k < part.size(); ++k) uf.unite(part[0], part[k]);
  }
  densify_blocks(g, uf, out.label, out.cut_vertex);
  return out;
}

std::vector<Vertex> two_ecc_labels(const Graph& g, const EdgeSet& cut_edges) {
  return g.component_labels_without(cut_edges);
}

std::vector<Vertex> three_ecc_labels(const Graph& g, const EdgeSet& cut_edges,
                                     const EdgeSet& pair_edges) {
  EdgeSet removed = cut_edges;
  removed |= pair_edges;
  return g.component_labels_without(removed);
}

bool verify_cut_edges_seq(const Graph& g, const RootedTree& t,
                          const EdgeSet& candidate) {
  assert(t.annotated);
  // A non-tree candidate cannot be a bridge (the tree survives deleting it).
  bool bad = false;
  candidate.for_each_set([&](int e) {
    if (!t.is_tree_edge(e)) bad = true;
  });
  if (bad) return false;
  // Split T at the candidates; every candidate is a bridge iff no non-tree
  // edge reconnects two sides.
  auto side = [&] {
    std::vector<Vertex> label(g.n(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
      if (label[s] != -1) continue;
      label[s] = s;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const Adjacency& a : g.adj(v)) {
          if (!t.is_tree_edge(a.edge) || candidate.test(a.edge)) continue;
          if (label[a.to] == -1) {
            label[a.to] = s;
            stack.push_back(a.to);
          }
        }
      }
    }
    return label;
  }();
  for (int e = 0; e < g.m(); ++e) {
    if (t.is_tree_edge(e) || candidate.test(e)) continue;
    if (side[g.edge(e).u] != side[g.edge(e).v]) return false;
  }
  // No bridge may be missing: every unclaimed tree edge must be covered by
  // a non-tree edge escaping the subtree under it.
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == t.root || candidate.test(t.parent_edge[v])) continue;
    bool covered = t.low[v] < t.pre[v] || t.high[v] >= t.pre[v] + t.desc[v];
    if (!covered) return false;
  }
  return true;
}

BlockVerdict verify_blocks_seq(const Graph& g, const RootedTree& t,
                               const BitCirculation& phi) {
  assert(t.annotated);
  BlockVerdict verdict;
  // A corrupted phi that is not even a circulation is rejected outright;
  // everything below assumes the incident values XOR to zero.
  if (!is_bit_circulation(g, phi)) return verdict;
  UnionFind uf(g.m());
  for (Vertex v = 0; v < g.n(); ++v) {
    LocalPartition lp = local_partition(g, phi, v);
    if (!lp.checks_ok) return verdict;
    for (const auto& part : lp.parts)
      for (std::size_t k = 1; k < part.size(); ++k) uf.unite(part[0], part[k]);
  }
  // Every forced same-block pair must already be merged. First: a non-tree
  // edge {w, v} with w outside v's subtree shares a block with {v, p(v)}.
  for (int e = 0; e < g.m(); ++e) {
    if (t.is_tree_edge(e)) continue;
    for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
      Vertex w = g.other(e, v);
      if (t.is_ancestor(v, w)) continue;
      if (!uf.same(e, t.parent_edge[v])) return verdict;
    }
  }
  // Second: consecutive tree edges {v, p} and {p, p(p)} share a block iff
  // some non-tree edge escapes p's subtree from inside v's.
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == t.root) continue;
    Vertex p = t.parent[v];
    if (p == t.root) continue;
    bool escapes = t.low[v] < t.pre[p] || t.high[v] >= t.pre[p] + t.desc[p];
    if (escapes && !uf.same(t.parent_edge[v], t.parent_edge[p])) return verdict;
  }
  verdict.accepted = true;
  densify_blocks(g, uf, verdict.label, verdict.cut_vertex);
  return verdict;
}

}  // namespace smallcut
