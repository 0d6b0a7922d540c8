#include "smallcut/cactus.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace smallcut {

void VertexRelation::relate(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n() || b >= n())
    throw std::invalid_argument("VertexRelation::relate: vertex out of range");
  pairs_.emplace_back(a, b);
  Vertex ra = find(a);
  Vertex rb = find(b);
  if (ra == rb) return;
  if (ra < rb)
    parent_[rb] = ra;
  else
    parent_[ra] = rb;
}

Vertex VertexRelation::find(Vertex v) const {
  if (v < 0 || v >= n())
    throw std::invalid_argument("VertexRelation::find: vertex out of range");
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    Vertex up = parent_[v];
    parent_[v] = root;
    v = up;
  }
  return root;
}

std::vector<Vertex> VertexRelation::labels() const {
  std::vector<Vertex> out(parent_.size());
  for (Vertex v = 0; v < n(); ++v) out[v] = find(v);
  return out;
}

namespace {

enum class ChainStatus { kOk, kBridge, kDisconnected };

struct ChainResult {
  ChainStatus status = ChainStatus::kOk;
  EarDecomposition dec;
};

// Chain sweep over a depth-first tree. Each non-tree edge opens one ear at
// its first-discovered endpoint, in discovery order of that endpoint: follow
// the non-tree edge, then parent links until an already-covered vertex.
// Loops become length-1 closed ears at their vertex's turn. Any edge left
// over is a bridge.
ChainResult build_chains(int n, const std::vector<std::pair<Vertex, Vertex>>& ends) {
  ChainResult out;
  const int m = static_cast<int>(ends.size());
  std::vector<std::vector<Adjacency>> adj(n);
  std::vector<std::vector<int>> loops(n);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = ends[i];
    if (u == v) {
      loops[u].push_back(i);
      continue;
    }
    adj[u].push_back({v, i});
    adj[v].push_back({u, i});
  }

  std::vector<Vertex> parent(n, -1);
  std::vector<int> parent_edge(n, -1);
  std::vector<int> dfi(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> tree_edge(m, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack;
  dfi[0] = 0;
  order.push_back(0);
  stack.push_back(0);
  int discovered = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    if (next[v] == adj[v].size()) {
      stack.pop_back();
      continue;
    }
    Adjacency a = adj[v][next[v]++];
    if (a.edge == parent_edge[v]) continue;
    if (dfi[a.to] != -1) continue;  // non-tree edge; picked up in the sweep
    parent[a.to] = v;
    parent_edge[a.to] = a.edge;
    tree_edge[a.edge] = 1;
    dfi[a.to] = discovered++;
    order.push_back(a.to);
    stack.push_back(a.to);
  }
  if (discovered != n) {
    out.status = ChainStatus::kDisconnected;
    return out;
  }

  std::vector<char> covered(n, 0);
  std::vector<char> used(m, 0);
  covered[0] = 1;
  out.dec.base = 0;
  for (Vertex v : order) {
    // A vertex with its own non-tree edges but not covered by any earlier
    // chain means no non-tree edge spans its parent edge: a bridge.
    for (int e : loops[v]) {
      if (!covered[v]) {
        out.status = ChainStatus::kBridge;
        return out;
      }
      out.dec.ears.push_back(Ear{{v, v}, {e}});
      used[e] = 1;
    }
    for (const Adjacency& a : adj[v]) {
      if (tree_edge[a.edge] || used[a.edge]) continue;
      if (dfi[a.to] < dfi[v]) continue;  // opened from the other end
      if (!covered[v]) {
        out.status = ChainStatus::kBridge;
        return out;
      }
      Ear ear;
      ear.vertices.push_back(v);
      ear.edges.push_back(a.edge);
      used[a.edge] = 1;
      Vertex cur = a.to;
      while (!covered[cur]) {
        covered[cur] = 1;
        ear.vertices.push_back(cur);
        ear.edges.push_back(parent_edge[cur]);
        used[parent_edge[cur]] = 1;
        cur = parent[cur];
      }
      ear.vertices.push_back(cur);
      out.dec.ears.push_back(std::move(ear));
    }
  }
  for (int e = 0; e < m; ++e) {
    if (!used[e]) {
      out.status = ChainStatus::kBridge;
      return out;
    }
  }
  return out;
}

// js: 1-based edge positions within the ear, strictly increasing, nonempty.
std::vector<std::pair<Vertex, Vertex>> pinch_positions(const Ear& ear,
                                                       const std::vector<int>& js) {
  const auto& v = ear.vertices;
  const int t = static_cast<int>(js.size());
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(js.size());
  for (int x = 0; x + 1 < t; ++x) out.emplace_back(v[js[x]], v[js[x + 1] - 1]);
  out.emplace_back(v[js[t - 1]], v[js[0] - 1]);
  return out;
}

}  // namespace

EarDecomposition ear_decomposition(const Graph& g) {
  if (g.n() <= 0) throw std::invalid_argument("ear_decomposition: empty graph");
  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(g.m());
  for (const Edge& e : g.edges()) ends.emplace_back(e.u, e.v);
  ChainResult r = build_chains(g.n(), ends);
  if (r.status == ChainStatus::kDisconnected)
    throw std::invalid_argument("ear_decomposition: graph is disconnected");
  if (r.status == ChainStatus::kBridge)
    throw std::invalid_argument("ear_decomposition: graph has a bridge");
  return std::move(r.dec);
}

std::optional<EarDecomposition> multigraph_ears(const MultiGraph& mg) {
  if (mg.n <= 0) throw std::invalid_argument("multigraph_ears: empty multigraph");
  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(mg.edges.size());
  for (const MultiGraph::Edge& e : mg.edges) ends.emplace_back(e.from, e.to);
  ChainResult r = build_chains(mg.n, ends);
  if (r.status == ChainStatus::kDisconnected)
    throw std::invalid_argument("multigraph_ears: multigraph is disconnected");
  if (r.status == ChainStatus::kBridge) return std::nullopt;
  return std::move(r.dec);
}

std::vector<std::pair<Vertex, Vertex>> pinch_relation(const Ear& ear,
                                                      const std::vector<int>& u) {
  if (u.empty()) throw std::invalid_argument("pinch_relation: empty edge set");
  std::vector<int> js;
  js.reserve(u.size());
  for (int id : u) {
    auto it = std::find(ear.edges.begin(), ear.edges.end(), id);
    if (it == ear.edges.end())
      throw std::invalid_argument("pinch_relation: edge not in the ear");
    js.push_back(static_cast<int>(it - ear.edges.begin()) + 1);
  }
  std::sort(js.begin(), js.end());
  if (std::adjacent_find(js.begin(), js.end()) != js.end())
    throw std::invalid_argument("pinch_relation: duplicate edge");
  return pinch_positions(ear, js);
}

VertexRelation equiv_prime(const Graph& g, const EarDecomposition& dec,
                           const BitCirculation& phi) {
  if (static_cast<int>(phi.value.size()) != g.m())
    throw std::invalid_argument("equiv_prime: phi length != m");
  VertexRelation rel(g.n());
  for (const Ear& ear : dec.ears) {
    std::vector<BitVec> vals;
    vals.reserve(ear.edges.size());
    for (int e : ear.edges) vals.push_back(phi.value[e]);
    for (std::vector<int>& grp : group_by_value(vals)) {
      std::sort(grp.begin(), grp.end());
      for (int& j : grp) ++j;  // positions to 1-based
      for (auto [a, b] : pinch_positions(ear, grp)) rel.relate(a, b);
    }
  }
  return rel;
}

MultiGraph contract(const Graph& g, const VertexRelation& rel) {
  if (rel.n() != g.n())
    throw std::invalid_argument("contract: relation size != n");
  std::vector<Vertex> label = rel.labels();
  std::vector<Vertex> uniq = label;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  MultiGraph mg;
  mg.n = static_cast<int>(uniq.size());
  mg.members.resize(mg.n);
  mg.node_of.resize(g.n());
  std::vector<int> id_of(g.n(), -1);
  for (int i = 0; i < mg.n; ++i) id_of[uniq[i]] = i;
  for (Vertex v = 0; v < g.n(); ++v) {
    mg.node_of[v] = id_of[label[v]];
    mg.members[mg.node_of[v]].push_back(v);
  }
  mg.edges.reserve(g.m());
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    mg.edges.push_back({i, mg.node_of[e.u], mg.node_of[e.v]});
  }
  return mg;
}

bool is_cactuslike(const MultiGraph& mg) {
  std::optional<EarDecomposition> dec = multigraph_ears(mg);
  if (!dec) return false;
  for (const Ear& ear : dec->ears)
    if (!ear.closed()) return false;
  return true;
}

CactusCertificate certify_cut_classes(const Graph& g, const BitCirculation& phi) {
  const int m = g.m();
  if (static_cast<int>(phi.value.size()) != m)
    throw std::invalid_argument("certify_cut_classes: phi length != m");
  for (const BitVec& x : phi.value)
    if (x.width() != phi.bits)
      throw std::invalid_argument("certify_cut_classes: mixed phi widths");

  CactusCertificate cert;
  EarDecomposition dec = ear_decomposition(g);  // throws unless 2-edge-connected
  cert.relation = equiv_prime(g, dec, phi);
  cert.cactus = contract(g, cert.relation);

  // A non-circulation can hide a real cut pair behind unequal values, which
  // would dodge every later check; refuse it outright.
  if (!is_bit_circulation(g, phi)) return cert;

  std::optional<EarDecomposition> hd = multigraph_ears(cert.cactus);
  if (!hd) return cert;  // bridge in the quotient
  for (const Ear& ear : hd->ears)
    if (!ear.closed()) return cert;  // open ear: some pinch was illusory

  // Quotient is cactuslike, so its cut classes are exactly its multi-edge
  // ears. Accept iff every equal-value group sits inside one such ear.
  std::vector<int> ear_of(m, -1);
  for (std::size_t i = 0; i < hd->ears.size(); ++i)
    for (int e : hd->ears[i].edges) ear_of[e] = static_cast<int>(i);

  std::vector<std::vector<int>> kept;
  for (std::vector<int>& grp : group_by_value(phi.value)) {
    if (grp.size() < 2) continue;
    std::sort(grp.begin(), grp.end());
    for (std::size_t k = 1; k < grp.size(); ++k)
      if (ear_of[grp[k]] != ear_of[grp[0]]) return cert;
    kept.push_back(std::move(grp));
  }

  cert.accepted = true;
  std::sort(kept.begin(), kept.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  cert.classes.class_of.assign(m, -1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int e : kept[i]) cert.classes.class_of[e] = static_cast<int>(i);
    cert.classes.class_value.push_back(phi.value[kept[i].front()]);
    cert.classes.classes.push_back(std::move(kept[i]));
  }
  return cert;
}

}  // namespace smallcut
