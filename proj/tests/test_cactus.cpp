#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "smallcut/cactus.hpp"
#include "smallcut/catalog.hpp"
#include "smallcut/circulation.hpp"
#include "smallcut/generators.hpp"
#include "smallcut/oracle.hpp"
#include "smallcut/prng.hpp"
#include "smallcut/tree.hpp"

using namespace smallcut;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Four internally disjoint 2-edge paths between 0 and 1; path i uses edges
// {2i, 2i+1} through midpoint 2+i.
Graph four_theta() {
  return Graph(6, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}});
}

// Structural validity of an ear decomposition, checked against the oracle:
// ears partition E, the first is closed, each ear's endpoints already appear
// while its interior is new, consecutive vertices match the edge endpoints,
// and every prefix graph is 2-edge-connected.
void check_ear_validity(const Graph& g, const EarDecomposition& dec) {
  std::vector<char> edge_seen(g.m(), 0);
  std::vector<char> vert_seen(g.n(), 0);
  REQUIRE(dec.base >= 0);
  REQUIRE(dec.base < g.n());
  vert_seen[dec.base] = 1;
  std::vector<Edge> prefix;
  for (std::size_t i = 0; i < dec.ears.size(); ++i) {
    const Ear& ear = dec.ears[i];
    REQUIRE(!ear.edges.empty());
    REQUIRE(ear.vertices.size() == ear.edges.size() + 1);
    if (i == 0) CHECK(ear.closed());
    for (std::size_t k = 0; k < ear.edges.size(); ++k) {
      int e = ear.edges[k];
      REQUIRE(e >= 0);
      REQUIRE(e < g.m());
      REQUIRE(!edge_seen[e]);
      edge_seen[e] = 1;
      Vertex a = ear.vertices[k];
      Vertex b = ear.vertices[k + 1];
      CHECK(g.edge(e).u == std::min(a, b));
      CHECK(g.edge(e).v == std::max(a, b));
    }
    CHECK(vert_seen[ear.vertices.front()]);
    CHECK(vert_seen[ear.vertices.back()]);
    for (std::size_t k = 1; k + 1 < ear.vertices.size(); ++k) {
      REQUIRE(!vert_seen[ear.vertices[k]]);
      vert_seen[ear.vertices[k]] = 1;
    }
    // Prefix graph on the covered vertices, relabeled densely.
    for (int e : ear.edges) prefix.push_back(g.edge(e));
    std::vector<int> id(g.n(), -1);
    int k = 0;
    for (Vertex v = 0; v < g.n(); ++v)
      if (vert_seen[v]) id[v] = k++;
    std::vector<Edge> pes;
    for (const Edge& pe : prefix)
      pes.push_back({std::min(id[pe.u], id[pe.v]), std::max(id[pe.u], id[pe.v])});
    Graph pg(k, pes);
    CHECK(pg.connected());
    CHECK(oracle_bridges(pg).zero());
  }
  for (int e = 0; e < g.m(); ++e) CHECK(edge_seen[e]);
}

// "Cannot be separated by removing <= 2 edges" classes via the flow oracle.
VertexRelation flow_equiv(const Graph& g) {
  VertexRelation rel(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (oracle_three_edge_connected(g, u, v)) rel.relate(u, v);
  return rel;
}

// Unit-capacity undirected max flow between multigraph nodes, capped.
int mg_flow_capped(const MultiGraph& mg, int s, int t, int cap) {
  std::vector<int> flow(mg.edges.size(), 0);  // -1, 0, +1 along from->to
  int total = 0;
  while (total < cap) {
    std::vector<int> pre_edge(mg.n, -1);
    std::vector<int> pre_node(mg.n, -1);
    std::vector<char> vis(mg.n, 0);
    std::deque<int> q{s};
    vis[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < mg.edges.size(); ++i) {
        const MultiGraph::Edge& e = mg.edges[i];
        if (e.from == e.to) continue;
        int other = -1;
        if (e.from == v && flow[i] != 1)
          other = e.to;
        else if (e.to == v && flow[i] != -1)
          other = e.from;
        if (other < 0 || vis[other]) continue;
        vis[other] = 1;
        pre_edge[other] = static_cast<int>(i);
        pre_node[other] = v;
        q.push_back(other);
      }
    }
    if (!vis[t]) break;
    for (int v = t; v != s; v = pre_node[v])
      flow[pre_edge[v]] += mg.edges[pre_edge[v]].to == v ? 1 : -1;
    ++total;
  }
  return total;
}

bool mg_cactuslike_by_flow(const MultiGraph& mg) {
  for (int u = 0; u < mg.n; ++u)
    for (int v = u + 1; v < mg.n; ++v)
      if (mg_flow_capped(mg, u, v, 3) != 2) return false;
  return true;
}

MultiGraph identity_multigraph(const Graph& g) {
  return contract(g, VertexRelation(g.n()));
}

bool mg_connected(const MultiGraph& mg) {
  if (mg.n <= 0) return false;
  std::vector<char> vis(mg.n, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int seen = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const MultiGraph::Edge& e : mg.edges) {
      int other = e.from == v ? e.to : (e.to == v ? e.from : -1);
      if (other < 0 || vis[other]) continue;
      vis[other] = 1;
      ++seen;
      q.push_back(other);
    }
  }
  return seen == mg.n;
}

// Bridgeless connected test bag: the small catalogs plus named shapes and a
// few random graphs (kept only when bridgeless).
std::vector<Graph> bag_2ec() {
  std::vector<Graph> out;
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : connected_graph_catalog(n))
      if (oracle_bridges(g).zero()) out.push_back(g);
  out.push_back(gen_cycle(6));
  out.push_back(gen_theta(2, 2, 2));
  out.push_back(gen_theta(2, 3, 4));
  out.push_back(gen_theta(1, 2, 3));
  out.push_back(gen_bowtie());
  out.push_back(k4());
  out.push_back(four_theta());
  int kept = 0;
  for (std::uint64_t seed = 1; kept < 6 && seed < 60; ++seed) {
    Graph g = gen_random_connected(9 + static_cast<int>(seed % 4),
                                   16 + static_cast<int>(seed % 5), 7'000 + seed);
    if (oracle_bridges(g).zero()) {
      out.push_back(g);
      ++kept;
    }
  }
  return out;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& classes) {
  std::set<std::set<int>> out;
  for (const auto& c : classes) out.insert(std::set<int>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_CASE("ear decomposition: named shapes") {
  // Cycle: the whole graph is one closed ear.
  EarDecomposition c6 = ear_decomposition(gen_cycle(6));
  check_ear_validity(gen_cycle(6), c6);
  REQUIRE(c6.ears.size() == 1);
  CHECK(c6.ears[0].closed());
  CHECK(c6.ears[0].edges.size() == 6);

  // Theta: one closed ear through two paths, one open ear for the third.
  Graph th = gen_theta(2, 2, 2);
  EarDecomposition td = ear_decomposition(th);
  check_ear_validity(th, td);
  REQUIRE(td.ears.size() == 2);
  CHECK(td.ears[0].closed());
  CHECK(td.ears[0].edges.size() == 4);
  CHECK(!td.ears[1].closed());
  CHECK(td.ears[1].edges.size() == 2);

  // K4: a triangle plus two open ears, six edges total.
  EarDecomposition kd = ear_decomposition(k4());
  check_ear_validity(k4(), kd);
  REQUIRE(kd.ears.size() == 3);
  int closed = 0, total = 0;
  std::multiset<std::size_t> open_sizes;
  for (const Ear& ear : kd.ears) {
    total += static_cast<int>(ear.edges.size());
    if (ear.closed())
      ++closed;
    else
      open_sizes.insert(ear.edges.size());
  }
  CHECK(closed == 1);
  CHECK(kd.ears[0].closed());
  CHECK(total == 6);
  CHECK(open_sizes == std::multiset<std::size_t>{1, 2});
}

TEST_CASE("ear decomposition: valid on every bridgeless graph in the bag") {
  for (const Graph& g : bag_2ec()) {
    EarDecomposition dec = ear_decomposition(g);
    check_ear_validity(g, dec);
  }
}

TEST_CASE("ear decomposition: bridges and disconnection are errors") {
  CHECK_THROWS_AS(ear_decomposition(gen_path(4)), std::invalid_argument);
  CHECK_THROWS_AS(ear_decomposition(gen_barbell()), std::invalid_argument);
  // Two disjoint triangles: disconnected even though each part is fine.
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(ear_decomposition(two), std::invalid_argument);
  CHECK_THROWS_AS(ear_decomposition(Graph()), std::invalid_argument);
}

TEST_CASE("pinch relation: formula on synthetic ears") {
  // Closed ear v0..v4 = 10,11,12,13,10 with edges 100..103.
  Ear closed{{10, 11, 12, 13, 10}, {100, 101, 102, 103}};

  // A single edge pinches its own endpoints (a loop after contraction).
  auto single = pinch_relation(closed, {101});
  REQUIRE(single.size() == 1);
  CHECK(std::minmax(single[0].first, single[0].second) == std::minmax(12, 11));

  // U = {e1, e3} gives {v1, v2} and {v3, v0}.
  auto two = pinch_relation(closed, {100, 102});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::pair<Vertex, Vertex>(11, 12));
  CHECK(two[1] == std::pair<Vertex, Vertex>(13, 10));

  // Same subset positions on an open ear.
  Ear open{{5, 6, 7, 8, 9}, {1, 2, 3, 4}};
  auto po = pinch_relation(open, {1, 3});
  REQUIRE(po.size() == 2);
  CHECK(po[0] == std::pair<Vertex, Vertex>(6, 7));
  CHECK(po[1] == std::pair<Vertex, Vertex>(8, 5));

  // Input order must not matter.
  CHECK(pinch_relation(open, {3, 1}) == po);

  CHECK_THROWS_AS(pinch_relation(open, {}), std::invalid_argument);
  CHECK_THROWS_AS(pinch_relation(open, {99}), std::invalid_argument);
  CHECK_THROWS_AS(pinch_relation(open, {1, 1}), std::invalid_argument);
}

TEST_CASE("pinching a whole cut class yields a cycle in the contraction") {
  // Theta paths {0,1}, {2,3}, {4,5}; pinching one class must relate the two
  // hubs (the class's edges then form a 2-cycle).
  Graph th = gen_theta(2, 2, 2);
  EarDecomposition dec = ear_decomposition(th);
  std::vector<int> ear_of(th.m(), -1);
  for (std::size_t i = 0; i < dec.ears.size(); ++i)
    for (int e : dec.ears[i].edges) ear_of[e] = static_cast<int>(i);
  for (const auto& cls : oracle_cut_classes(th)) {
    VertexRelation rel(th.n());
    for (auto [a, b] : pinch_relation(dec.ears[ear_of[cls[0]]], cls)) rel.relate(a, b);
    MultiGraph mg = contract(th, rel);
    // Exactly the hubs merge, which closes the pinched 2-path into a pair of
    // parallel edges through its midpoint.
    CHECK(mg.node_of[0] == mg.node_of[1]);
    CHECK(mg.n == th.n() - 1);
    const auto& e0 = mg.edges[cls[0]];
    const auto& e1 = mg.edges[cls[1]];
    CHECK(std::minmax(e0.from, e0.to) == std::minmax(e1.from, e1.to));
    CHECK(e0.from != e0.to);
  }
}

TEST_CASE("vertex relation: smallest representative, recorded pairs") {
  VertexRelation rel(6);
  rel.relate(4, 2);
  rel.relate(5, 4);
  CHECK(rel.find(5) == 2);
  CHECK(rel.find(2) == 2);
  CHECK(rel.find(0) == 0);
  rel.relate(0, 5);
  CHECK(rel.find(4) == 0);
  CHECK(rel.pairs().size() == 3);
  CHECK(rel.labels() == std::vector<Vertex>{0, 1, 0, 3, 0, 0});
  CHECK_THROWS_AS(rel.relate(0, 6), std::invalid_argument);
}

TEST_CASE("contract: identity and full collapse") {
  Graph g = gen_theta(2, 3, 4);
  MultiGraph id = identity_multigraph(g);
  CHECK(id.n == g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    CHECK(id.node_of[v] == v);
    CHECK(id.members[v] == std::vector<Vertex>{v});
  }
  REQUIRE(static_cast<int>(id.edges.size()) == g.m());
  for (int e = 0; e < g.m(); ++e) {
    CHECK(id.edges[e].orig == e);
    CHECK(id.edges[e].from == g.edge(e).u);
    CHECK(id.edges[e].to == g.edge(e).v);
  }

  VertexRelation all(g.n());
  for (Vertex v = 1; v < g.n(); ++v) all.relate(0, v);
  MultiGraph one = contract(g, all);
  CHECK(one.n == 1);
  CHECK(static_cast<int>(one.members[0].size()) == g.n());
  for (const MultiGraph::Edge& e : one.edges) CHECK(e.from == e.to);
  CHECK(is_cactuslike(one));  // a bouquet of loops has no node pairs at all

  CHECK_THROWS_AS(contract(g, VertexRelation(3)), std::invalid_argument);
}

TEST_CASE("flow relation on theta: hubs together, midpoints alone") {
  Graph th = gen_theta(2, 2, 2);
  CHECK(flow_equiv(th).labels() == std::vector<Vertex>{0, 0, 2, 3, 4});
  MultiGraph ca = contract(th, flow_equiv(th));
  CHECK(ca.n == 4);
  CHECK(is_cactuslike(ca));
  auto dec = multigraph_ears(ca);
  REQUIRE(dec.has_value());
  CHECK(dec->ears.size() == 3);
  for (const Ear& ear : dec->ears) {
    CHECK(ear.closed());
    CHECK(ear.edges.size() == 2);
  }
}

TEST_CASE("is_cactuslike: named examples") {
  MultiGraph loop;
  loop.n = 1;
  loop.members = {{0}};
  loop.node_of = {0};
  loop.edges = {{0, 0, 0}};
  CHECK(is_cactuslike(loop));

  CHECK(is_cactuslike(identity_multigraph(gen_cycle(5))));
  CHECK(is_cactuslike(identity_multigraph(gen_bowtie())));
  CHECK(!is_cactuslike(identity_multigraph(k4())));
  CHECK(!is_cactuslike(identity_multigraph(gen_theta(2, 2, 2))));
  Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(!is_cactuslike(identity_multigraph(diamond)));
  CHECK(!is_cactuslike(identity_multigraph(gen_path(3))));  // bridges

  MultiGraph empty;
  CHECK_THROWS_AS(is_cactuslike(empty), std::invalid_argument);
  MultiGraph disc;
  disc.n = 2;
  disc.members = {{0}, {1}};
  disc.node_of = {0, 1};
  CHECK_THROWS_AS(is_cactuslike(disc), std::invalid_argument);
}

TEST_CASE("is_cactuslike agrees with pairwise flow on random multigraphs") {
  std::mt19937 r(20260814);
  int checked = 0;
  while (checked < 300) {
    int n = 1 + static_cast<int>(r() % 5);
    int m = static_cast<int>(r() % (2 * n + 2));
    MultiGraph mg;
    mg.n = n;
    mg.members.resize(n);
    mg.node_of.resize(n);
    for (int v = 0; v < n; ++v) {
      mg.members[v] = {v};
      mg.node_of[v] = v;
    }
    for (int i = 0; i < m; ++i)
      mg.edges.push_back({i, static_cast<int>(r() % n), static_cast<int>(r() % n)});
    if (!mg_connected(mg)) continue;
    ++checked;
    CHECK(is_cactuslike(mg) == mg_cactuslike_by_flow(mg));
  }
}

TEST_CASE("every cut class lies inside a single ear") {
  for (const Graph& g : bag_2ec()) {
    EarDecomposition dec = ear_decomposition(g);
    std::vector<int> ear_of(g.m(), -1);
    for (std::size_t i = 0; i < dec.ears.size(); ++i)
      for (int e : dec.ears[i].edges) ear_of[e] = static_cast<int>(i);
    for (const auto& cls : oracle_cut_classes(g))
      for (int e : cls) CHECK(ear_of[e] == ear_of[cls[0]]);
  }
}

TEST_CASE("pinching the true cut classes reproduces the flow relation") {
  // Edges in no multi-edge class count as singleton classes and pinch their
  // own endpoints (they become loops in the cactus).
  for (const Graph& g : bag_2ec()) {
    EarDecomposition dec = ear_decomposition(g);
    std::vector<int> ear_of(g.m(), -1);
    for (std::size_t i = 0; i < dec.ears.size(); ++i)
      for (int e : dec.ears[i].edges) ear_of[e] = static_cast<int>(i);
    VertexRelation rel(g.n());
    std::vector<char> in_class(g.m(), 0);
    for (const auto& cls : oracle_cut_classes(g)) {
      for (int e : cls) in_class[e] = 1;
      for (auto [a, b] : pinch_relation(dec.ears[ear_of[cls[0]]], cls)) rel.relate(a, b);
    }
    for (int e = 0; e < g.m(); ++e)
      if (!in_class[e]) rel.relate(g.edge(e).u, g.edge(e).v);
    CHECK(rel.labels() == flow_equiv(g).labels());
  }
}

TEST_CASE("contraction by the flow relation is always a cactus") {
  for (const Graph& g : bag_2ec()) {
    MultiGraph ca = contract(g, flow_equiv(g));
    CHECK(is_cactuslike(ca));
    // Its multi-edge cycles are exactly the cut classes.
    auto dec = multigraph_ears(ca);
    REQUIRE(dec.has_value());
    std::set<std::set<int>> cycles;
    for (const Ear& ear : dec->ears) {
      CHECK(ear.closed());
      if (ear.edges.size() >= 2)
        cycles.insert(std::set<int>(ear.edges.begin(), ear.edges.end()));
    }
    CHECK(cycles == as_sets(oracle_cut_classes(g)));
  }
}

TEST_CASE("certify: named examples") {
  Prng rng(41);
  Graph c6 = gen_cycle(6);
  BitCirculation phi =
      random_circulation(c6, bfs_tree(c6, 0), bits_for_cut_classes(c6), rng);
  CactusCertificate cert = certify_cut_classes(c6, phi);
  REQUIRE(cert.accepted);
  REQUIRE(cert.classes.classes.size() == 1);
  CHECK(cert.classes.classes[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  // A cycle is already its own cactus: pinching the one class along the one
  // closed ear relates nothing new.
  CHECK(cert.cactus.n == 6);
  CHECK(cert.relation.labels() == flow_equiv(c6).labels());

  Graph th = gen_theta(2, 2, 2);
  BitCirculation tphi =
      random_circulation(th, bfs_tree(th, 0), bits_for_cut_classes(th), rng);
  CactusCertificate tc = certify_cut_classes(th, tphi);
  REQUIRE(tc.accepted);
  CHECK(as_sets(tc.classes.classes) == as_sets(oracle_cut_classes(th)));
  CHECK(tc.relation.labels() == flow_equiv(th).labels());
}

TEST_CASE("certify: rejects a circulation that merges two classes") {
  // Path values a1 = a2 = 1, a3 = 0 keep every vertex XOR-balanced but make
  // the first two classes indistinguishable. The quotient is still a cactus,
  // so the rejection must come from the equal-value pair check.
  Graph th = gen_theta(2, 2, 2);
  BitCirculation phi;
  phi.bits = 1;
  phi.value.assign(6, BitVec(1));
  for (int e : {0, 1, 2, 3}) phi.value[e].set(0, true);
  REQUIRE(is_bit_circulation(th, phi));
  CactusCertificate cert = certify_cut_classes(th, phi);
  CHECK(!cert.accepted);
  CHECK(is_cactuslike(cert.cactus));
}

TEST_CASE("certify: keeps a zero-valued class when the quotient vouches for it") {
  // Paths get values 0, 1, 2, 3 (XOR zero at the hubs): the zero-valued pair
  // is a genuine cut class and must not be dropped.
  Graph g = four_theta();
  BitCirculation phi;
  phi.bits = 2;
  for (int i = 0; i < 4; ++i) {
    phi.value.push_back(BitVec::from_u64(2, static_cast<std::uint64_t>(i)));
    phi.value.push_back(BitVec::from_u64(2, static_cast<std::uint64_t>(i)));
  }
  REQUIRE(is_bit_circulation(g, phi));
  CactusCertificate cert = certify_cut_classes(g, phi);
  REQUIRE(cert.accepted);
  CHECK(as_sets(cert.classes.classes) == as_sets(oracle_cut_classes(g)));
  CHECK(cert.classes.class_value[0].zero());
}

TEST_CASE("certify: never accepts a non-circulation") {
  Prng rng(99);
  for (const Graph& g : {gen_theta(2, 3, 4), gen_bowtie()}) {
    for (int trial = 0; trial < 20; ++trial) {
      BitCirculation phi =
          random_circulation(g, bfs_tree(g, 0), bits_for_cut_classes(g), rng);
      int e = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.m())));
      int bit = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(phi.bits)));
      phi.value[e].set(bit, !phi.value[e].test(bit));
      CHECK(!certify_cut_classes(g, phi).accepted);
    }
  }
}

TEST_CASE("certify: accepted answers match the oracle across the bag") {
  int accepted = 0;
  int total = 0;
  std::uint64_t seed = 500;
  for (const Graph& g : bag_2ec()) {
    if (g.n() < 2) continue;
    for (int trial = 0; trial < 3; ++trial) {
      Prng rng(++seed);
      BitCirculation phi =
          random_circulation(g, bfs_tree(g, 0), bits_for_cut_classes(g), rng);
      CactusCertificate cert = certify_cut_classes(g, phi);
      ++total;
      if (!cert.accepted) continue;
      ++accepted;
      CHECK(as_sets(cert.classes.classes) == as_sets(oracle_cut_classes(g)));
      CHECK(is_cactuslike(cert.cactus));
      CHECK(cert.relation.labels() == flow_equiv(g).labels());
      for (std::size_t i = 0; i < cert.classes.classes.size(); ++i)
        for (int e : cert.classes.classes[i]) CHECK(cert.classes.class_of[e] == static_cast<int>(i));
    }
  }
  // Collisions at the cut-class width are rare; most runs must accept.
  CHECK(accepted * 4 >= total * 3);
}

TEST_CASE("certify: malformed phi is an error, bridges violate the precondition") {
  Graph th = gen_theta(2, 2, 2);
  BitCirculation phi;
  phi.bits = 2;
  phi.value.assign(6, BitVec(2));
  phi.value[3] = BitVec(3);
  CHECK_THROWS_AS(certify_cut_classes(th, phi), std::invalid_argument);
  BitCirculation shorter;
  shorter.bits = 2;
  shorter.value.assign(5, BitVec(2));
  CHECK_THROWS_AS(certify_cut_classes(th, shorter), std::invalid_argument);
  BitCirculation pphi;
  pphi.bits = 1;
  pphi.value.assign(3, BitVec(1));
  CHECK_THROWS_AS(certify_cut_classes(gen_path(4), pphi), std::invalid_argument);
}
