#include <algorithm>

#include "doctest.h"
#include "smallcut/graph.hpp"

using namespace smallcut;

TEST_CASE("graph parse and to_text round-trip") {
  std::string text = "# triangle plus pendant\n4 4\n0 1\n1 2\n2 0\n2 3\n";
  Graph g = Graph::parse(text);
  CHECK(g.n() == 4);
  CHECK(g.m() == 4);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(2).u == 0);  // stored with u < v
  CHECK(g.edge(2).v == 2);
  Graph h = Graph::parse(g.to_text());
  CHECK(h.to_text() == g.to_text());
}

TEST_CASE("graph parse rejects malformed input") {
  CHECK_THROWS_AS(Graph::parse("2 1\n0 0\n"), GraphError);        // loop
  CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n1 0\n"), GraphError);   // duplicate
  CHECK_THROWS_AS(Graph::parse("2 1\n0 5\n"), GraphError);        // bad vertex
  CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n"), GraphError);        // missing edge
  CHECK_THROWS_AS(Graph::parse("nonsense\n"), GraphError);
  try {
    Graph::parse("3 2\n0 1\n1 1\n");
    CHECK(false);
  } catch (const GraphError& e) {
    CHECK(e.kind == GraphError::kLoop);
  }
}

TEST_CASE("adjacency lists follow edge insertion order") {
  Graph g(4, {{1, 3}, {0, 1}, {1, 2}});
  const auto& a = g.adj(1);
  REQUIRE(a.size() == 3);
  CHECK(a[0].to == 3);
  CHECK(a[0].edge == 0);
  CHECK(a[1].to == 0);
  CHECK(a[1].edge == 1);
  CHECK(a[2].to == 2);
  CHECK(a[2].edge == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.max_degree() == 3);
  CHECK(g.other(0, 1) == 3);
  CHECK(g.find_edge(3, 1) == 0);
  CHECK(g.find_edge(0, 2) == -1);
}

TEST_CASE("components and connectivity") {
  Graph g(5, {{0, 1}, {3, 4}});
  CHECK(!g.connected());
  auto labels = g.component_labels();
  CHECK(labels == std::vector<Vertex>{0, 0, 2, 3, 3});

  Graph h(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(h.connected());
  EdgeSet removed(3);
  removed.set(0, true);
  removed.set(2, true);
  auto after = h.component_labels_without(removed);
  CHECK(after == std::vector<Vertex>{0, 1, 1});
}

TEST_CASE("induced cut of a vertex set") {
  // Square 0-1-2-3 with one diagonal.
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  std::vector<char> s{1, 1, 0, 0};
  EdgeSet cut = g.induced_cut(s);
  CHECK(cut.set_bits() == std::vector<int>{1, 3, 4});
}

TEST_CASE("induced subgraph relabels and maps back") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
  std::vector<char> keep{0, 1, 1, 1, 0};
  Subgraph s = induced_subgraph(g, keep);
  CHECK(s.graph.n() == 3);
  CHECK(s.graph.m() == 3);  // 1-2, 2-3, 1-3 survive
  CHECK(s.vertex_of == std::vector<Vertex>{1, 2, 3});
  for (int e = 0; e < s.graph.m(); ++e) {
    Edge se = s.graph.edge(e);
    Edge oe = g.edge(s.edge_of[e]);
    CHECK(s.vertex_of[se.u] == oe.u);
    CHECK(s.vertex_of[se.v] == oe.v);
  }
}
