#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smallcut/bits.hpp"

namespace smallcut {

using Vertex = int;

// Undirected simple edge; stored with u < v. Edges keep the index order of
// the input file (or generator), and that index is the edge's identity
// everywhere: EdgeSet bits, circulation values, reports.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const Edge&) const = default;
};

struct Adjacency {
  Vertex to;
  int edge;
};

struct GraphError : std::runtime_error {
  enum Kind {
    kMalformed,      // unparsable header or edge line
    kLoop,           // u == v
    kDuplicateEdge,  // same unordered pair twice
    kBadVertex,      // endpoint outside [0, n)
    kCountMismatch,  // body does not match the declared m
  };
  GraphError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  // Text format: first non-comment line "n m", then m lines "u v".
  // '#' starts a comment; blank lines are skipped.
  static Graph parse(const std::string& text);
  std::string to_text() const;

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Adjacency>& adj(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  Vertex other(int edge, Vertex v) const {
    const Edge& e = edges_[edge];
    return e.u == v ? e.v : e.u;
  }

  // -1 if no such edge.
  int find_edge(Vertex u, Vertex v) const;

  bool connected() const;
  // Component id per vertex: the smallest vertex in the component.
  std::vector<Vertex> component_labels() const;
  // Same, but some edges are removed first.
  std::vector<Vertex> component_labels_without(const EdgeSet& removed) const;

  EdgeSet empty_edge_set() const { return EdgeSet(m()); }
  // delta(S): edges with exactly one endpoint in S.
  EdgeSet induced_cut(const std::vector<char>& in_s) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adjacency>> adj_;
};

// Extracts the subgraph on the vertices with keep[v] != 0, relabeling
// vertices to 0..k-1 in increasing original order. Only edges with both
// endpoints kept survive. Maps back: vertex_of[new] = old, edge_of[new] = old.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_of;
  std::vector<int> edge_of;
};
Subgraph induced_subgraph(const Graph& g, const std::vector<char>& keep);

}  // namespace smallcut
