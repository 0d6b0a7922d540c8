#include "smallcut/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace smallcut {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw GraphError(GraphError::kMalformed, "negative vertex count");
  std::set<std::pair<Vertex, Vertex>> seen;
  edges_.reserve(edges.size());
  adj_.assign(n_, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw GraphError(GraphError::kLoop,
                       "loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw GraphError(GraphError::kBadVertex,
                       "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint outside [0," + std::to_string(n_) + ")");
    if (!seen.insert({e.u, e.v}).second)
      throw GraphError(GraphError::kDuplicateEdge,
                       "duplicate edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "}");
    int idx = static_cast<int>(edges_.size());
    edges_.push_back(e);
    adj_[e.u].push_back({e.v, idx});
    adj_[e.v].push_back({e.u, idx});
  }
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream in(s);
  std::string rest;
  if (!(in >> a >> b)) return false;
  if (in >> rest) return false;
  return true;
}

}  // namespace

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = clean_line(line);
    if (s.empty()) continue;
    long long a, b;
    if (!parse_two_ints(s, a, b))
      throw GraphError(GraphError::kMalformed,
                       "line " + std::to_string(line_no) + ": expected two integers, got \"" +
                           s + "\"");
    if (!have_header) {
      if (a < 0 || b < 0)
        throw GraphError(GraphError::kMalformed, "negative header counts");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw GraphError(GraphError::kCountMismatch,
                       "more than the declared " + std::to_string(m) + " edges");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header)
    throw GraphError(GraphError::kMalformed, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw GraphError(GraphError::kCountMismatch,
                     "declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << m() << '\n';
  for (const Edge& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::find_edge(Vertex u, Vertex v) const {
  for (const Adjacency& a : adj_[u])
    if (a.to == v) return a.edge;
  return -1;
}

std::vector<Vertex> Graph::component_labels_without(const EdgeSet& removed) const {
  std::vector<Vertex> label(n_, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = s;  // s is the smallest vertex in its component
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Adjacency& a : adj_[v]) {
        if (removed.width() > 0 && removed.test(a.edge)) continue;
        if (label[a.to] == -1) {
          label[a.to] = s;
          stack.push_back(a.to);
        }
      }
    }
  }
  return label;
}

std::vector<Vertex> Graph::component_labels() const {
  return component_labels_without(EdgeSet());
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  auto label = component_labels();
  for (Vertex v = 0; v < n_; ++v)
    if (label[v] != 0) return false;
  return true;
}

EdgeSet Graph::induced_cut(const std::vector<char>& in_s) const {
  EdgeSet cut(m());
  for (int i = 0; i < m(); ++i)
    if (in_s[edges_[i].u] != in_s[edges_[i].v]) cut.set(i, true);
  return cut;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<char>& keep) {
  Subgraph out;
  std::vector<Vertex> new_id(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (keep[v]) {
      new_id[v] = static_cast<Vertex>(out.vertex_of.size());
      out.vertex_of.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    if (keep[e.u] && keep[e.v]) {
      edges.push_back({new_id[e.u], new_id[e.v]});
      out.edge_of.push_back(i);
    }
  }
  out.graph = Graph(static_cast<int>(out.vertex_of.size()), std::move(edges));
  return out;
}

}  // namespace smallcut
