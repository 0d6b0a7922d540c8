#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcut/circulation.hpp"
#include "smallcut/graph.hpp"
#include "smallcut/seq_cuts.hpp"

namespace smallcut {

// Contraction machinery and the deterministic cut-class certifier.
//
// Contracting a graph by a vertex relation keeps one edge per original edge,
// so loops and parallel edges appear. The certifier pinches together the
// endpoints suggested by equal phi values, checks that the quotient is a
// cactus (every edge on exactly one simple cycle), and then checks that every
// equal-value pair really is a cut pair of the quotient. On accept the
// quotient *is* the cactus of the input and the value groups are exactly the
// cut classes; on reject the caller should resample phi.

// Quotient graph. Nodes are classes of original vertices; edges correspond
// one-to-one with the source graph's edges (edges[i].orig == source edge i),
// with loops (from == to) and parallel edges preserved.
struct MultiGraph {
  struct Edge {
    int orig = 0;  // edge index in the source graph
    int from = 0;  // node ids in this multigraph
    int to = 0;
  };
  int n = 0;
  std::vector<std::vector<Vertex>> members;  // per node, ascending source ids
  std::vector<int> node_of;                  // per source vertex
  std::vector<Edge> edges;
};

// One ear: vertices v0, e1, v1, ..., ez, vz in walk order. Closed means
// v0 == vz; a loop is a closed ear of length 1. Vertex and edge ids refer to
// the host graph the decomposition was computed on.
struct Ear {
  std::vector<Vertex> vertices;  // z + 1 entries, endpoints repeated if closed
  std::vector<int> edges;        // z entries
  bool closed() const { return vertices.front() == vertices.back(); }
};

// G0 is the single vertex `base`; ear i extends the union of the previous
// ears by a path (or cycle) whose endpoints already appear but whose interior
// is new. The first ear is always closed.
struct EarDecomposition {
  Vertex base = 0;
  std::vector<Ear> ears;
};

// Union-find over vertices 0..n-1 with the generating pairs kept around.
// Representative of a class == its smallest member.
class VertexRelation {
 public:
  VertexRelation() = default;
  explicit VertexRelation(int n) : parent_(n) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int n() const { return static_cast<int>(parent_.size()); }
  void relate(Vertex a, Vertex b);
  Vertex find(Vertex v) const;
  // Per vertex, the smallest member of its class.
  std::vector<Vertex> labels() const;
  const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }

 private:
  mutable std::vector<Vertex> parent_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

// Chain-style ear decomposition off a depth-first tree: one ear per non-tree
// edge, opened at the endpoint discovered first, in discovery order. Throws
// std::invalid_argument if g is disconnected or has a bridge (no ear
// decomposition exists then).
EarDecomposition ear_decomposition(const Graph& g);

// Same construction on a multigraph; loops become length-1 closed ears.
// Returns nullopt if some edge ends up in no ear (i.e. the multigraph has a
// bridge). Throws std::invalid_argument if disconnected or empty.
std::optional<EarDecomposition> multigraph_ears(const MultiGraph& mg);

// The pinch relation R_U for a subset U of one ear's edges (host edge ids).
// With U = {e_j(1), ..., e_j(t)}, j(1) < ... < j(t), the pairs are
// {v_j(x), v_j(x+1)-1} for x < t plus the wrap {v_j(t), v_j(1)-1}; in the
// pinched ear U forms a simple cycle (a single edge becomes a loop). Throws
// std::invalid_argument if U is empty, has duplicates, or leaves the ear.
std::vector<std::pair<Vertex, Vertex>> pinch_relation(const Ear& ear,
                                                      const std::vector<int>& u);

// Pinches, per ear, every maximal group of edges with equal phi value --
// singleton groups included (their edges become loops in the quotient) --
// and returns the transitive closure over all ears.
VertexRelation equiv_prime(const Graph& g, const EarDecomposition& dec,
                           const BitCirculation& phi);

// g / rel: one node per relation class, one edge per edge of g.
MultiGraph contract(const Graph& g, const VertexRelation& rel);

// True iff every pair of nodes has edge connectivity exactly 2; equivalently
// every ear of any ear decomposition is closed, equivalently every edge lies
// on exactly one simple cycle. Throws std::invalid_argument if disconnected.
bool is_cactuslike(const MultiGraph& mg);

struct CactusCertificate {
  bool accepted = false;
  CutClasses classes;    // meaningful only when accepted: exactly the cut classes
  MultiGraph cactus;     // the quotient g / equiv_prime (== the cactus on accept)
  VertexRelation relation;
};

// Deterministic certifier. Precondition: g is 2-edge-connected (bridges make
// ear_decomposition throw). Rejects -- never accepts wrongly -- when
//   * phi is not a circulation (adversarial or corrupted values),
//   * the quotient by equiv_prime is not cactuslike, or
//   * some equal-value pair is not a cut pair of the quotient.
// On accept, classes are the equal-value groups of size >= 2, which the
// checks above prove to be precisely the cut classes of g; zero-valued
// groups are kept (unlike cut_classes_from) because the pair check vouches
// for them. Throws std::invalid_argument on malformed phi (wrong length or
// mixed widths).
CactusCertificate certify_cut_classes(const Graph& g, const BitCirculation& phi);

}  // namespace smallcut
