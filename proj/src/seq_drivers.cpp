#include "smallcut/seq_drivers.hpp"

#include <algorithm>
#include <utility>

#include "smallcut/cactus.hpp"
#include "smallcut/circulation.hpp"
#include "smallcut/tree.hpp"

namespace smallcut {

SeqEdgesLv cut_edges_lv(const Graph& g, std::uint64_t seed, int max_attempts) {
  SeqEdgesLv out;
  out.edges = g.empty_edge_set();
  if (g.m() == 0) {
    out.verified = true;
    return out;
  }
  RootedTree t = bfs_tree(g, 0);
  annotate(t, g);
  int bits = std::max(1, bits_for_cut_edges(g));
  for (int a = 0; a < max_attempts; ++a) {
    out.attempts = a + 1;
    Prng rng(Prng::mix(seed, static_cast<std::uint64_t>(a)));
    EdgeSet cand = cut_edges_from(random_circulation(g, t, bits, rng));
    if (verify_cut_edges_seq(g, t, cand)) {
      out.verified = true;
      out.edges = std::move(cand);
      return out;
    }
  }
  return out;
}

SeqPairsLv cut_pairs_lv(const Graph& g, std::uint64_t seed, int max_attempts) {
  SeqPairsLv out;
  out.classes.class_of.assign(g.m(), -1);
  if (g.m() == 0) {
    out.verified = true;
    return out;
  }

  SeqEdgesLv bridges = cut_edges_lv(g, Prng::mix(seed, 1), max_attempts);
  out.attempts = bridges.attempts;
  if (!bridges.verified) return out;

  // One width for every component so the per-attempt failure odds track the
  // whole graph, not the smallest piece.
  int bits = std::max(1, bits_for_cut_classes(g));

  std::vector<Vertex> label = two_ecc_labels(g, bridges.edges);
  std::vector<Vertex> heads(label);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());

  struct Found {
    std::vector<int> edges;  // global ids, ascending
    BitVec value;
  };
  std::vector<Found> found;

  for (Vertex head : heads) {
    std::vector<char> keep(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) keep[v] = label[v] == head;
    Subgraph sub = induced_subgraph(g, keep);
    if (sub.graph.m() == 0) continue;  // lone vertex between bridges

    bool accepted = false;
    RootedTree t = bfs_tree(sub.graph, 0);
    std::uint64_t comp_seed = Prng::mix(seed, 2 + static_cast<std::uint64_t>(head));
    for (int a = 0; a < max_attempts; ++a) {
      out.attempts = std::max(out.attempts, a + 1);
      Prng rng(Prng::mix(comp_seed, static_cast<std::uint64_t>(a)));
      BitCirculation phi = random_circulation(sub.graph, t, bits, rng);
      CactusCertificate cert = certify_cut_classes(sub.graph, phi);
      if (!cert.accepted) continue;
      for (std::size_t c = 0; c < cert.classes.classes.size(); ++c) {
        Found f;
        f.edges.reserve(cert.classes.classes[c].size());
        for (int e : cert.classes.classes[c]) f.edges.push_back(sub.edge_of[e]);
        std::sort(f.edges.begin(), f.edges.end());
        f.value = cert.classes.class_value[c];
        found.push_back(std::move(f));
      }
      accepted = true;
      break;
    }
    if (!accepted) return out;
  }

  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.edges.front() < b.edges.front(); });
  for (std::size_t c = 0; c < found.size(); ++c) {
    for (int e : found[c].edges) out.classes.class_of[e] = static_cast<int>(c);
    out.classes.classes.push_back(std::move(found[c].edges));
    out.classes.class_value.push_back(std::move(found[c].value));
  }
  out.verified = true;
  return out;
}

SeqVerticesLv cut_vertices_lv(const Graph& g, std::uint64_t seed, int max_attempts) {
  SeqVerticesLv out;
  out.flags.assign(g.n(), 0);
  out.block_labels.assign(g.m(), -1);
  if (g.m() == 0) {
    out.verified = true;
    return out;
  }
  RootedTree t = bfs_tree(g, 0);
  annotate(t, g);
  int bits = std::max(1, bits_for_cut_vertices(g));
  for (int a = 0; a < max_attempts; ++a) {
    out.attempts = a + 1;
    Prng rng(Prng::mix(seed, static_cast<std::uint64_t>(a)));
    BitCirculation phi = random_circulation(g, t, bits, rng);
    BlockVerdict verdict = verify_blocks_seq(g, t, phi);
    if (!verdict.accepted) continue;
    out.verified = true;
    out.flags = std::move(verdict.cut_vertex);
    out.block_labels = std::move(verdict.label);
    return out;
  }
  return out;
}

CutReport seq_cut_report(const Graph& g, std::uint64_t seed, bool las_vegas,
                         int max_attempts) {
  CutReport r;
  r.n = g.n();
  r.m = g.m();

  EdgeSet cut_edges = g.empty_edge_set();
  CutClasses classes;
  classes.class_of.assign(g.m(), -1);
  std::vector<char> flags(g.n(), 0);
  std::vector<int> blocks(g.m(), -1);

  if (las_vegas) {
    SeqEdgesLv e = cut_edges_lv(g, Prng::mix(seed, 11), max_attempts);
    SeqPairsLv p = cut_pairs_lv(g, Prng::mix(seed, 22), max_attempts);
    SeqVerticesLv v = cut_vertices_lv(g, Prng::mix(seed, 33), max_attempts);
    r.verified = e.verified && p.verified && v.verified;
    cut_edges = std::move(e.edges);
    classes = std::move(p.classes);
    flags = std::move(v.flags);
    blocks = std::move(v.block_labels);
  } else if (g.m() > 0) {
    Prng erng(Prng::mix(seed, 11));
    cut_edges = cut_edges_mc(g, erng);
    Prng prng(Prng::mix(seed, 22));
    classes = cut_classes_mc(g, prng);
    RootedTree t = bfs_tree(g, 0);
    Prng vrng(Prng::mix(seed, 33));
    BitCirculation phi =
        random_circulation(g, t, std::max(1, bits_for_cut_vertices(g)), vrng);
    flags = cut_vertex_flags_from(g, phi);
    blocks = block_labels_from(g, phi).label;
  }

  r.cut_edges = cut_edges.set_bits();
  r.cut_classes = classes.classes;
  for (const BitVec& v : classes.class_value) r.class_values.push_back(v.str());
  for (Vertex v = 0; v < g.n(); ++v)
    if (flags[v]) r.cut_vertices.push_back(v);
  r.block_labels = std::move(blocks);

  EdgeSet pair_edges = g.empty_edge_set();
  for (const auto& cls : r.cut_classes)
    for (int e : cls) pair_edges.set(e, true);
  std::vector<Vertex> two = two_ecc_labels(g, cut_edges);
  r.two_ecc.assign(two.begin(), two.end());
  std::vector<Vertex> three = three_ecc_labels(g, cut_edges, pair_edges);
  r.three_ecc.assign(three.begin(), three.end());
  return r;
}

}  // namespace smallcut
