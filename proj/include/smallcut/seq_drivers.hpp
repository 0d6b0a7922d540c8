#pragma once

#include <cstdint>
#include <vector>

#include "smallcut/graph.hpp"
#include "smallcut/report.hpp"
#include "smallcut/seq_cuts.hpp"

namespace smallcut {

// Las Vegas wrappers: rerun the Monte Carlo samplers with fresh randomness,
// attempt by attempt, until a deterministic verifier accepts. On success the
// answer is exact; if every attempt is rejected (probability <= n^-attempts,
// roughly) the result is returned with verified == false and must not be
// trusted. `seed` fully determines the attempt sequence.

struct SeqEdgesLv {
  bool verified = false;
  int attempts = 0;
  EdgeSet edges;
};
SeqEdgesLv cut_edges_lv(const Graph& g, std::uint64_t seed, int max_attempts = 64);

struct SeqPairsLv {
  bool verified = false;
  int attempts = 0;  // largest attempt count over the internal stages
  CutClasses classes;
};
// Certifies per 2-edge-connected component (a cut pair never crosses a
// bridge, so the classes of the whole graph are the classes of its
// components). classes is empty unless verified.
SeqPairsLv cut_pairs_lv(const Graph& g, std::uint64_t seed, int max_attempts = 64);

struct SeqVerticesLv {
  bool verified = false;
  int attempts = 0;
  std::vector<char> flags;        // per vertex
  std::vector<int> block_labels;  // per edge, dense by smallest member edge
};
SeqVerticesLv cut_vertices_lv(const Graph& g, std::uint64_t seed, int max_attempts = 64);

// Full report at one seed. las_vegas == false runs the plain Monte Carlo
// algorithms instead (verified stays false, answers are whp-correct only).
CutReport seq_cut_report(const Graph& g, std::uint64_t seed, bool las_vegas = true,
                         int max_attempts = 64);

}  // namespace smallcut
