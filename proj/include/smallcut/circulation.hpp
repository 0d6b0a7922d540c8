#pragma once

#include <map>

#include "smallcut/graph.hpp"
#include "smallcut/prng.hpp"
#include "smallcut/tree.hpp"

namespace smallcut {

// phi: one b-bit value per edge, indexed by edge id. A (b-bit) circulation
// XORs to zero around every vertex, hence XORs to zero over every induced
// edge cut; a uniformly random one is nonzero on any fixed non-cut set with
// probability 1 - 2^-b per bit.
struct BitCirculation {
  int bits = 0;
  std::vector<BitVec> value;  // size m

  const BitVec& operator[](int e) const { return value[e]; }
};

// Extends an assignment on the non-tree edges to the unique circulation that
// agrees with it. psi must have exactly the non-tree edges as keys, all of
// width `bits`.
BitCirculation complete_circulation(const Graph& g, const RootedTree& t, int bits,
                                    const std::map<int, BitVec>& psi);

// Uniform over all 2^(bits * (m - n + 1)) circulations: independent uniform
// values on non-tree edges (ascending edge index), then completion.
BitCirculation random_circulation(const Graph& g, const RootedTree& t, int bits,
                                  Prng& rng);

bool is_bit_circulation(const Graph& g, const BitCirculation& phi);

BitVec xor_over(const BitCirculation& phi, const EdgeSet& edges);

// Fraction of `trials` independent 1-bit circulations with even intersection
// |F and supp(phi)|. Diagnostic for the 2^-b claim: expect ~1/2 for non-cut F,
// exactly 1 for induced cuts.
double sample_even_intersection_rate(const Graph& g, const EdgeSet& f, int trials,
                                     Prng& rng);

// Default circulation widths for the Monte Carlo algorithms.
int bits_for_cut_edges(const Graph& g);     // ceil(log2(n*m))
int bits_for_cut_classes(const Graph& g);   // ceil(log2(n*m^2))
int bits_for_cut_vertices(const Graph& g);  // max_degree + 2*ceil(log2 n)

}  // namespace smallcut
