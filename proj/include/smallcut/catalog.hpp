#pragma once

#include <vector>

#include "smallcut/graph.hpp"

namespace smallcut {

// All connected graphs on exactly n vertices, one per isomorphism class
// (1, 1, 2, 6, 21, 112, 853 for n = 1..7). Exhaustive enumeration with a
// canonical form, so only practical for n <= 7.
std::vector<Graph> connected_graph_catalog(int n);

}  // namespace smallcut
