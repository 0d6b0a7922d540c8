#pragma once

#include <string>
#include <vector>

#include "smallcut/graph.hpp"

namespace smallcut {

// Everything the toolkit can say about one graph's small cuts. Labels are
// canonical (components carry their smallest vertex, classes and blocks are
// numbered by smallest member edge), so equal structures serialize equally.
struct CutReport {
  int version = 1;
  int n = 0;
  int m = 0;
  bool verified = false;            // produced by a Las Vegas run
  std::vector<int> cut_edges;       // ascending edge ids
  std::vector<std::vector<int>> cut_classes;
  std::vector<std::string> class_values;  // bit strings, parallel to cut_classes;
                                          // empty strings when not applicable
  std::vector<int> cut_vertices;    // ascending vertex ids
  std::vector<int> two_ecc;         // per vertex
  std::vector<int> three_ecc;       // per vertex
  std::vector<int> block_labels;    // per edge

  bool operator==(const CutReport&) const = default;
};

std::string report_to_json(const CutReport& r);
CutReport report_from_json(const std::string& text);

// Human-readable description of the first few differences; empty if
// semantically equal (class_values are advisory and not compared).
std::string diff_reports(const CutReport& a, const CutReport& b);

}  // namespace smallcut
