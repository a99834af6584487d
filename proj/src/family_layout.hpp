#pragma once

// Internal construction-order description of a family instance: vertex
// numbering, named vertices, edges with their published label, the parity
// class each vertex falls into, and the structural symmetry candidates.
// Everything family-specific funnels through build_layout so the generator,
// the pattern table, the builtin assignment and the symmetry generators all
// read one description.

#include <string>
#include <vector>

#include "pebblekit/graph.hpp"

namespace pebblekit::detail {

struct LayoutEdge {
  int u = 0;
  int v = 0;
  int label = 0;  // published pattern value
};

struct Layout {
  int vertex_count = 0;
  std::vector<std::string> names;
  std::vector<LayoutEdge> edges;  // construction order, not canonical order
  // parity classes of the concrete assignment: odd_class[v] set means v
  // receives an odd value
  std::vector<char> odd_class;
  // interchangeable limbs: within one group, any two branches may be
  // swapped position-by-position (symmetry candidates, filtered against the
  // actual labels later)
  std::vector<std::vector<std::vector<int>>> swap_groups;
  // optional whole-graph candidate maps (comb reflection, bistar center
  // swap and the like); each is a full vertex permutation
  std::vector<std::vector<int>> extra_maps;
};

Layout build_layout(const FamilySpec& spec);

}  // namespace pebblekit::detail
