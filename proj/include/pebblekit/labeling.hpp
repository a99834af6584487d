#pragma once

// Vertex assignments and the edge labels they induce.  An assignment places
// the values 1..V bijectively on the vertices; an edge gets label 1 exactly
// when its endpoints carry same-parity values.  The assignment is "balanced"
// when the counts of 0- and 1-labeled edges differ by at most one.

#include <cstdint>
#include <optional>
#include <vector>

#include "pebblekit/graph.hpp"

namespace pebblekit {

struct VertexAssignment {
  std::vector<int> values;  // values[v] in 1..V, all distinct
  friend bool operator==(const VertexAssignment&,
                         const VertexAssignment&) = default;
};

class EdgeLabeling {
 public:
  EdgeLabeling(const Graph& g, const VertexAssignment& assignment);

  const VertexAssignment& assignment() const { return assignment_; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  std::uint8_t label(EdgeId e) const { return labels_.at(e); }
  int zero_count() const { return zero_count_; }
  int one_count() const { return one_count_; }
  const std::vector<EdgeId>& zero_edges() const { return zero_edges_; }
  const std::vector<EdgeId>& one_edges() const { return one_edges_; }
  // |e0 - e1| <= 1
  bool balanced() const;

 private:
  VertexAssignment assignment_;
  std::vector<std::uint8_t> labels_;  // one per edge, canonical order
  std::vector<EdgeId> zero_edges_, one_edges_;
  int zero_count_ = 0, one_count_ = 0;
};

// Checks the bijection requirement and throws std::invalid_argument with the
// offending vertex if it fails; otherwise returns the induced labeling.
EdgeLabeling derive_edge_labels(const Graph& g, const VertexAssignment& a);

// true iff a is a bijection onto 1..V and the induced labeling is balanced;
// the labeling is returned whenever a is a valid bijection
std::pair<bool, std::optional<EdgeLabeling>> is_sdc(const Graph& g,
                                                    const VertexAssignment& a);

// The published label pattern for a family instance, one value per edge in
// canonical order.  Transcribed rule-by-rule from the closed-form results,
// independently of builtin_assignment; the two agree on every instance.
std::vector<std::uint8_t> paper_edge_pattern(const FamilySpec& spec);

// A concrete balanced assignment realizing paper_edge_pattern: odd values
// 1, 3, 5, ... go to one parity class in vertex order, even values to the
// other.
VertexAssignment builtin_assignment(const FamilySpec& spec);

enum class SearchStatus {
  Found,    // a witness assignment is attached
  Absent,   // exhausted: no assignment exists (for the pattern, if given)
  Unknown,  // node budget ran out before the search finished
};

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<VertexAssignment> assignment;
  long long nodes = 0;  // search nodes visited before stopping
};

// Searches for a balanced assignment of g.  With a target pattern the edge
// labels force parity constraints between endpoints, which are propagated
// exactly (the outcome is then Found or Absent).  Without a pattern the
// search branches on vertex parities, odd side first, and stops at the
// first balanced completion; exceeding the node budget yields Unknown.
SearchResult search_sdc(const Graph& g,
                        const std::vector<std::uint8_t>* pattern = nullptr,
                        long long node_budget = 1'000'000);

}  // namespace pebblekit
