#pragma once

// Simple connected graphs with a canonical edge order, plus generators for
// the eight built-in families the solver knows closed-form predictions for.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pebblekit {

using EdgeId = std::int32_t;

struct Edge {
  int u = 0;
  int v = 0;  // normalized so that u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edges are kept sorted by (u, v); EdgeId is the index into that order.
// Construction validates simplicity and connectivity and rejects loops.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> names = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  // id of edge {u, v}, or -1 when the pair is not an edge
  EdgeId edge_id(int u, int v) const;

  // edges sharing an endpoint with e, ascending (the line-graph neighbors)
  const std::vector<EdgeId>& line_neighbors(EdgeId e) const;

  // hop count between e and f in the line graph; -1 if disconnected there
  // (never happens for connected graphs with at least one edge)
  int edge_distance(EdgeId e, EdgeId f) const;

  bool has_names() const { return !names_.empty(); }
  const std::string& vertex_name(int v) const;
  std::string edge_name(EdgeId e) const;  // "a-b" style, for diagnostics

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;  // empty, or one per vertex
  std::vector<std::vector<EdgeId>> line_neighbors_;
};

enum class Family {
  Comb,
  Star,
  SubdividedStar,
  Bistar,
  SubdividedBistar,
  TwoStarsDelta,
  DegreeSplitBistar,
  StarOfStars,
};

inline constexpr Family kAllFamilies[] = {
    Family::Comb,           Family::Star,
    Family::SubdividedStar, Family::Bistar,
    Family::SubdividedBistar, Family::TwoStarsDelta,
    Family::DegreeSplitBistar, Family::StarOfStars,
};

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Star;
  int n = 1;  // size parameter; >= 1, except Comb which needs >= 2
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph generate_family(const FamilySpec& spec);

// A relabeling of edge ids: map[e] is the image of e.  The permutations
// produced by symmetry_generators are graph automorphisms lifted to edges.
struct EdgePermutation {
  std::vector<EdgeId> map;
};

class EdgeLabeling;  // see labeling.hpp

// Label-preserving automorphism generators for a family instance: branch
// swaps between interchangeable limbs carrying equal labels, the path
// reflection of a comb, and the center swap of a bistar.  Every returned
// permutation maps each edge to an equally-labeled edge.
std::vector<EdgePermutation> symmetry_generators(const FamilySpec& spec,
                                                 const EdgeLabeling& labeling);

}  // namespace pebblekit
