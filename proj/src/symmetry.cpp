// Label-preserving automorphisms for family instances.  Candidates come
// from the family structure (limb swaps, the comb reflection, center
// swaps); each candidate is lifted to an edge permutation and kept only if
// it maps every edge to an equally-labeled edge under the given labeling.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "family_layout.hpp"
#include "pebblekit/labeling.hpp"

namespace pebblekit {

namespace {

// vertex permutation -> edge permutation; empty when some image is missing
// (the candidate was not an automorphism after all)
std::optional<EdgePermutation> lift(const Graph& g,
                                    const std::vector<int>& vmap) {
  EdgePermutation p;
  p.map.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    EdgeId image = g.edge_id(vmap[ed.u], vmap[ed.v]);
    if (image < 0) return std::nullopt;
    p.map[e] = image;
  }
  return p;
}

bool preserves_labels(const EdgePermutation& p, const EdgeLabeling& lab) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(p.map.size()); ++e) {
    if (lab.label(e) != lab.label(p.map[e])) return false;
  }
  return true;
}

bool is_identity(const EdgePermutation& p) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(p.map.size()); ++e) {
    if (p.map[e] != e) return false;
  }
  return true;
}

}  // namespace

std::vector<EdgePermutation> symmetry_generators(const FamilySpec& spec,
                                                 const EdgeLabeling& labeling) {
  detail::Layout layout = detail::build_layout(spec);
  Graph g = generate_family(spec);
  if (static_cast<int>(labeling.labels().size()) != g.edge_count()) {
    throw std::invalid_argument("labeling does not fit the family graph");
  }

  std::vector<std::vector<int>> candidates;

  // branch transpositions within each limb group
  for (const auto& group : layout.swap_groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        std::vector<int> vmap(layout.vertex_count);
        for (int v = 0; v < layout.vertex_count; ++v) vmap[v] = v;
        for (std::size_t k = 0; k < group[i].size(); ++k) {
          vmap[group[i][k]] = group[j][k];
          vmap[group[j][k]] = group[i][k];
        }
        candidates.push_back(std::move(vmap));
      }
    }
  }
  for (const auto& extra : layout.extra_maps) candidates.push_back(extra);

  std::vector<EdgePermutation> out;
  for (const auto& vmap : candidates) {
    auto lifted = lift(g, vmap);
    if (!lifted) continue;  // structural candidate missed; skip it
    if (is_identity(*lifted)) continue;
    if (preserves_labels(*lifted, labeling)) out.push_back(std::move(*lifted));
  }
  return out;
}

}  // namespace pebblekit
