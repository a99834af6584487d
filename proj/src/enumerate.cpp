// Enumeration of restricted distributions in ascending lexicographic order
// of the count vector, optionally thinned to one representative per orbit
// of the symmetry generators.

#include <set>
#include <stdexcept>

#include "pebblekit/psi.hpp"

namespace pebblekit {

namespace {

// true iff counts is the lexicographically least member of its orbit under
// the group generated by the permutations (closure by breadth-first
// application of the generators, stopping early on any smaller member)
bool orbit_minimum(const std::vector<int>& counts,
                   const std::vector<EdgePermutation>& gens) {
  std::set<std::vector<int>> seen{counts};
  std::vector<const std::vector<int>*> frontier{&*seen.begin()};
  std::vector<int> image(counts.size());
  while (!frontier.empty()) {
    std::vector<const std::vector<int>*> next;
    for (const auto* cur : frontier) {
      for (const auto& p : gens) {
        for (std::size_t e = 0; e < counts.size(); ++e) {
          image[p.map[e]] = (*cur)[e];
        }
        if (image < counts) return false;
        auto [it, fresh] = seen.insert(image);
        if (fresh) next.push_back(&*it);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

void enumerate_restricted(
    const Graph& g, const EdgeLabeling& lab, int total,
    const std::function<bool(const Distribution&)>& visit,
    const std::vector<EdgePermutation>* generators) {
  if (static_cast<int>(lab.labels().size()) != g.edge_count()) {
    throw std::invalid_argument("labeling does not fit the graph");
  }
  if (total < 0) {
    throw std::invalid_argument("negative distribution size");
  }
  int ecount = g.edge_count();
  if (generators != nullptr) {
    for (const auto& p : *generators) {
      if (static_cast<int>(p.map.size()) != ecount) {
        throw std::invalid_argument("permutation does not fit the graph");
      }
    }
  }
  bool use_gens = generators != nullptr && !generators->empty();

  Distribution d;
  d.counts.assign(ecount, 0);
  if (ecount == 0) {
    if (total == 0) visit(d);
    return;
  }
  // recursive descent; the last edge absorbs the remainder
  auto rec = [&](auto&& self, int e, int remaining) -> bool {
    bool zero = lab.labels()[e] == 0;
    if (e == ecount - 1) {
      if (zero && remaining % 2 != 0) return true;
      d.counts[e] = remaining;
      bool keep = true;
      if (!use_gens || orbit_minimum(d.counts, *generators)) {
        keep = visit(d);
      }
      d.counts[e] = 0;
      return keep;
    }
    int step = zero ? 2 : 1;
    for (int c = 0; c <= remaining; c += step) {
      d.counts[e] = c;
      if (!self(self, e + 1, remaining - c)) {
        d.counts[e] = 0;
        return false;
      }
    }
    d.counts[e] = 0;
    return true;
  };
  rec(rec, 0, total);
}

std::vector<Distribution> restricted_distributions(
    const Graph& g, const EdgeLabeling& lab, int total,
    const std::vector<EdgePermutation>* generators) {
  std::vector<Distribution> out;
  enumerate_restricted(
      g, lab, total,
      [&](const Distribution& d) {
        out.push_back(d);
        return true;
      },
      generators);
  return out;
}

}  // namespace pebblekit
