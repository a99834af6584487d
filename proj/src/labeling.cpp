#include "pebblekit/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "family_layout.hpp"

namespace pebblekit {

namespace {

void check_bijection(const Graph& g, const VertexAssignment& a) {
  int n = g.vertex_count();
  if (static_cast<int>(a.values.size()) != n) {
    throw std::invalid_argument("assignment has " +
                                std::to_string(a.values.size()) +
                                " values for " + std::to_string(n) +
                                " vertices");
  }
  std::vector<char> used(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    int val = a.values[v];
    if (val < 1 || val > n) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  ": value " + std::to_string(val) +
                                  " outside 1.." + std::to_string(n));
    }
    if (used[val]) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  ": value " + std::to_string(val) +
                                  " used twice");
    }
    used[val] = 1;
  }
}

}  // namespace

EdgeLabeling::EdgeLabeling(const Graph& g, const VertexAssignment& assignment)
    : assignment_(assignment) {
  check_bijection(g, assignment_);
  labels_.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    // same endpoint parity <=> even sum <=> label 1
    bool one = (assignment_.values[ed.u] + assignment_.values[ed.v]) % 2 == 0;
    labels_.push_back(one ? 1 : 0);
    (one ? one_edges_ : zero_edges_).push_back(e);
  }
  zero_count_ = static_cast<int>(zero_edges_.size());
  one_count_ = static_cast<int>(one_edges_.size());
}

bool EdgeLabeling::balanced() const {
  return std::abs(zero_count_ - one_count_) <= 1;
}

EdgeLabeling derive_edge_labels(const Graph& g, const VertexAssignment& a) {
  return EdgeLabeling(g, a);
}

std::pair<bool, std::optional<EdgeLabeling>> is_sdc(const Graph& g,
                                                    const VertexAssignment& a) {
  try {
    EdgeLabeling lab(g, a);
    bool ok = lab.balanced();
    return {ok, std::move(lab)};
  } catch (const std::invalid_argument&) {
    return {false, std::nullopt};
  }
}

std::vector<std::uint8_t> paper_edge_pattern(const FamilySpec& spec) {
  detail::Layout l = detail::build_layout(spec);
  Graph g = generate_family(spec);
  std::vector<std::uint8_t> pattern(l.edges.size(), 0);
  for (const auto& e : l.edges) {
    EdgeId id = g.edge_id(e.u, e.v);
    pattern.at(id) = static_cast<std::uint8_t>(e.label);
  }
  return pattern;
}

VertexAssignment builtin_assignment(const FamilySpec& spec) {
  detail::Layout l = detail::build_layout(spec);
  VertexAssignment a;
  a.values.assign(l.vertex_count, 0);
  int next_odd = 1, next_even = 2;
  for (int v = 0; v < l.vertex_count; ++v) {
    if (l.odd_class[v]) {
      a.values[v] = next_odd;
      next_odd += 2;
    } else {
      a.values[v] = next_even;
      next_even += 2;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

namespace {

// Parity classes forced by a target pattern: label 1 ties the endpoints to
// one class, label 0 to opposite classes.  Union-find with parity offsets.
struct ParityForest {
  std::vector<int> parent, rank_;
  std::vector<char> flip;  // parity of v relative to its parent

  explicit ParityForest(int n) : parent(n), rank_(n, 0), flip(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int v) {
    if (parent[v] == v) return {v, 0};
    auto [root, p] = find(parent[v]);
    parent[v] = root;
    flip[v] = static_cast<char>(flip[v] ^ p);
    return {root, flip[v]};
  }

  // relate u and v with the given parity difference; false on contradiction
  bool unite(int u, int v, int diff) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return ((pu ^ pv) & 1) == diff;
    if (rank_[ru] < rank_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    parent[rv] = ru;
    flip[rv] = static_cast<char>(pu ^ pv ^ diff);
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
    return true;
  }
};

VertexAssignment from_parity(const std::vector<char>& odd) {
  VertexAssignment a;
  a.values.assign(odd.size(), 0);
  int next_odd = 1, next_even = 2;
  for (std::size_t v = 0; v < odd.size(); ++v) {
    if (odd[v]) {
      a.values[v] = next_odd;
      next_odd += 2;
    } else {
      a.values[v] = next_even;
      next_even += 2;
    }
  }
  return a;
}

SearchResult search_with_pattern(const Graph& g,
                                 const std::vector<std::uint8_t>& pattern) {
  SearchResult res;
  if (static_cast<int>(pattern.size()) != g.edge_count()) {
    throw std::invalid_argument("pattern has " +
                                std::to_string(pattern.size()) +
                                " labels for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  int n = g.vertex_count();
  ParityForest forest(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ++res.nodes;
    const Edge& ed = g.edge(e);
    if (!forest.unite(ed.u, ed.v, pattern[e] ? 0 : 1)) {
      res.status = SearchStatus::Absent;
      return res;
    }
  }
  // the graph is connected, so there is one class pair and two global flips
  int odd_budget = (n + 1) / 2;
  for (int anchor_parity : {1, 0}) {
    std::vector<char> odd(n, 0);
    int odd_size = 0;
    for (int v = 0; v < n; ++v) {
      auto [root, p] = forest.find(v);
      (void)root;
      odd[v] = static_cast<char>(p ^ anchor_parity);
      odd_size += odd[v];
    }
    ++res.nodes;
    if (odd_size == odd_budget) {
      res.status = SearchStatus::Found;
      res.assignment = from_parity(odd);
      return res;
    }
  }
  res.status = SearchStatus::Absent;
  return res;
}

// branch on vertex parities in index order, odd side first
struct FreeSearch {
  const Graph& g;
  long long budget;
  SearchResult res;
  std::vector<char> odd;
  int odd_left, even_left;
  int zero = 0, one = 0, undecided;

  FreeSearch(const Graph& g_, long long budget_)
      : g(g_),
        budget(budget_),
        odd(g_.vertex_count(), 0),
        odd_left((g_.vertex_count() + 1) / 2),
        even_left(g_.vertex_count() / 2),
        undecided(g_.edge_count()) {}

  bool run(int v) {
    if (res.nodes >= budget) return false;  // out of budget, status Unknown
    ++res.nodes;
    if (std::abs(zero - one) > undecided + 1) return false;
    if (v == g.vertex_count()) {
      if (std::abs(zero - one) <= 1) {
        res.status = SearchStatus::Found;
        res.assignment = from_parity(odd);
        return true;
      }
      return false;
    }
    for (int parity : {1, 0}) {
      int& left = parity ? odd_left : even_left;
      if (left == 0) continue;
      --left;
      odd[v] = static_cast<char>(parity);
      int dz = 0, d1 = 0, du = 0;
      for (EdgeId e : incident(v)) {
        int other = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
        if (other < v) {
          --du;
          if (odd[other] == parity) {
            ++d1;
          } else {
            ++dz;
          }
        }
      }
      zero += dz;
      one += d1;
      undecided += du;
      if (run(v + 1)) return true;
      zero -= dz;
      one -= d1;
      undecided -= du;
      ++left;
    }
    return false;
  }

  std::vector<EdgeId> incident(int v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).u == v || g.edge(e).v == v) out.push_back(e);
    }
    return out;
  }
};

}  // namespace

SearchResult search_sdc(const Graph& g, const std::vector<std::uint8_t>* pattern,
                        long long node_budget) {
  if (pattern != nullptr) {
    return search_with_pattern(g, *pattern);
  }
  FreeSearch search(g, node_budget);
  search.run(0);
  if (search.res.status == SearchStatus::Found) return std::move(search.res);
  search.res.status = search.res.nodes >= node_budget ? SearchStatus::Unknown
                                                      : SearchStatus::Absent;
  return std::move(search.res);
}

}  // namespace pebblekit
