// Constructions for the eight built-in families.  Vertex numbering is fixed
// per family (documented next to each builder) so that edge ids, reports and
// witness files stay stable across runs and versions.

#include <stdexcept>
#include <string>

#include "family_layout.hpp"
#include "pebblekit/graph.hpp"

namespace pebblekit {

std::string family_name(Family f) {
  switch (f) {
    case Family::Comb: return "comb";
    case Family::Star: return "star";
    case Family::SubdividedStar: return "subdivided-star";
    case Family::Bistar: return "bistar";
    case Family::SubdividedBistar: return "subdivided-bistar";
    case Family::TwoStarsDelta: return "two-stars-delta";
    case Family::DegreeSplitBistar: return "degree-split-bistar";
    case Family::StarOfStars: return "star-of-stars";
  }
  throw std::invalid_argument("unknown family");
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace detail {
namespace {

std::string sub(const char* base, int r) {
  return std::string(base) + "_" + std::to_string(r);
}

void require_n(const FamilySpec& spec) {
  int min_n = spec.family == Family::Comb ? 2 : 1;
  if (spec.n < min_n) {
    throw std::invalid_argument("family " + family_name(spec.family) +
                                " needs n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(spec.n));
  }
}

// Comb: path a_1..a_n with a pendant b_r on each a_r.
// a_r -> r-1, b_r -> n+r-1.  Path edges are labeled 1, pendants 0; the
// a_r take the odd values.
Layout comb(int n) {
  Layout l;
  l.vertex_count = 2 * n;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  for (int r = 1; r <= n; ++r) {
    l.names[r - 1] = sub("a", r);
    l.names[n + r - 1] = sub("b", r);
    l.odd_class[r - 1] = 1;
  }
  for (int r = 1; r < n; ++r) l.edges.push_back({r - 1, r, 1});
  for (int r = 1; r <= n; ++r) l.edges.push_back({r - 1, n + r - 1, 0});
  // reflection r <-> n+1-r
  std::vector<int> rev(l.vertex_count);
  for (int r = 1; r <= n; ++r) {
    rev[r - 1] = n - r;
    rev[n + r - 1] = n + (n - r);
  }
  l.extra_maps.push_back(std::move(rev));
  return l;
}

// Star: center a with leaves a_1..a_n.  a -> 0, a_r -> r.
// Leaf edge labels alternate by r; a and the even-indexed leaves are odd.
Layout star(int n) {
  Layout l;
  l.vertex_count = n + 1;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "a";
  l.odd_class[0] = 1;
  std::vector<std::vector<int>> leaves;
  for (int r = 1; r <= n; ++r) {
    l.names[r] = sub("a", r);
    l.odd_class[r] = r % 2 == 0;
    l.edges.push_back({0, r, r % 2 == 0 ? 1 : 0});
    leaves.push_back({r});
  }
  l.swap_groups.push_back(std::move(leaves));
  return l;
}

// Subdivided star: every leaf edge of a star split by a middle vertex.
// a -> 0, a_r -> r (middle), b_r -> n+r (tip).  Inner edges 1, outer 0.
Layout subdivided_star(int n) {
  Layout l;
  l.vertex_count = 2 * n + 1;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "a";
  l.odd_class[0] = 1;
  std::vector<std::vector<int>> limbs;
  for (int r = 1; r <= n; ++r) {
    l.names[r] = sub("a", r);
    l.names[n + r] = sub("b", r);
    l.odd_class[r] = 1;
    l.edges.push_back({0, r, 1});
    l.edges.push_back({r, n + r, 0});
    limbs.push_back({r, n + r});
  }
  l.swap_groups.push_back(std::move(limbs));
  return l;
}

// Bistar: centers a, b joined by an edge, n leaves on each.
// a -> 0, b -> 1, a_r -> 1+r, b_r -> n+1+r.  The bridge is labeled 0; leaf
// labels alternate, starting at 1.
Layout bistar(int n) {
  Layout l;
  l.vertex_count = 2 * n + 2;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "a";
  l.names[1] = "b";
  l.odd_class[0] = 1;
  l.edges.push_back({0, 1, 0});
  std::vector<std::vector<int>> a_leaves, b_leaves;
  for (int r = 1; r <= n; ++r) {
    l.names[1 + r] = sub("a", r);
    l.names[n + 1 + r] = sub("b", r);
    l.odd_class[1 + r] = r % 2 == 1;
    l.odd_class[n + 1 + r] = r % 2 == 0;
    l.edges.push_back({0, 1 + r, r % 2 == 1 ? 1 : 0});
    l.edges.push_back({1, n + 1 + r, r % 2 == 1 ? 1 : 0});
    a_leaves.push_back({1 + r});
    b_leaves.push_back({n + 1 + r});
  }
  l.swap_groups.push_back(std::move(a_leaves));
  l.swap_groups.push_back(std::move(b_leaves));
  // center swap a <-> b, a_r <-> b_r
  std::vector<int> swap(l.vertex_count);
  swap[0] = 1;
  swap[1] = 0;
  for (int r = 1; r <= n; ++r) {
    swap[1 + r] = n + 1 + r;
    swap[n + 1 + r] = 1 + r;
  }
  l.extra_maps.push_back(std::move(swap));
  return l;
}

// Subdivided bistar: a bistar with every edge split by a middle vertex.
// a -> 0, a' -> 1, b -> 2, a'_r -> 2+r (middle), a_r -> n+2+r (tip),
// b'_r -> 2n+2+r (middle), b_r -> 3n+2+r (tip).
Layout subdivided_bistar(int n) {
  Layout l;
  l.vertex_count = 4 * n + 3;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "a";
  l.names[1] = "a'";
  l.names[2] = "b";
  l.odd_class[0] = 1;
  l.odd_class[1] = 1;
  l.edges.push_back({0, 1, 1});
  l.edges.push_back({1, 2, 0});
  std::vector<std::vector<int>> a_limbs, b_limbs;
  for (int r = 1; r <= n; ++r) {
    l.names[2 + r] = sub("a'", r);
    l.names[n + 2 + r] = sub("a", r);
    l.names[2 * n + 2 + r] = sub("b'", r);
    l.names[3 * n + 2 + r] = sub("b", r);
    l.odd_class[2 + r] = 1;
    l.odd_class[3 * n + 2 + r] = 1;
    l.edges.push_back({0, 2 + r, 1});
    l.edges.push_back({2 + r, n + 2 + r, 0});
    l.edges.push_back({2, 2 * n + 2 + r, 1});
    l.edges.push_back({2 * n + 2 + r, 3 * n + 2 + r, 0});
    a_limbs.push_back({2 + r, n + 2 + r});
    b_limbs.push_back({2 * n + 2 + r, 3 * n + 2 + r});
  }
  l.swap_groups.push_back(std::move(a_limbs));
  l.swap_groups.push_back(std::move(b_limbs));
  return l;
}

// Two stars sharing an apex x adjacent to both centers, centers adjacent
// too.  a -> 0, b -> 1, x -> 2, a_r -> 2+r, b_r -> n+2+r.
Layout two_stars_delta(int n) {
  Layout l;
  l.vertex_count = 2 * n + 3;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "a";
  l.names[1] = "b";
  l.names[2] = "x";
  l.odd_class[0] = 1;
  l.odd_class[1] = 1;
  l.edges.push_back({0, 1, 1});
  l.edges.push_back({0, 2, 0});
  l.edges.push_back({1, 2, 0});
  std::vector<std::vector<int>> a_leaves, b_leaves;
  for (int r = 1; r <= n; ++r) {
    l.names[2 + r] = sub("a", r);
    l.names[n + 2 + r] = sub("b", r);
    l.odd_class[2 + r] = r % 2 == 0;
    l.odd_class[n + 2 + r] = r % 2 == 1;
    l.edges.push_back({0, 2 + r, r % 2 == 1 ? 0 : 1});
    l.edges.push_back({1, n + 2 + r, r % 2 == 1 ? 1 : 0});
    a_leaves.push_back({2 + r});
    b_leaves.push_back({n + 2 + r});
  }
  l.swap_groups.push_back(std::move(a_leaves));
  l.swap_groups.push_back(std::move(b_leaves));
  std::vector<int> swap(l.vertex_count);
  swap[0] = 1;
  swap[1] = 0;
  swap[2] = 2;
  for (int r = 1; r <= n; ++r) {
    swap[2 + r] = n + 2 + r;
    swap[n + 2 + r] = 2 + r;
  }
  l.extra_maps.push_back(std::move(swap));
  return l;
}

// Degree splitting of a bistar: leaves of u gather at w1 together with the
// leaves of v; w2 is adjacent to both centers.
// u -> 0, v -> 1, u_r -> 1+r, v_r -> n+1+r, w1 -> 2n+2, w2 -> 2n+3.
Layout degree_split_bistar(int n) {
  Layout l;
  l.vertex_count = 2 * n + 4;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  int w1 = 2 * n + 2, w2 = 2 * n + 3;
  l.names[0] = "u";
  l.names[1] = "v";
  l.names[w1] = "w_1";
  l.names[w2] = "w_2";
  l.odd_class[0] = 1;
  l.odd_class[1] = 1;
  l.edges.push_back({0, 1, 1});
  l.edges.push_back({0, w2, 0});
  l.edges.push_back({1, w2, 0});
  std::vector<std::vector<int>> u_leaves, v_leaves;
  for (int r = 1; r <= n; ++r) {
    l.names[1 + r] = sub("u", r);
    l.names[n + 1 + r] = sub("v", r);
    l.odd_class[1 + r] = 1;
    l.edges.push_back({0, 1 + r, 1});
    l.edges.push_back({1 + r, w1, 0});
    l.edges.push_back({1, n + 1 + r, 0});
    l.edges.push_back({n + 1 + r, w1, 1});
    u_leaves.push_back({1 + r});
    v_leaves.push_back({n + 1 + r});
  }
  l.swap_groups.push_back(std::move(u_leaves));
  l.swap_groups.push_back(std::move(v_leaves));
  std::vector<int> swap(l.vertex_count);
  swap[0] = 1;
  swap[1] = 0;
  swap[w1] = w1;
  swap[w2] = w2;
  for (int r = 1; r <= n; ++r) {
    swap[1 + r] = n + 1 + r;
    swap[n + 1 + r] = 1 + r;
  }
  l.extra_maps.push_back(std::move(swap));
  return l;
}

// A hub x joined to three star centers u, v, w, each carrying n leaves.
// x -> 0, u -> 1, v -> 2, w -> 3, u_r -> 3+r, v_r -> n+3+r, w_r -> 2n+3+r.
Layout star_of_stars(int n) {
  Layout l;
  l.vertex_count = 3 * n + 4;
  l.names.resize(l.vertex_count);
  l.odd_class.assign(l.vertex_count, 0);
  l.names[0] = "x";
  l.names[1] = "u";
  l.names[2] = "v";
  l.names[3] = "w";
  l.odd_class[0] = 1;
  l.odd_class[1] = 1;
  l.edges.push_back({0, 1, 1});
  l.edges.push_back({0, 2, 0});
  l.edges.push_back({0, 3, 0});
  std::vector<std::vector<int>> u_leaves, v_leaves, w_leaves;
  for (int r = 1; r <= n; ++r) {
    l.names[3 + r] = sub("u", r);
    l.names[n + 3 + r] = sub("v", r);
    l.names[2 * n + 3 + r] = sub("w", r);
    l.odd_class[3 + r] = r % 2 == 1;
    l.odd_class[n + 3 + r] = r % 2 == 0;
    l.odd_class[2 * n + 3 + r] = r % 2 == 1;
    l.edges.push_back({1, 3 + r, r % 2 == 1 ? 1 : 0});
    l.edges.push_back({2, n + 3 + r, r % 2 == 1 ? 1 : 0});
    l.edges.push_back({3, 2 * n + 3 + r, r % 2 == 1 ? 0 : 1});
    u_leaves.push_back({3 + r});
    v_leaves.push_back({n + 3 + r});
    w_leaves.push_back({2 * n + 3 + r});
  }
  l.swap_groups.push_back(std::move(u_leaves));
  l.swap_groups.push_back(std::move(v_leaves));
  l.swap_groups.push_back(std::move(w_leaves));
  // arm swaps; label filtering keeps only those that preserve labels
  for (auto [c1, c2] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    std::vector<int> swap(l.vertex_count);
    for (int v = 0; v < l.vertex_count; ++v) swap[v] = v;
    swap[c1] = c2;
    swap[c2] = c1;
    for (int r = 1; r <= n; ++r) {
      int x1 = (c1 - 1) * n + 3 + r;
      int x2 = (c2 - 1) * n + 3 + r;
      swap[x1] = x2;
      swap[x2] = x1;
    }
    l.extra_maps.push_back(std::move(swap));
  }
  return l;
}

}  // namespace

Layout build_layout(const FamilySpec& spec) {
  require_n(spec);
  switch (spec.family) {
    case Family::Comb: return comb(spec.n);
    case Family::Star: return star(spec.n);
    case Family::SubdividedStar: return subdivided_star(spec.n);
    case Family::Bistar: return bistar(spec.n);
    case Family::SubdividedBistar: return subdivided_bistar(spec.n);
    case Family::TwoStarsDelta: return two_stars_delta(spec.n);
    case Family::DegreeSplitBistar: return degree_split_bistar(spec.n);
    case Family::StarOfStars: return star_of_stars(spec.n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace detail

Graph generate_family(const FamilySpec& spec) {
  detail::Layout l = detail::build_layout(spec);
  std::vector<Edge> edges;
  edges.reserve(l.edges.size());
  for (const auto& e : l.edges) edges.push_back({e.u, e.v});
  return Graph(l.vertex_count, std::move(edges), std::move(l.names));
}

}  // namespace pebblekit
