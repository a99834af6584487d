#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "pebblekit/labeling.hpp"

using namespace pebblekit;

namespace {

struct GridEntry {
  Family family;
  int lo, hi;
};

const GridEntry kGrid[] = {
    {Family::Comb, 2, 8},          {Family::Star, 2, 10},
    {Family::SubdividedStar, 1, 8}, {Family::Bistar, 1, 6},
    {Family::SubdividedBistar, 1, 4}, {Family::TwoStarsDelta, 1, 6},
    {Family::DegreeSplitBistar, 1, 5}, {Family::StarOfStars, 1, 5},
};

}  // namespace

TEST_CASE("builtin assignments realize the published patterns") {
  for (const GridEntry& ge : kGrid) {
    for (int n = ge.lo; n <= ge.hi; ++n) {
      FamilySpec spec{ge.family, n};
      CAPTURE(family_name(ge.family));
      CAPTURE(n);
      Graph g = generate_family(spec);
      VertexAssignment a = builtin_assignment(spec);

      std::vector<char> seen(g.vertex_count() + 1, 0);
      REQUIRE(static_cast<int>(a.values.size()) == g.vertex_count());
      for (int v : a.values) {
        REQUIRE(v >= 1);
        REQUIRE(v <= g.vertex_count());
        REQUIRE(!seen[v]);
        seen[v] = 1;
      }

      auto [ok, lab] = is_sdc(g, a);
      REQUIRE(ok);
      CHECK(lab->balanced());
      CHECK(lab->labels() == paper_edge_pattern(spec));
      CHECK(lab->zero_count() + lab->one_count() == g.edge_count());
    }
  }
}

TEST_CASE("edge labels follow endpoint value parity") {
  Graph p3(3, {{0, 1}, {1, 2}});
  EdgeLabeling lab = derive_edge_labels(p3, {{1, 3, 2}});
  CHECK(lab.label(0) == 1);  // 1 + 3 even
  CHECK(lab.label(1) == 0);  // 3 + 2 odd
  CHECK(lab.zero_edges() == std::vector<EdgeId>{1});
  CHECK(lab.one_edges() == std::vector<EdgeId>{0});
  CHECK(lab.balanced());

  EdgeLabeling skew = derive_edge_labels(p3, {{1, 2, 3}});
  CHECK(skew.zero_count() == 2);
  CHECK(!skew.balanced());
}

TEST_CASE("derive_edge_labels rejects non-bijections") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(derive_edge_labels(p3, {{1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(derive_edge_labels(p3, {{0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(derive_edge_labels(p3, {{1, 2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(derive_edge_labels(p3, {{1, 2}}), std::invalid_argument);
  CHECK(!is_sdc(p3, {{1, 1, 2}}).first);
  CHECK(!is_sdc(p3, {{1, 2, 3}}).first);  // bijection, not balanced
  CHECK(is_sdc(p3, {{1, 2, 3}}).second.has_value());
}

TEST_CASE("pattern-directed search settles every family pattern") {
  for (const GridEntry& ge : kGrid) {
    for (int n = ge.lo; n <= std::min(ge.hi, 4); ++n) {
      FamilySpec spec{ge.family, n};
      CAPTURE(family_name(ge.family));
      CAPTURE(n);
      Graph g = generate_family(spec);
      auto pattern = paper_edge_pattern(spec);
      SearchResult r = search_sdc(g, &pattern);
      REQUIRE(r.status == SearchStatus::Found);
      REQUIRE(r.assignment.has_value());
      EdgeLabeling lab = derive_edge_labels(g, *r.assignment);
      CHECK(lab.labels() == pattern);
    }
  }
}

TEST_CASE("pattern-directed search reports impossible patterns") {
  // both star edges labeled 1 forces three vertices into one parity class,
  // but 1..3 has only two odd values
  Graph star2(3, {{0, 1}, {0, 2}});
  std::vector<std::uint8_t> ones{1, 1};
  SearchResult r = search_sdc(star2, &ones);
  CHECK(r.status == SearchStatus::Absent);
  CHECK(!r.assignment.has_value());
}

TEST_CASE("free search finds a balanced assignment") {
  for (const GridEntry& ge : kGrid) {
    FamilySpec spec{ge.family, ge.lo};
    Graph g = generate_family(spec);
    SearchResult r = search_sdc(g);
    REQUIRE(r.status == SearchStatus::Found);
    auto [ok, lab] = is_sdc(g, *r.assignment);
    CHECK(ok);
  }
}

TEST_CASE("free search respects the node budget") {
  Graph g = generate_family({Family::Star, 10});
  SearchResult r = search_sdc(g, nullptr, 1);
  CHECK(r.status == SearchStatus::Unknown);
  CHECK(!r.assignment.has_value());
}

TEST_CASE("labels depend only on value parities") {
  std::mt19937 rng(20260822);
  for (const GridEntry& ge : kGrid) {
    FamilySpec spec{ge.family, std::min(ge.hi, 3)};
    Graph g = generate_family(spec);
    VertexAssignment a = builtin_assignment(spec);

    // shuffle values within each parity class
    std::vector<int> odd_slots, even_slots;
    for (int v = 0; v < g.vertex_count(); ++v) {
      (a.values[v] % 2 ? odd_slots : even_slots).push_back(v);
    }
    VertexAssignment b = a;
    for (auto* slots : {&odd_slots, &even_slots}) {
      std::vector<int> vals;
      for (int v : *slots) vals.push_back(a.values[v]);
      std::shuffle(vals.begin(), vals.end(), rng);
      for (std::size_t i = 0; i < slots->size(); ++i) {
        b.values[(*slots)[i]] = vals[i];
      }
    }

    CHECK(derive_edge_labels(g, b).labels() ==
          derive_edge_labels(g, a).labels());
  }
}
