#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pebblekit/engine.hpp"

using namespace pebblekit;

namespace {

Distribution dist(std::vector<int> counts) {
  Distribution d;
  d.counts = std::move(counts);
  return d;
}

Distribution concentrated(int ecount, EdgeId e, int amount) {
  Distribution d;
  d.counts.assign(ecount, 0);
  d.counts[e] = amount;
  return d;
}

struct Instance {
  Graph g;
  EdgeLabeling lab;
};

Instance family_instance(Family f, int n) {
  FamilySpec spec{f, n};
  Graph g = generate_family(spec);
  EdgeLabeling lab = derive_edge_labels(g, builtin_assignment(spec));
  return {std::move(g), std::move(lab)};
}

}  // namespace

TEST_CASE("apply_move transfers two pebbles into one") {
  auto [g, lab] = family_instance(Family::Comb, 2);
  // edges: 0 = {0,1} spine, 1 = {0,2} tooth, 2 = {1,3} tooth
  Distribution d = dist({0, 2, 0});
  Distribution after = apply_move(g, d, {1, 0});
  CHECK(after == dist({1, 0, 0}));
  CHECK(after.total() == d.total() - 1);

  CHECK_THROWS_AS(apply_move(g, d, {2, 0}), std::invalid_argument);  // empty
  CHECK_THROWS_AS(apply_move(g, d, {1, 2}), std::invalid_argument);  // far
  CHECK_THROWS_AS(apply_move(g, d, {1, 1}), std::invalid_argument);  // self
}

TEST_CASE("legal_moves lists playable pairs in ascending order") {
  auto [g, lab] = family_instance(Family::Comb, 2);
  Distribution d = dist({0, 2, 2});
  auto moves = legal_moves(g, d, lab, {});
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == Move{1, 0});
  CHECK(moves[1] == Move{2, 0});
  CHECK(legal_moves(g, dist({1, 1, 1}), lab, {}).empty());
}

TEST_CASE("Always parity filters moves that leave a 0-edge odd") {
  auto [g, lab] = family_instance(Family::Star, 4);
  // labels by edge: {0,1} and {0,3} are 0-edges, {0,2} and {0,4} are 1-edges
  Distribution d = dist({2, 0, 2, 0});
  GameSemantics always{CoverRule::RestingCounts, ParityRule::Always,
                       Quantifier::ExactSize};
  auto strict = legal_moves(g, d, lab, always);
  for (Move m : strict) {
    CHECK(lab.label(m.to) == 1);  // landing on the other 0-edge would tip it
  }
  auto loose = legal_moves(g, d, lab, {});
  CHECK(loose.size() > strict.size());
  CHECK(strict.size() == 4);  // two sources, two 1-edge sinks each
}

TEST_CASE("goal asks for covered 1-edges and empty 0-edges") {
  auto [g, lab] = family_instance(Family::Comb, 2);
  CHECK(is_goal(dist({1, 0, 0}), lab, {}));
  CHECK(is_goal(dist({2, 0, 0}), lab, {}));
  CHECK(!is_goal(dist({0, 0, 0}), lab, {}));
  CHECK(!is_goal(dist({1, 2, 0}), lab, {}));

  GameSemantics recv{CoverRule::MustReceive, ParityRule::InitialOnly,
                     Quantifier::ExactSize};
  std::vector<std::uint8_t> none(3, 0), hit{1, 0, 0};
  CHECK(!is_goal(dist({1, 0, 0}), lab, recv, &none));
  CHECK(is_goal(dist({1, 0, 0}), lab, recv, &hit));
}

TEST_CASE("is_restricted checks evenness on 0-edges") {
  auto [g, lab] = family_instance(Family::Star, 4);
  CHECK(is_restricted(dist({2, 1, 0, 3}), lab));
  CHECK(!is_restricted(dist({1, 0, 0, 0}), lab));
  CHECK(!is_restricted(dist({0, 0, 3, 0}), lab));
  CHECK_THROWS_AS(is_restricted(dist({0, 0}), lab), std::invalid_argument);
  CHECK_THROWS_AS(is_restricted(dist({-2, 0, 0, 0}), lab),
                  std::invalid_argument);
}

TEST_CASE("solve decides the frozen witness pairs") {
  struct Case {
    Family f;
    int n;
    int u, v;
    int bad, good;
  };
  const Case cases[] = {
      {Family::Star, 4, 0, 1, 2, 4},
      {Family::SubdividedStar, 2, 2, 4, 4, 6},
      {Family::TwoStarsDelta, 1, 0, 3, 4, 6},
  };
  for (const Case& c : cases) {
    auto [g, lab] = family_instance(c.f, c.n);
    EdgeId e = g.edge_id(c.u, c.v);
    REQUIRE(e >= 0);
    REQUIRE(lab.label(e) == 0);
    CAPTURE(c.u);
    CAPTURE(c.v);

    SolveOutcome bad = solve(g, lab, concentrated(g.edge_count(), e, c.bad), {});
    CHECK(!bad.solvable);
    CHECK(bad.certificate.empty());

    SolveOutcome good =
        solve(g, lab, concentrated(g.edge_count(), e, c.good), {});
    REQUIRE(good.solvable);
    ReplayResult rep = replay(g, lab, concentrated(g.edge_count(), e, c.good),
                              good.certificate, {});
    CHECK(rep.ok);
    CHECK(!rep.failed_step.has_value());
    CHECK(is_goal(rep.final_state, lab, {}));
  }
}

TEST_CASE("solve rejects unrestricted starts") {
  auto [g, lab] = family_instance(Family::Star, 4);
  CHECK_THROWS_AS(solve(g, lab, dist({1, 0, 0, 0}), {}), std::invalid_argument);
  CHECK_THROWS_AS(solve(g, lab, dist({0, 1}), {}), std::invalid_argument);
}

TEST_CASE("solve agrees across cover rules on an easy instance") {
  auto [g, lab] = family_instance(Family::Star, 4);
  GameSemantics recv{CoverRule::MustReceive, ParityRule::InitialOnly,
                     Quantifier::ExactSize};
  // six pebbles on the 0-edge {0,1} can feed both targets and clear out
  Distribution d = concentrated(4, 0, 6);
  CHECK(solve(g, lab, d, {}).solvable);
  SolveOutcome r = solve(g, lab, d, recv);
  REQUIRE(r.solvable);
  ReplayResult rep = replay(g, lab, d, r.certificate, recv);
  CHECK(rep.ok);

  // resting counts accept a pre-covered board, must-receive does not:
  // two pebbles resting on {0,2} cover it, but {0,4} never receives
  Distribution rest = dist({0, 2, 0, 1});
  CHECK(solve(g, lab, rest, {}).solvable);
  CHECK(!solve(g, lab, rest, recv).solvable);
}

TEST_CASE("replay flags tampered certificates") {
  auto [g, lab] = family_instance(Family::Star, 4);
  Distribution d = concentrated(4, 0, 4);
  SolveOutcome r = solve(g, lab, d, {});
  REQUIRE(r.solvable);
  REQUIRE(!r.certificate.empty());

  auto tampered = r.certificate;
  tampered[0].to = tampered[0].from;  // an edge is never its own neighbor
  ReplayResult rep = replay(g, lab, d, tampered, {});
  CHECK(!rep.ok);
  REQUIRE(rep.failed_step.has_value());
  CHECK(*rep.failed_step == 0);

  // truncating the tail leaves a non-goal end state
  auto cut = r.certificate;
  cut.pop_back();
  ReplayResult short_rep = replay(g, lab, d, cut, {});
  CHECK(!short_rep.ok);
  REQUIRE(short_rep.failed_step.has_value());
  CHECK(*short_rep.failed_step == cut.size());
}

TEST_CASE("memo cap aborts instead of guessing") {
  auto [g, lab] = family_instance(Family::Comb, 4);
  EdgeId e = g.edge_id(3, 7);
  REQUIRE(e >= 0);
  SolveLimits tiny{10};
  CHECK_THROWS_AS(solve(g, lab, concentrated(g.edge_count(), e, 12), {}, tiny),
                  ResourceLimitError);
}

TEST_CASE("random legal play conserves pebbles minus one per move") {
  std::mt19937 rng(7012);
  for (int iter = 0; iter < 300; ++iter) {
    auto inst = family_instance(Family::Bistar, 2);
    GameSemantics sem;
    sem.parity_rule = iter % 2 ? ParityRule::Always : ParityRule::InitialOnly;
    Distribution d;
    d.counts.assign(inst.g.edge_count(), 0);
    for (EdgeId e = 0; e < inst.g.edge_count(); ++e) {
      int c = static_cast<int>(rng() % 4);
      d.counts[e] = inst.lab.label(e) ? c : 2 * (c / 2);
    }
    long long total = d.total();
    for (int step = 0; step < 8; ++step) {
      auto moves = legal_moves(inst.g, d, inst.lab, sem);
      if (moves.empty()) break;
      d = apply_move(inst.g, d, moves[rng() % moves.size()]);
      --total;
      CHECK(d.total() == total);
      for (int c : d.counts) CHECK(c >= 0);
      if (sem.parity_rule == ParityRule::Always) {
        CHECK(is_restricted(d, inst.lab));
      }
    }
  }
}
