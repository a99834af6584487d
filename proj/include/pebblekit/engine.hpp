#pragma once

// The pebbling game on edges.  A move removes two pebbles from an edge and
// places one on an edge sharing an endpoint.  Starting from a distribution
// that is even on every 0-labeled edge, the goal is a state with every
// 1-labeled edge occupied and every 0-labeled edge empty.  GameSemantics
// selects between the rule variants the solver can play under.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pebblekit/labeling.hpp"

namespace pebblekit {

struct Distribution {
  std::vector<int> counts;  // one per edge, canonical order, all >= 0

  long long total() const {
    long long t = 0;
    for (int c : counts) t += c;
    return t;
  }
  friend bool operator==(const Distribution&, const Distribution&) = default;
};

enum class CoverRule {
  RestingCounts,  // goal judged by final counts alone
  MustReceive,    // additionally, every 1-edge must receive a moved pebble
};

enum class ParityRule {
  InitialOnly,  // evenness on 0-edges constrains the start only
  Always,       // every intermediate state must keep 0-edges even
};

enum class Quantifier {
  ExactSize,        // psi: least m whose size-m distributions all solve
  AllSizesAtLeast,  // psi: least m solvable at every size m..cap
};

struct GameSemantics {
  CoverRule cover_rule = CoverRule::RestingCounts;
  ParityRule parity_rule = ParityRule::InitialOnly;
  Quantifier quantifier = Quantifier::ExactSize;
  friend bool operator==(const GameSemantics&, const GameSemantics&) = default;
};

struct Move {
  EdgeId from = 0;
  EdgeId to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

// Thrown when the solver would exceed its memoization budget.  Deliberately
// distinct from input errors: the caller learns "ran out of room", never a
// wrong verdict.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveLimits {
  std::size_t memo_cap = 50'000'000;  // failed-state entries before giving up
};

struct SolveOutcome {
  bool solvable = false;
  std::vector<Move> certificate;  // moves from start to a goal, if solvable
  long long nodes = 0;            // search states visited
  long long memo_hits = 0;
};

struct ReplayResult {
  bool ok = false;
  Distribution final_state;
  // index of the first illegal move, or the certificate length when all
  // moves applied but the end state is not a goal
  std::optional<std::size_t> failed_step;
};

// counts are even on every 0-labeled edge (and sized to the graph)
bool is_restricted(const Distribution& d, const EdgeLabeling& lab);

// one application of m; throws std::invalid_argument when m is not playable
// from d (fewer than two pebbles, or the edges are not adjacent)
Distribution apply_move(const Graph& g, const Distribution& d, Move m);

// all playable moves in ascending (from, to) order; under ParityRule::Always
// moves that would leave a 0-labeled edge odd are excluded
std::vector<Move> legal_moves(const Graph& g, const Distribution& d,
                              const EdgeLabeling& lab, GameSemantics sem);

// goal test; `received` (one flag per edge) is consulted only under
// CoverRule::MustReceive and defaults to nothing-received-yet
bool is_goal(const Distribution& d, const EdgeLabeling& lab, GameSemantics sem,
             const std::vector<std::uint8_t>* received = nullptr);

// Exhaustive decision of solvability from d0.  Rejects unrestricted starts.
// The search memoizes failed states and prunes states whose weighted pebble
// potential cannot reach some target; both keep the verdict exact.
SolveOutcome solve(const Graph& g, const EdgeLabeling& lab,
                   const Distribution& d0, GameSemantics sem,
                   const SolveLimits& limits = {});

// step-by-step validation of a certificate against the move rules
ReplayResult replay(const Graph& g, const EdgeLabeling& lab,
                    const Distribution& d0, const std::vector<Move>& moves,
                    GameSemantics sem);

}  // namespace pebblekit
