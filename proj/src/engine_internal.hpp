#pragma once

// Board abstraction shared by the labeled game and the unlabeled cover
// variant: which edges must end occupied, which must end empty.  The solver
// core works on boards; the public solve() builds one from a labeling, the
// classic cover scan builds an all-target board.

#include <vector>

#include "pebblekit/engine.hpp"

namespace pebblekit::detail {

struct Board {
  std::vector<std::uint8_t> zero_mask;  // must end empty; start-even
  std::vector<EdgeId> targets;          // must end occupied, ascending
};

Board board_from(const EdgeLabeling& lab);
Board classic_board(int edge_count);

bool board_restricted(const Board& board, const Distribution& d);

// exhaustive solvability on a board; d0 is assumed board-restricted
SolveOutcome solve_board(const Graph& g, const Board& board,
                         const Distribution& d0, GameSemantics sem,
                         const SolveLimits& limits);

// full mechanical validation of a move sequence on a board
bool replay_board(const Graph& g, const Board& board, const Distribution& d0,
                  const std::vector<Move>& moves, GameSemantics sem);

}  // namespace pebblekit::detail
