#include "pebblekit/engine.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "engine_internal.hpp"

namespace pebblekit {

namespace {

void check_distribution_shape(const Graph& g, const Distribution& d) {
  if (static_cast<int>(d.counts.size()) != g.edge_count()) {
    throw std::invalid_argument("distribution has " +
                                std::to_string(d.counts.size()) +
                                " entries for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (d.counts[i] < 0) {
      throw std::invalid_argument("negative count on edge " +
                                  std::to_string(i));
    }
  }
}

void check_edge_range(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) {
    throw std::invalid_argument("edge id " + std::to_string(e) +
                                " out of range");
  }
}

bool adjacent(const Graph& g, EdgeId a, EdgeId b) {
  const auto& nb = g.line_neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

// the general form of the intermediate parity rule: after playing m, every
// 0-labeled edge must hold an even count; the source edge loses two pebbles,
// so only m.to can change parity
bool move_keeps_zeros_even(const Distribution& d,
                           const std::vector<EdgeId>& zero_edges, Move m) {
  for (EdgeId z : zero_edges) {
    int c = d.counts[z] + (z == m.to ? 1 : 0);
    if (c % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool is_restricted(const Distribution& d, const EdgeLabeling& lab) {
  if (d.counts.size() != lab.labels().size()) {
    throw std::invalid_argument("distribution has " +
                                std::to_string(d.counts.size()) +
                                " entries for " +
                                std::to_string(lab.labels().size()) +
                                " edges");
  }
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (d.counts[i] < 0) {
      throw std::invalid_argument("negative count on edge " +
                                  std::to_string(i));
    }
    if (lab.labels()[i] == 0 && d.counts[i] % 2 != 0) return false;
  }
  return true;
}

Distribution apply_move(const Graph& g, const Distribution& d, Move m) {
  check_distribution_shape(g, d);
  check_edge_range(g, m.from);
  check_edge_range(g, m.to);
  if (!adjacent(g, m.from, m.to)) {
    throw std::invalid_argument("edges " + std::to_string(m.from) + " and " +
                                std::to_string(m.to) +
                                " share no endpoint");
  }
  if (d.counts[m.from] < 2) {
    throw std::invalid_argument("edge " + std::to_string(m.from) +
                                " holds fewer than two pebbles");
  }
  Distribution out = d;
  out.counts[m.from] -= 2;
  out.counts[m.to] += 1;
  return out;
}

std::vector<Move> legal_moves(const Graph& g, const Distribution& d,
                              const EdgeLabeling& lab, GameSemantics sem) {
  check_distribution_shape(g, d);
  if (static_cast<int>(lab.labels().size()) != g.edge_count()) {
    throw std::invalid_argument("labeling does not fit the graph");
  }
  std::vector<Move> out;
  for (EdgeId from = 0; from < g.edge_count(); ++from) {
    if (d.counts[from] < 2) continue;
    for (EdgeId to : g.line_neighbors(from)) {
      Move m{from, to};
      if (sem.parity_rule == ParityRule::Always &&
          !move_keeps_zeros_even(d, lab.zero_edges(), m)) {
        continue;
      }
      out.push_back(m);
    }
  }
  return out;
}

bool is_goal(const Distribution& d, const EdgeLabeling& lab, GameSemantics sem,
             const std::vector<std::uint8_t>* received) {
  if (d.counts.size() != lab.labels().size()) {
    throw std::invalid_argument("distribution does not fit the labeling");
  }
  for (EdgeId z : lab.zero_edges()) {
    if (d.counts[z] != 0) return false;
  }
  for (EdgeId t : lab.one_edges()) {
    if (d.counts[t] < 1) return false;
  }
  if (sem.cover_rule == CoverRule::MustReceive) {
    for (EdgeId t : lab.one_edges()) {
      if (received == nullptr || !(*received)[t]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// solver core
// ---------------------------------------------------------------------------

namespace detail {

Board board_from(const EdgeLabeling& lab) {
  Board b;
  b.zero_mask.assign(lab.labels().size(), 0);
  for (EdgeId z : lab.zero_edges()) b.zero_mask[z] = 1;
  b.targets = lab.one_edges();
  return b;
}

Board classic_board(int edge_count) {
  Board b;
  b.zero_mask.assign(edge_count, 0);
  b.targets.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) b.targets[e] = e;
  return b;
}

bool board_restricted(const Board& board, const Distribution& d) {
  for (std::size_t e = 0; e < d.counts.size(); ++e) {
    if (board.zero_mask[e] && d.counts[e] % 2 != 0) return false;
  }
  return true;
}

namespace {

class Searcher {
 public:
  Searcher(const Graph& g, const Board& board, const Distribution& d0,
           GameSemantics sem, const SolveLimits& limits)
      : g_(g),
        board_(board),
        limits_(limits),
        edge_count_(g.edge_count()),
        must_receive_(sem.cover_rule == CoverRule::MustReceive),
        always_(sem.parity_rule == ParityRule::Always) {
    counts_.assign(d0.counts.begin(), d0.counts.end());
    total_ = 0;
    for (long long c : counts_) total_ += c;

    target_count_ = static_cast<int>(board.targets.size());
    if (must_receive_ && target_count_ > 64) {
      throw std::invalid_argument(
          "more than 64 target edges cannot be tracked under must-receive");
    }
    target_index_.assign(edge_count_, -1);
    for (int i = 0; i < target_count_; ++i) {
      target_index_[board.targets[i]] = i;
    }
    full_mask_ = target_count_ == 0
                     ? 0
                     : (target_count_ == 64
                            ? ~0ULL
                            : (1ULL << target_count_) - 1);

    zeros_with_pebbles_ = 0;
    for (EdgeId e = 0; e < edge_count_; ++e) {
      if (board.zero_mask[e] && counts_[e] > 0) ++zeros_with_pebbles_;
    }
    uncovered_ = 0;
    for (EdgeId t : board.targets) {
      if (counts_[t] == 0) ++uncovered_;
    }

    // key layout: one fixed-width little-endian count per edge, plus the
    // received mask under must-receive
    count_width_ = total_ < 256 ? 1 : (total_ < 65536 ? 2 : 4);
    key_size_ = static_cast<std::size_t>(edge_count_) * count_width_ +
                (must_receive_ ? 8 : 0);

    build_potentials();
  }

  SolveOutcome run() {
    SolveOutcome out;
    // a 0-labeled edge with pebbles but no exit can never be emptied, and
    // its count cannot change at all; fail before searching
    for (EdgeId e = 0; e < edge_count_; ++e) {
      if (board_.zero_mask[e] && counts_[e] > 0 && !has_exit(e)) {
        out.solvable = false;
        out.nodes = 1;
        nodes_ = 1;
        finish(out);
        return out;
      }
    }
    out.solvable = dfs();
    if (out.solvable) out.certificate = path_;
    finish(out);
    return out;
  }

 private:
  void finish(SolveOutcome& out) {
    out.nodes = nodes_;
    out.memo_hits = memo_hits_;
  }

  bool enterable(EdgeId e) const { return !always_ || !board_.zero_mask[e]; }

  bool has_exit(EdgeId e) const {
    for (EdgeId nb : g_.line_neighbors(e)) {
      if (enterable(nb)) return true;
    }
    return false;
  }

  // Per-target distance tables.  dist[e] is the least number of hops a
  // pebble starting on e needs to land on the target; under the permanent
  // parity rule intermediate landings on 0-labeled edges are impossible,
  // so those edges never relax their neighbors.
  std::vector<int> target_distances(EdgeId t) const {
    std::vector<int> dist(edge_count_, -1);
    std::queue<EdgeId> frontier;
    dist[t] = 0;
    frontier.push(t);
    while (!frontier.empty()) {
      EdgeId f = frontier.front();
      frontier.pop();
      if (!enterable(f) && f != t) continue;  // pebbles cannot land here
      for (EdgeId e : g_.line_neighbors(f)) {
        if (dist[e] < 0) {
          dist[e] = dist[f] + 1;
          frontier.push(e);
        }
      }
    }
    return dist;
  }

  // Weighted pebble potentials, one per target.  A pebble at distance d is
  // worth 2^-d of a resting pebble on the target; reaching the target needs
  // potential >= 1, and no move ever increases the potential.  Everything
  // is scaled by S = 2^(maxdist+2) to stay in exact integer arithmetic.
  // Under must-receive, a not-yet-received target discounts its own resting
  // pebbles to S/4: four of them can leave and bring one back.
  void build_potentials() {
    int max_dist = 0;
    std::vector<std::vector<int>> dists(target_count_);
    for (int i = 0; i < target_count_; ++i) {
      dists[i] = target_distances(board_.targets[i]);
      for (int d : dists[i]) max_dist = std::max(max_dist, d);
    }
    pruning_ = max_dist + 2 < 62;
    if (!pruning_) return;
    scale_ = 1LL << (max_dist + 2);
    w_rest_.assign(target_count_, {});
    w_recv_.assign(target_count_, {});
    pot_rest_.assign(target_count_, 0);
    pot_recv_.assign(target_count_, 0);
    for (int i = 0; i < target_count_; ++i) {
      EdgeId t = board_.targets[i];
      auto& wr = w_rest_[i];
      wr.assign(edge_count_, 0);
      for (EdgeId e = 0; e < edge_count_; ++e) {
        if (dists[i][e] >= 0) wr[e] = scale_ >> dists[i][e];
      }
      if (must_receive_) {
        auto& wv = w_recv_[i];
        wv = wr;
        // resting pebbles on t can only help reception by leaving and
        // returning, which needs an enterable neighbor and costs a factor 4
        wv[t] = has_exit(t) ? scale_ >> 2 : 0;
      }
      for (EdgeId e = 0; e < edge_count_; ++e) {
        pot_rest_[i] += counts_[e] * w_rest_[i][e];
        if (must_receive_) pot_recv_[i] += counts_[e] * w_recv_[i][e];
      }
    }
  }

  bool goal() const {
    if (zeros_with_pebbles_ != 0 || uncovered_ != 0) return false;
    if (must_receive_ && received_ != full_mask_) return false;
    return true;
  }

  bool hopeless() const {
    if (!pruning_) return false;
    for (int i = 0; i < target_count_; ++i) {
      if (pot_rest_[i] < scale_) return true;
      if (must_receive_ && !((received_ >> i) & 1ULL) &&
          pot_recv_[i] < scale_) {
        return true;
      }
    }
    return false;
  }

  std::string encode() const {
    std::string key(key_size_, '\0');
    char* p = key.data();
    for (EdgeId e = 0; e < edge_count_; ++e) {
      auto c = static_cast<std::uint32_t>(counts_[e]);
      std::memcpy(p, &c, count_width_);
      p += count_width_;
    }
    if (must_receive_) std::memcpy(p, &received_, 8);
    return key;
  }

  struct Undo {
    std::uint64_t received;
    int d_zero, d_uncov;
  };

  Undo apply(Move m) {
    Undo u{received_, 0, 0};
    if (board_.zero_mask[m.from] && counts_[m.from] == 2) {
      --zeros_with_pebbles_;
      ++u.d_zero;
    }
    if (board_.zero_mask[m.to] && counts_[m.to] == 0) {
      ++zeros_with_pebbles_;
      --u.d_zero;
    }
    if (target_index_[m.from] >= 0 && counts_[m.from] == 2) {
      ++uncovered_;
      --u.d_uncov;
    }
    if (target_index_[m.to] >= 0 && counts_[m.to] == 0) {
      --uncovered_;
      ++u.d_uncov;
    }
    counts_[m.from] -= 2;
    counts_[m.to] += 1;
    total_ -= 1;
    if (must_receive_ && target_index_[m.to] >= 0) {
      received_ |= 1ULL << target_index_[m.to];
    }
    if (pruning_) {
      for (int i = 0; i < target_count_; ++i) {
        pot_rest_[i] += w_rest_[i][m.to] - 2 * w_rest_[i][m.from];
        if (must_receive_) {
          pot_recv_[i] += w_recv_[i][m.to] - 2 * w_recv_[i][m.from];
        }
      }
    }
    return u;
  }

  void undo(Move m, const Undo& u) {
    counts_[m.from] += 2;
    counts_[m.to] -= 1;
    total_ += 1;
    received_ = u.received;
    zeros_with_pebbles_ += u.d_zero;
    uncovered_ += u.d_uncov;
    if (pruning_) {
      for (int i = 0; i < target_count_; ++i) {
        pot_rest_[i] -= w_rest_[i][m.to] - 2 * w_rest_[i][m.from];
        if (must_receive_) {
          pot_recv_[i] -= w_recv_[i][m.to] - 2 * w_recv_[i][m.from];
        }
      }
    }
  }

  bool dfs() {
    ++nodes_;
    if (goal()) return true;
    if (hopeless()) return false;
    std::string key = encode();
    if (failed_.contains(key)) {
      ++memo_hits_;
      return false;
    }
    for (EdgeId from = 0; from < edge_count_; ++from) {
      if (counts_[from] < 2) continue;
      for (EdgeId to : g_.line_neighbors(from)) {
        // under the permanent parity rule every 0-labeled edge stays even,
        // so landing on one is never legal
        if (!enterable(to)) continue;
        Move m{from, to};
        Undo u = apply(m);
        path_.push_back(m);
        if (dfs()) return true;
        path_.pop_back();
        undo(m, u);
      }
    }
    if (failed_.size() >= limits_.memo_cap) {
      throw ResourceLimitError(
          "failed-state memo exceeded " + std::to_string(limits_.memo_cap) +
          " entries; raise PEBBLEKIT_MEMO_CAP to search further");
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  const Board& board_;
  SolveLimits limits_;
  int edge_count_;
  bool must_receive_, always_;

  std::vector<long long> counts_;
  long long total_ = 0;
  std::uint64_t received_ = 0, full_mask_ = 0;
  int target_count_ = 0;
  std::vector<int> target_index_;
  int zeros_with_pebbles_ = 0, uncovered_ = 0;

  bool pruning_ = false;
  long long scale_ = 0;
  std::vector<std::vector<long long>> w_rest_, w_recv_;
  std::vector<long long> pot_rest_, pot_recv_;

  int count_width_ = 1;
  std::size_t key_size_ = 0;
  std::unordered_set<std::string> failed_;
  long long nodes_ = 0, memo_hits_ = 0;
  std::vector<Move> path_;
};

}  // namespace

SolveOutcome solve_board(const Graph& g, const Board& board,
                         const Distribution& d0, GameSemantics sem,
                         const SolveLimits& limits) {
  Searcher searcher(g, board, d0, sem, limits);
  return searcher.run();
}

bool replay_board(const Graph& g, const Board& board, const Distribution& d0,
                  const std::vector<Move>& moves, GameSemantics sem) {
  Distribution cur = d0;
  std::vector<std::uint8_t> received(g.edge_count(), 0);
  for (Move m : moves) {
    if (m.from < 0 || m.from >= g.edge_count() || m.to < 0 ||
        m.to >= g.edge_count() || cur.counts[m.from] < 2 ||
        !adjacent(g, m.from, m.to)) {
      return false;
    }
    if (sem.parity_rule == ParityRule::Always) {
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!board.zero_mask[e]) continue;
        int c = cur.counts[e] + (e == m.to ? 1 : 0);
        if (c % 2 != 0) return false;
      }
    }
    cur.counts[m.from] -= 2;
    cur.counts[m.to] += 1;
    received[m.to] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (board.zero_mask[e] && cur.counts[e] != 0) return false;
  }
  for (EdgeId t : board.targets) {
    if (cur.counts[t] < 1) return false;
    if (sem.cover_rule == CoverRule::MustReceive && !received[t]) return false;
  }
  return true;
}

}  // namespace detail

SolveOutcome solve(const Graph& g, const EdgeLabeling& lab,
                   const Distribution& d0, GameSemantics sem,
                   const SolveLimits& limits) {
  check_distribution_shape(g, d0);
  if (static_cast<int>(lab.labels().size()) != g.edge_count()) {
    throw std::invalid_argument("labeling does not fit the graph");
  }
  if (!is_restricted(d0, lab)) {
    throw std::invalid_argument(
        "distribution is not restricted: odd count on a 0-labeled edge");
  }
  detail::Board board = detail::board_from(lab);
  return detail::solve_board(g, board, d0, sem, limits);
}

ReplayResult replay(const Graph& g, const EdgeLabeling& lab,
                    const Distribution& d0, const std::vector<Move>& moves,
                    GameSemantics sem) {
  check_distribution_shape(g, d0);
  ReplayResult res;
  Distribution cur = d0;
  std::vector<std::uint8_t> received(g.edge_count(), 0);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Move m = moves[i];
    bool legal = m.from >= 0 && m.from < g.edge_count() && m.to >= 0 &&
                 m.to < g.edge_count() && cur.counts[m.from] >= 2 &&
                 adjacent(g, m.from, m.to);
    if (legal && sem.parity_rule == ParityRule::Always) {
      legal = move_keeps_zeros_even(cur, lab.zero_edges(), m);
    }
    if (!legal) {
      res.ok = false;
      res.final_state = std::move(cur);
      res.failed_step = i;
      return res;
    }
    cur.counts[m.from] -= 2;
    cur.counts[m.to] += 1;
    received[m.to] = 1;
  }
  res.ok = is_goal(cur, lab, sem, &received);
  res.final_state = std::move(cur);
  if (!res.ok) res.failed_step = moves.size();
  return res;
}

}  // namespace pebblekit
