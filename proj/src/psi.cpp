// The size scan behind psi_ec and classic_cover_number.  Each size m is
// decided by solving every enumerated distribution of that size.  With
// several workers the distributions are claimed from a shared queue; the
// verdict, the counterexample and the reported work metrics depend only on
// the enumeration order, never on scheduling.

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "engine_internal.hpp"
#include "pebblekit/psi.hpp"

namespace pebblekit {

namespace {

struct SizeScan {
  bool all_solvable = true;
  std::optional<Distribution> counterexample;  // least enumeration index
  long long nodes = 0;         // summed over the deterministic index set
  long long solvable_count = 0;
};

// Decide one size.  The deterministic index set is: every index when all
// distributions solve, otherwise the indices up to and including the first
// unsolvable one.  Workers may race past that point; their results are
// discarded, so the scan's observable output is scheduling-independent.
SizeScan scan_size(const Graph& g, const detail::Board& board,
                   GameSemantics sem, const std::vector<Distribution>& dists,
                   int workers, const SolveLimits& limits) {
  SizeScan out;
  std::size_t n = dists.size();
  if (n == 0) return out;

  constexpr long long kNone = std::numeric_limits<long long>::max();
  std::vector<long long> nodes(n, 0);
  std::vector<char> solvable(n, 0);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<long long> first_bad{kNone};
  std::atomic<std::size_t> cursor{0};

  auto work = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      if (static_cast<long long>(i) > first_bad.load()) continue;
      try {
        SolveOutcome r = detail::solve_board(g, board, dists[i], sem, limits);
        nodes[i] = r.nodes;
        if (r.solvable) {
          // certificates are validated on the spot; a failure here would be
          // a solver defect, not an input problem
          if (!detail::replay_board(g, board, dists[i], r.certificate, sem)) {
            throw std::logic_error("solver produced an invalid certificate");
          }
          solvable[i] = 1;
        } else {
          long long expect = first_bad.load();
          while (static_cast<long long>(i) < expect &&
                 !first_bad.compare_exchange_weak(expect,
                                                  static_cast<long long>(i))) {
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
        // treat like a stopper so sequential and parallel runs agree on
        // which error (the least-index one) is reported
        long long expect = first_bad.load();
        while (static_cast<long long>(i) < expect &&
               !first_bad.compare_exchange_weak(expect,
                                                static_cast<long long>(i))) {
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // the earliest index that failed to solve or to run decides everything
  long long stop = first_bad.load();
  for (long long i = 0; i < static_cast<long long>(n) && i <= stop; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  if (stop == kNone) {
    out.all_solvable = true;
    out.solvable_count = static_cast<long long>(n);
    for (long long v : nodes) out.nodes += v;
  } else {
    out.all_solvable = false;
    out.counterexample = dists[static_cast<std::size_t>(stop)];
    out.solvable_count = stop;
    for (long long i = 0; i <= stop; ++i) out.nodes += nodes[i];
  }
  return out;
}

struct ScanInputs {
  const Graph& g;
  const detail::Board& board;
  GameSemantics sem;
  int m_cap;
  int workers;
  const SolveLimits& limits;
  // enumeration source for one size
  std::function<std::vector<Distribution>(int)> enumerate;
};

// run the full 1..m_cap scan and fold the per-size verdicts into a result
PsiResult run_scan(const ScanInputs& in) {
  PsiResult res;
  res.convention = in.sem;
  bool exact = in.sem.quantifier == Quantifier::ExactSize;
  std::map<int, Distribution> bad_at;
  std::vector<char> good(in.m_cap + 1, 0);
  int scanned = 0;
  for (int m = 1; m <= in.m_cap; ++m) {
    std::vector<Distribution> dists = in.enumerate(m);
    SizeScan scan = scan_size(in.g, in.board, in.sem, dists, in.workers,
                              in.limits);
    res.nodes += scan.nodes;
    res.solvable_checked += scan.solvable_count;
    good[m] = scan.all_solvable;
    if (!scan.all_solvable) bad_at[m] = std::move(*scan.counterexample);
    scanned = m;
    if (exact && scan.all_solvable) break;
  }

  if (exact) {
    if (scanned >= 1 && good[scanned]) {
      res.value = scanned;
      res.status = PsiStatus::Determined;
    } else {
      res.status = PsiStatus::UndeterminedAtCap;
      if (auto it = bad_at.find(in.m_cap); it != bad_at.end()) {
        res.cap_counterexample = it->second;
      }
    }
  } else {
    res.status = PsiStatus::UndeterminedAtCap;
    if (good[in.m_cap]) {
      int v = in.m_cap;
      while (v > 1 && good[v - 1]) --v;
      res.value = v;
    } else if (auto it = bad_at.find(in.m_cap); it != bad_at.end()) {
      res.cap_counterexample = it->second;
    }
  }
  if (res.value && *res.value > 1) {
    auto it = bad_at.find(*res.value - 1);
    if (it != bad_at.end()) res.witness = it->second;
  }
  return res;
}

}  // namespace

PsiResult psi_ec(const Graph& g, const EdgeLabeling& lab, const PsiQuery& q) {
  if (static_cast<int>(lab.labels().size()) != g.edge_count()) {
    throw std::invalid_argument("labeling does not fit the graph");
  }
  if (!lab.balanced()) {
    throw std::invalid_argument(
        "labeling is not balanced: |e0 - e1| exceeds 1");
  }
  if (q.m_cap < 1) {
    throw std::invalid_argument("m_cap must be at least 1");
  }
  if (q.workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  detail::Board board = detail::board_from(lab);
  const std::vector<EdgePermutation>* gens =
      q.use_symmetry ? &q.generators : nullptr;
  ScanInputs in{g,         board,      q.semantics, q.m_cap,
                q.workers, q.limits,   {}};
  in.enumerate = [&](int m) {
    return restricted_distributions(g, lab, m, gens);
  };
  return run_scan(in);
}

long long closed_form(const FamilySpec& spec) {
  if (spec.n < (spec.family == Family::Comb ? 2 : 1)) {
    throw std::invalid_argument("family size out of range");
  }
  long long n = spec.n;
  switch (spec.family) {
    case Family::Comb:
      return (1LL << n) - 2;
    case Family::Star:
      return n % 2 == 1 ? n - 1 : n;
    case Family::SubdividedStar:
      return 4 * n - 2;
    case Family::Bistar:
      return n % 2 == 1 ? 3 * n + 3 : 3 * n;
    case Family::SubdividedBistar:
      return 20 * n + 6;
    case Family::TwoStarsDelta:
      return n % 2 == 1 ? 3 * n + 3 : 3 * n + 2;
    case Family::DegreeSplitBistar:
      return 8 * n + 2;
    case Family::StarOfStars:
      return n % 2 == 1 ? 9 * n + 11 : 9 * n + 4;
  }
  throw std::invalid_argument("unknown family");
}

std::optional<int> classic_cover_number(const Graph& g, int m_cap, int workers,
                                        const SolveLimits& limits) {
  if (m_cap < 1) {
    throw std::invalid_argument("m_cap must be at least 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  detail::Board board = detail::classic_board(g.edge_count());
  GameSemantics sem;  // resting counts, initial-only, exact size
  ScanInputs in{g, board, sem, m_cap, workers, limits, {}};
  // no labeling here: every count vector of size m participates
  in.enumerate = [&](int m) {
    std::vector<Distribution> out;
    Distribution d;
    d.counts.assign(g.edge_count(), 0);
    int ecount = g.edge_count();
    if (ecount == 0) return out;
    auto rec = [&](auto&& self, int e, int remaining) -> void {
      if (e == ecount - 1) {
        d.counts[e] = remaining;
        out.push_back(d);
        d.counts[e] = 0;
        return;
      }
      for (int c = 0; c <= remaining; ++c) {
        d.counts[e] = c;
        self(self, e + 1, remaining - c);
      }
      d.counts[e] = 0;
    };
    rec(rec, 0, m);
    return out;
  };
  PsiResult res = run_scan(in);
  if (res.status == PsiStatus::Determined) return res.value;
  return std::nullopt;
}

}  // namespace pebblekit
