#pragma once

// The threshold question: the least pebble count m such that every
// restricted distribution of size m is solvable.  psi_ec scans sizes
// 1..m_cap, deciding each size by exhaustive enumeration; the two
// quantifiers read the per-size verdicts differently.

#include <functional>
#include <optional>
#include <vector>

#include "pebblekit/engine.hpp"

namespace pebblekit {

struct PsiQuery {
  GameSemantics semantics{};
  int m_cap = 1;  // highest size scanned (inclusive)
  bool use_symmetry = false;
  // consulted when use_symmetry is set: enumeration then visits only the
  // lexicographically least member of each orbit under these generators
  std::vector<EdgePermutation> generators;
  int workers = 1;
  SolveLimits limits{};
};

enum class PsiStatus {
  Determined,         // the value is exact
  UndeterminedAtCap,  // the scan hit m_cap; any value is cap-relative
};

struct PsiResult {
  std::optional<int> value;
  PsiStatus status = PsiStatus::UndeterminedAtCap;
  // an unsolvable distribution of size value-1, when value > 1
  std::optional<Distribution> witness;
  // an unsolvable distribution of size m_cap, when even the cap size fails
  std::optional<Distribution> cap_counterexample;
  // solvable instances whose certificates were replay-validated, summed over
  // the deterministic portion of the scan (independent of worker count)
  long long solvable_checked = 0;
  long long nodes = 0;  // solver states visited, same deterministic portion
  GameSemantics convention{};
};

// pre: the labeling is balanced and m_cap >= 1
PsiResult psi_ec(const Graph& g, const EdgeLabeling& lab, const PsiQuery& q);

// Visits every distribution of size total that is even on all 0-labeled
// edges, in ascending lexicographic order of the count vector.  The visitor
// returns false to stop early.  With generators, only orbit minima are
// visited (still in ascending order).
void enumerate_restricted(
    const Graph& g, const EdgeLabeling& lab, int total,
    const std::function<bool(const Distribution&)>& visit,
    const std::vector<EdgePermutation>* generators = nullptr);

// convenience: the full list from enumerate_restricted
std::vector<Distribution> restricted_distributions(
    const Graph& g, const EdgeLabeling& lab, int total,
    const std::vector<EdgePermutation>* generators = nullptr);

// The published closed-form prediction for a family instance.
long long closed_form(const FamilySpec& spec);

// The unlabeled analogue on an arbitrary graph: least m such that every
// distribution of size m can cover every edge simultaneously (no parity
// restriction, no empty-edge requirement).  Empty when undecided at m_cap.
std::optional<int> classic_cover_number(const Graph& g, int m_cap,
                                        int workers = 1,
                                        const SolveLimits& limits = {});

}  // namespace pebblekit
