#pragma once

// Systematic comparison of exhaustive psi values against the published
// closed forms, across all eight semantics combinations, with on-disk
// reports whose every cell is backed by a replayable artifact.

#include <filesystem>
#include <string>
#include <vector>

#include "pebblekit/psi.hpp"

namespace pebblekit {

// the 2 x 2 x 2 semantics grid in fixed order (cover, parity, quantifier)
std::vector<GameSemantics> all_semantics();

// short code like "resting-initial-exact" / "must-receive-always-at-least"
std::string semantics_code(GameSemantics sem);
std::optional<GameSemantics> parse_semantics_code(std::string_view code);

struct FamilyRange {
  int lo = 1;
  int hi = 1;
};

// the n range each family is vetted for; verify_family rejects specs
// outside it (generation itself has no such cap)
FamilyRange supported_range(Family f);

struct VerificationCell {
  GameSemantics semantics{};
  PsiResult result;
  bool match = false;  // value determined and equal to the published one
  // backing artifact for value == 1: the first size-1 distribution and a
  // validated certificate for it
  std::optional<Distribution> example_dist;
  std::vector<Move> example_moves;
};

struct VerificationRow {
  FamilySpec spec;
  long long published = 0;
  int m_cap = 0;
  std::vector<VerificationCell> cells;
};

// Runs psi_ec for one family instance under each requested semantics.
// m_cap = 0 means the default cap, published value + 4.
VerificationRow verify_family(const FamilySpec& spec,
                              const std::vector<GameSemantics>& semantics,
                              int m_cap = 0, int workers = 1,
                              bool use_symmetry = false,
                              const SolveLimits& limits = {});

// Writes report.csv, summary.md and the per-cell backing files (witnesses/
// and certificates/) into dir.  Returns the csv path.  All output bytes are
// functions of the rows alone, so identical runs produce identical files.
std::filesystem::path write_report(const std::vector<VerificationRow>& rows,
                                   const std::filesystem::path& dir);

// relative path of the backing file write_report associates with a cell
std::string cell_artifact_path(const VerificationRow& row,
                               const VerificationCell& cell);

}  // namespace pebblekit
