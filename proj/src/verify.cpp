#include "pebblekit/verify.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pebblekit/io.hpp"

namespace pebblekit {

std::vector<GameSemantics> all_semantics() {
  std::vector<GameSemantics> out;
  for (CoverRule cover : {CoverRule::RestingCounts, CoverRule::MustReceive}) {
    for (ParityRule parity : {ParityRule::InitialOnly, ParityRule::Always}) {
      for (Quantifier quant : {Quantifier::ExactSize,
                               Quantifier::AllSizesAtLeast}) {
        out.push_back({cover, parity, quant});
      }
    }
  }
  return out;
}

std::string semantics_code(GameSemantics sem) {
  std::string out;
  out += sem.cover_rule == CoverRule::RestingCounts ? "resting"
                                                    : "must-receive";
  out += sem.parity_rule == ParityRule::InitialOnly ? "-initial" : "-always";
  out += sem.quantifier == Quantifier::ExactSize ? "-exact" : "-at-least";
  return out;
}

std::optional<GameSemantics> parse_semantics_code(std::string_view code) {
  for (GameSemantics sem : all_semantics()) {
    if (semantics_code(sem) == code) return sem;
  }
  return std::nullopt;
}

FamilyRange supported_range(Family f) {
  switch (f) {
    case Family::Comb: return {2, 8};
    case Family::Star: return {2, 10};
    case Family::SubdividedStar: return {1, 8};
    case Family::Bistar: return {1, 6};
    case Family::SubdividedBistar: return {1, 4};
    case Family::TwoStarsDelta: return {1, 6};
    case Family::DegreeSplitBistar: return {1, 5};
    case Family::StarOfStars: return {1, 5};
  }
  throw std::invalid_argument("unknown family");
}

VerificationRow verify_family(const FamilySpec& spec,
                              const std::vector<GameSemantics>& semantics,
                              int m_cap, int workers, bool use_symmetry,
                              const SolveLimits& limits) {
  FamilyRange range = supported_range(spec.family);
  if (spec.n < range.lo || spec.n > range.hi) {
    throw std::invalid_argument(
        family_name(spec.family) + " is vetted for n in " +
        std::to_string(range.lo) + ".." + std::to_string(range.hi) +
        ", got n=" + std::to_string(spec.n));
  }

  VerificationRow row;
  row.spec = spec;
  row.published = closed_form(spec);
  row.m_cap = m_cap > 0 ? m_cap : static_cast<int>(row.published) + 4;

  Graph g = generate_family(spec);
  EdgeLabeling lab = derive_edge_labels(g, builtin_assignment(spec));

  PsiQuery base;
  base.m_cap = row.m_cap;
  base.workers = workers;
  base.limits = limits;
  base.use_symmetry = use_symmetry;
  if (use_symmetry) base.generators = symmetry_generators(spec, lab);

  for (GameSemantics sem : semantics) {
    VerificationCell cell;
    cell.semantics = sem;
    PsiQuery q = base;
    q.semantics = sem;
    cell.result = psi_ec(g, lab, q);
    cell.match = cell.result.value.has_value() &&
                 *cell.result.value == row.published;
    if (cell.result.value == 1) {
      // back the cell with a worked size-1 example instead of a witness
      auto dists = restricted_distributions(g, lab, 1);
      if (!dists.empty()) {
        cell.example_dist = dists.front();
        SolveOutcome r = solve(g, lab, dists.front(), sem, limits);
        cell.example_moves = r.certificate;
      }
    }
    row.cells.push_back(std::move(cell));
  }
  return row;
}

namespace {

std::string cell_base_name(const VerificationRow& row,
                           const VerificationCell& cell) {
  return family_name(row.spec.family) + "-" + std::to_string(row.spec.n) +
         "-" + semantics_code(cell.semantics);
}

std::string csv_value(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

std::string status_name(PsiStatus s) {
  return s == PsiStatus::Determined ? "determined" : "undetermined_at_cap";
}

// summary.md cell text: value plus match marker, or a dash when unknown
std::string summary_cell(const VerificationCell& cell) {
  if (!cell.result.value) return "-";
  std::string out = std::to_string(*cell.result.value);
  out += cell.match ? " =" : " !";
  if (cell.result.status == PsiStatus::UndeterminedAtCap) out += " (cap)";
  return out;
}

}  // namespace

std::string cell_artifact_path(const VerificationRow& row,
                               const VerificationCell& cell) {
  const PsiResult& r = cell.result;
  if (r.value && *r.value > 1 && r.witness) {
    return "witnesses/" + cell_base_name(row, cell) + ".json";
  }
  if (r.value && *r.value == 1 && cell.example_dist) {
    return "certificates/" + cell_base_name(row, cell) + ".json";
  }
  if (r.cap_counterexample) {
    return "witnesses/" + cell_base_name(row, cell) + ".json";
  }
  return "";
}

std::filesystem::path write_report(const std::vector<VerificationRow>& rows,
                                   const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "witnesses");
  fs::create_directories(dir / "certificates");

  std::ostringstream csv;
  csv << "family,n,paper_value,semantics,oracle_value,status,match,"
         "witness_file,runtime_ms\n";
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      const PsiResult& r = cell.result;
      std::string artifact = cell_artifact_path(row, cell);
      if (!artifact.empty()) {
        if (r.value && *r.value == 1) {
          // worked example: the start plus the validated moves
          std::ostringstream body;
          body << "{\n  \"counts\": [";
          const auto& c = cell.example_dist->counts;
          for (std::size_t i = 0; i < c.size(); ++i) {
            body << (i ? ", " : "") << c[i];
          }
          body << "],\n  \"moves\": [";
          for (std::size_t i = 0; i < cell.example_moves.size(); ++i) {
            const Move& m = cell.example_moves[i];
            body << (i ? ", " : "") << "[" << m.from << ", " << m.to << "]";
          }
          body << "]\n}\n";
          write_text_file(dir / artifact, body.str());
        } else {
          const Distribution& d =
              (r.value && *r.value > 1) ? *r.witness : *r.cap_counterexample;
          write_text_file(dir / artifact, save_distribution(d));
        }
      }
      csv << family_name(row.spec.family) << "," << row.spec.n << ","
          << row.published << "," << semantics_code(cell.semantics) << ","
          << csv_value(r.value) << "," << status_name(r.status) << ","
          << (cell.match ? "true" : "false") << "," << artifact << ","
          << r.nodes / 1000 << "\n";
    }
  }
  write_text_file(dir / "report.csv", csv.str());

  std::ostringstream md;
  md << "# Closed-form verification\n\n";
  md << "Exhaustive scan values per semantics; `=` marks agreement with the\n"
        "published value, `!` disagreement, `(cap)` a cap-relative value.\n"
        "The runtime column of report.csv is a deterministic work measure\n"
        "(solver states / 1000), not wall-clock time.\n";
  Family last_family{};
  bool first = true;
  for (const auto& row : rows) {
    if (first || row.spec.family != last_family) {
      md << "\n## " << family_name(row.spec.family) << "\n\n";
      md << "| n | published | cap |";
      for (const auto& cell : row.cells) {
        md << " " << semantics_code(cell.semantics) << " |";
      }
      md << "\n|---|-----------|-----|";
      for (std::size_t i = 0; i < row.cells.size(); ++i) md << "---|";
      md << "\n";
      last_family = row.spec.family;
      first = false;
    }
    md << "| " << row.spec.n << " | " << row.published << " | " << row.m_cap
       << " |";
    for (const auto& cell : row.cells) {
      md << " " << summary_cell(cell) << " |";
    }
    md << "\n";
  }
  write_text_file(dir / "summary.md", md.str());

  return dir / "report.csv";
}

}  // namespace pebblekit
