// Command line front end.  Everything analytic lives in the library; this
// file parses flags, moves bytes, and maps failures onto exit codes:
// 0 success, 1 bad input, 2 resource limit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pebblekit/io.hpp"
#include "pebblekit/psi.hpp"
#include "pebblekit/verify.hpp"

namespace {

using namespace pebblekit;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

SolveLimits limits_from_env() {
  SolveLimits limits;
  if (const char* raw = std::getenv("PEBBLEKIT_MEMO_CAP")) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(raw, &pos);
      if (pos != std::string(raw).size() || v < 1) {
        throw std::invalid_argument("");
      }
      limits.memo_cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "PEBBLEKIT_MEMO_CAP must be a positive integer, got \"" +
          std::string(raw) + "\"");
    }
  }
  return limits;
}

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f) {
    std::string known;
    for (Family k : kAllFamilies) {
      if (!known.empty()) known += ", ";
      known += family_name(k);
    }
    throw std::invalid_argument("unknown family \"" + name + "\" (one of " +
                                known + ")");
  }
  return *f;
}

GameSemantics semantics_args(const std::string& cover,
                             const std::string& parity,
                             const std::string& quantifier) {
  GameSemantics sem;
  if (cover == "resting") {
    sem.cover_rule = CoverRule::RestingCounts;
  } else if (cover == "must-receive") {
    sem.cover_rule = CoverRule::MustReceive;
  } else {
    throw std::invalid_argument("--cover-rule must be resting|must-receive");
  }
  if (parity == "initial") {
    sem.parity_rule = ParityRule::InitialOnly;
  } else if (parity == "always") {
    sem.parity_rule = ParityRule::Always;
  } else {
    throw std::invalid_argument("--parity must be initial|always");
  }
  if (quantifier == "exact") {
    sem.quantifier = Quantifier::ExactSize;
  } else if (quantifier == "at-least") {
    sem.quantifier = Quantifier::AllSizesAtLeast;
  } else {
    throw std::invalid_argument("--quantifier must be exact|at-least");
  }
  return sem;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--n-range expects \"lo..hi\", got \"" + text +
                                "\"");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_generate(const std::string& family, int n, const std::string& out) {
  FamilySpec spec{family_arg(family), n};
  Graph g = generate_family(spec);
  write_text_file(out, save_graph(g));
  std::cout << "graph " << family_name(spec.family) << " n=" << n << ": "
            << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges -> " << out << "\n";
  return kExitOk;
}

int cmd_label(const std::string& family, int n, const std::string& check,
              const std::string& out) {
  FamilySpec spec{family_arg(family), n};
  Graph g = generate_family(spec);
  VertexAssignment a = check.empty()
                           ? builtin_assignment(spec)
                           : load_assignment(read_text_file(check));
  EdgeLabeling lab = derive_edge_labels(g, a);  // rejects non-bijections
  std::cout << "sdc: " << (lab.balanced() ? "true" : "false")
            << " (e0=" << lab.zero_count() << ", e1=" << lab.one_count()
            << ")\n";
  if (!out.empty()) {
    write_text_file(out, save_assignment(a));
    std::cout << "assignment -> " << out << "\n";
  }
  return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& labeling_path,
              const std::string& dist_path, const std::string& cover,
              const std::string& parity, const std::string& cert_path) {
  GameSemantics sem = semantics_args(cover, parity, "exact");
  Graph g = load_graph(read_text_file(graph_path));
  VertexAssignment a = load_assignment(read_text_file(labeling_path));
  EdgeLabeling lab = derive_edge_labels(g, a);
  Distribution d = load_distribution(read_text_file(dist_path));
  SolveOutcome r = solve(g, lab, d, sem, limits_from_env());
  std::cout << "solvable: " << (r.solvable ? "true" : "false") << "\n";
  if (r.solvable) std::cout << "moves: " << r.certificate.size() << "\n";
  std::cout << "nodes: " << r.nodes << "\n";
  if (r.solvable && !cert_path.empty()) {
    write_text_file(cert_path, save_certificate(r.certificate));
    std::cout << "certificate -> " << cert_path << "\n";
  }
  return kExitOk;
}

int cmd_psi(const std::string& family, int n, const std::string& cover,
            const std::string& parity, const std::string& quantifier, int cap,
            const std::string& symmetry, int workers,
            const std::string& out_dir) {
  FamilySpec spec{family_arg(family), n};
  Graph g = generate_family(spec);
  EdgeLabeling lab = derive_edge_labels(g, builtin_assignment(spec));

  PsiQuery q;
  q.semantics = semantics_args(cover, parity, quantifier);
  q.m_cap = cap > 0 ? cap : static_cast<int>(closed_form(spec)) + 4;
  q.workers = workers;
  q.limits = limits_from_env();
  if (symmetry == "on") {
    q.use_symmetry = true;
    q.generators = symmetry_generators(spec, lab);
  } else if (symmetry != "off") {
    throw std::invalid_argument("--symmetry must be on|off");
  }

  PsiResult res = psi_ec(g, lab, q);
  std::cout << "family: " << family_name(spec.family) << "\n";
  std::cout << "n: " << n << "\n";
  std::cout << "semantics: " << semantics_code(q.semantics) << "\n";
  std::cout << "cap: " << q.m_cap << "\n";
  if (res.value) {
    std::cout << "value: " << *res.value << "\n";
  } else {
    std::cout << "value: none\n";
  }
  std::cout << "status: "
            << (res.status == PsiStatus::Determined ? "determined"
                                                    : "undetermined_at_cap")
            << "\n";
  std::cout << "checked: " << res.solvable_checked << "\n";
  std::cout << "nodes: " << res.nodes << "\n";

  const Distribution* to_write = nullptr;
  const char* kind = nullptr;
  if (res.witness) {
    to_write = &*res.witness;
    kind = "witness";
  } else if (res.cap_counterexample) {
    to_write = &*res.cap_counterexample;
    kind = "cap-counterexample";
  }
  if (to_write != nullptr) {
    std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
    std::filesystem::create_directories(dir);
    std::filesystem::path file =
        dir / ("psi-" + family_name(spec.family) + "-" + std::to_string(n) +
               "-" + semantics_code(q.semantics) + "-" + kind + ".json");
    write_text_file(file, save_distribution(*to_write));
    std::cout << kind << ": " << file.string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& families_arg, const std::string& n_range,
               const std::string& report_dir, const std::string& semantics_only,
               const std::string& symmetry, int workers, int cap) {
  std::vector<Family> families;
  if (families_arg == "all") {
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else {
    for (const std::string& name : split_commas(families_arg)) {
      families.push_back(family_arg(name));
    }
  }
  auto [lo, hi] = parse_range(n_range);

  std::vector<GameSemantics> semantics;
  if (semantics_only.empty()) {
    semantics = all_semantics();
  } else {
    for (const std::string& code : split_commas(semantics_only)) {
      auto sem = parse_semantics_code(code);
      if (!sem) {
        throw std::invalid_argument("unknown semantics code \"" + code + "\"");
      }
      semantics.push_back(*sem);
    }
  }

  bool use_symmetry = false;
  if (symmetry == "on") {
    use_symmetry = true;
  } else if (symmetry != "off") {
    throw std::invalid_argument("--symmetry must be on|off");
  }

  SolveLimits limits = limits_from_env();
  std::vector<VerificationRow> rows;
  int matches = 0, cells = 0;
  for (Family f : families) {
    FamilyRange range = supported_range(f);
    int flo = std::max(lo, range.lo), fhi = std::min(hi, range.hi);
    if (flo > hi || fhi < lo) {
      std::cerr << "note: " << family_name(f) << " has no vetted n in "
                << lo << ".." << hi << ", skipping\n";
      continue;
    }
    for (int n = flo; n <= fhi; ++n) {
      FamilySpec spec{f, n};
      std::cerr << "verifying " << family_name(f) << " n=" << n << " ...\n";
      rows.push_back(
          verify_family(spec, semantics, cap, workers, use_symmetry, limits));
      for (const auto& cell : rows.back().cells) {
        ++cells;
        matches += cell.match ? 1 : 0;
      }
    }
  }
  if (rows.empty()) {
    throw std::invalid_argument("nothing to verify in the requested range");
  }
  std::filesystem::path csv = write_report(rows, report_dir);
  std::cout << "report: " << csv.string() << "\n";
  std::cout << "rows: " << rows.size() << "\n";
  std::cout << "cells: " << cells << "\n";
  std::cout << "matches: " << matches << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge cover pebbling toolkit"};
  app.require_subcommand(1);

  std::string family, out_path, check_path;
  int n = 1;
  auto* generate = app.add_subcommand("generate", "write a family graph file");
  generate->add_option("--family", family, "family name")->required();
  generate->add_option("--n", n, "size parameter")->required();
  generate->add_option("--out", out_path, "output path")->required();

  std::string l_family, l_check, l_out;
  int l_n = 1;
  auto* label = app.add_subcommand(
      "label", "check or emit a balanced vertex assignment");
  label->add_option("--family", l_family, "family name")->required();
  label->add_option("--n", l_n, "size parameter")->required();
  label->add_option("--check", l_check, "assignment file to check instead of "
                                        "the built-in one");
  label->add_option("--out", l_out, "write the assignment here");

  std::string s_graph, s_labeling, s_dist, s_cert;
  std::string s_cover = "resting", s_parity = "initial";
  auto* solve_cmd = app.add_subcommand("solve", "decide one distribution");
  solve_cmd->add_option("--graph", s_graph, "graph file")->required();
  solve_cmd->add_option("--labeling", s_labeling, "assignment file")
      ->required();
  solve_cmd->add_option("--dist", s_dist, "distribution file")->required();
  solve_cmd->add_option("--cover-rule", s_cover, "resting|must-receive");
  solve_cmd->add_option("--parity", s_parity, "initial|always");
  solve_cmd->add_option("--certificate", s_cert, "write the moves here");

  std::string p_family, p_cover = "resting", p_parity = "initial";
  std::string p_quant = "exact", p_symmetry = "off", p_out_dir;
  int p_n = 1, p_cap = 0, p_workers = 1;
  auto* psi_cmd = app.add_subcommand("psi", "scan for the threshold value");
  psi_cmd->add_option("--family", p_family, "family name")->required();
  psi_cmd->add_option("--n", p_n, "size parameter")->required();
  psi_cmd->add_option("--cover-rule", p_cover, "resting|must-receive");
  psi_cmd->add_option("--parity", p_parity, "initial|always");
  psi_cmd->add_option("--quantifier", p_quant, "exact|at-least");
  psi_cmd->add_option("--cap", p_cap, "scan sizes 1..cap (default: published "
                                      "value + 4)");
  psi_cmd->add_option("--symmetry", p_symmetry, "on|off");
  psi_cmd->add_option("--workers", p_workers, "solver threads");
  psi_cmd->add_option("--out-dir", p_out_dir, "where witness files go");

  std::string v_families, v_range, v_report, v_semantics, v_symmetry = "off";
  int v_workers = 1, v_cap = 0;
  auto* verify = app.add_subcommand("verify-formulas",
                                    "compare scans against the closed forms");
  verify->add_option("--families", v_families, "all or a comma list")
      ->required();
  verify->add_option("--n-range", v_range, "lo..hi")->required();
  verify->add_option("--report", v_report, "report directory")->required();
  verify->add_option("--semantics-only", v_semantics,
                     "comma list of semantics codes");
  verify->add_option("--symmetry", v_symmetry, "on|off");
  verify->add_option("--workers", v_workers, "solver threads");
  verify->add_option("--cap", v_cap, "override the per-row scan cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (generate->parsed()) return cmd_generate(family, n, out_path);
    if (label->parsed()) return cmd_label(l_family, l_n, l_check, l_out);
    if (solve_cmd->parsed()) {
      return cmd_solve(s_graph, s_labeling, s_dist, s_cover, s_parity, s_cert);
    }
    if (psi_cmd->parsed()) {
      return cmd_psi(p_family, p_n, p_cover, p_parity, p_quant, p_cap,
                     p_symmetry, p_workers, p_out_dir);
    }
    if (verify->parsed()) {
      return cmd_verify(v_families, v_range, v_report, v_semantics, v_symmetry,
                        v_workers, v_cap);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
