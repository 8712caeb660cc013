// no3q: solve, verify, refute and audit placements for the queens
// no-3-in-a-line problem.
//
// Structured results go to stdout as one JSON document; summaries go to
// stderr. Exit codes:
//   0  success / placement verified good
//   1  placement verified not good (witness in the document)
//   2  placement refuted by a polynomial certificate
//   3  usage error
//   4  unreadable or invalid placement file
//   5  operation not applicable (placement too large, three in a line)
//   6  search inconclusive (node budget exhausted or interrupted)
//   7  internal error

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "queens/board.hpp"
#include "queens/elementary.hpp"
#include "queens/errors.hpp"
#include "queens/io.hpp"
#include "queens/nullstellensatz.hpp"
#include "queens/search.hpp"
#include "queens/table.hpp"
#include "queens/verifier.hpp"

namespace {

using nlohmann::json;
using namespace queens;

enum Exit : int {
  kOk = 0,
  kNotGood = 1,
  kRefuted = 2,
  kUsage = 3,
  kBadInput = 4,
  kNotApplicable = 5,
  kInconclusive = 6,
  kInternal = 7,
};

// Caps --workers when set.
constexpr const char* kWorkerCapVariable = "NO3Q_MAX_WORKERS";

std::atomic<bool> g_cancel{false};

extern "C" void on_signal(int) { g_cancel.store(true); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedDocumentError("cannot open '" + path + "'", "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int capped_workers(int requested) {
  if (const char* cap = std::getenv(kWorkerCapVariable)) {
    const int limit = std::atoi(cap);
    if (limit >= 1 && requested > limit) return limit;
  }
  return requested;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

struct SearchOptions {
  int k = 3;
  int workers = 1;
  std::uint64_t node_budget = 0;
  bool no_symmetry = false;
  bool no_prune = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--k", k, "line threshold (no k queens in a line)")->check(CLI::Range(2, 64));
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", node_budget, "stop after this many nodes (0 = unlimited)");
    cmd->add_flag("--no-symmetry", no_symmetry, "disable dihedral symmetry reduction");
    cmd->add_flag("--no-prune", no_prune, "disable the dominance prune");
  }

  SearchConfig config() const {
    SearchConfig c;
    c.k = k;
    c.workers = capped_workers(workers);
    if (node_budget > 0) c.node_budget = node_budget;
    c.symmetry_reduction = !no_symmetry;
    c.dominance_prune = !no_prune;
    c.cancel = &g_cancel;
    return c;
  }

  json echo() const {
    return {{"k", k}, {"workers", capped_workers(workers)}, {"node_budget", node_budget},
            {"symmetry_reduction", !no_symmetry}, {"dominance_prune", !no_prune}};
  }
};

int cmd_solve(int n, const SearchOptions& opts) {
  SearchResult r = solve_min_good(n, opts.config());
  if (g_cancel.load()) throw InconclusiveError("interrupted", 0);
  json args = opts.echo();
  args["n"] = n;
  emit({{"command", "solve"}, {"args", args}, {"result", to_json(r)}});
  std::cerr << "m_" << r.k << "(" << n << ") = " << r.minimum << "  (" << r.stats.nodes
            << " nodes, " << r.stats.elapsed_seconds << " s)\n"
            << render_board(r.witness, RenderFormat::Ascii) << '\n';
  return kOk;
}

int cmd_verify(const std::string& file) {
  const PlacementDocument doc = parse_placement_document(read_file(file));
  const VerifyReport report = verify(doc.placement);
  json witness = nullptr;
  if (report.violating_line)
    witness = {{"violating_line", to_json(*report.violating_line)}};
  else if (!report.addable.empty())
    witness = {{"addable_square", json::array({report.addable.front().x, report.addable.front().y})}};
  emit({{"command", "verify"},
        {"args", {{"file", file}}},
        {"placement", to_json(doc)},
        {"report", to_json(report)},
        {"witness", witness}});
  if (report.good) {
    std::cerr << "good placement of " << doc.placement.size() << " queens\n";
    return kOk;
  }
  if (report.violating_line)
    std::cerr << "not good: three queens on " << to_string(*report.violating_line) << '\n';
  else
    std::cerr << "not good: a queen can be added at " << to_string(report.addable.front()) << '\n';
  return kNotGood;
}

int cmd_refute(const std::string& file) {
  const Placement p = parse_placement(read_file(file));
  const CnCertificate cert = refute_goodness(p);
  const std::string recheck = check_certificate(cert, p);
  if (!recheck.empty()) throw PlannerError("certificate failed its own recheck: " + recheck);
  emit({{"command", "refute"},
        {"args", {{"file", file}}},
        {"placement", to_json(p)},
        {"certificate", to_json(cert)}});
  std::cerr << "not good: coefficient of x^" << cert.plan.t1 << " y^" << cert.plan.t2 << " is "
            << cert.coefficient << ", a queen can be added at " << to_string(cert.witness)
            << '\n';
  return kRefuted;
}

int cmd_audit(const std::string& file) {
  const Placement p = parse_placement(read_file(file));
  const AuditReport rep = audit(p);
  emit({{"command", "audit"}, {"args", {{"file", file}}}, {"placement", to_json(p)},
        {"audit", to_json(rep)}});
  std::cerr << "q=" << rep.q << " q''=" << rep.q_dd << " c=" << rep.c << " r=" << rep.r
            << (rep.rotated ? " (rotated)" : "") << (rep.good ? " good" : " not good") << '\n';
  return kOk;
}

int cmd_table(int max_n, const SearchOptions& opts) {
  const auto entries = run_table(max_n, opts.config());
  if (g_cancel.load()) throw InconclusiveError("interrupted", 0);
  json rows = json::array();
  bool complete = true;
  for (const auto& e : entries) {
    rows.push_back(to_json(e));
    complete = complete && e.exact();
  }
  json args = opts.echo();
  args["max_n"] = max_n;
  emit({{"command", "table"}, {"args", args}, {"complete", complete}, {"entries", rows}});
  std::cerr << format_table(entries, opts.k);
  return complete ? kOk : kInconclusive;
}

int cmd_render(const std::string& file, const std::string& format) {
  const Placement p = parse_placement(read_file(file));
  const auto fmt = format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  std::cout << render_board(p, fmt);
  if (fmt == RenderFormat::Ascii) std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum no-3-in-a-line queens: solver, verifier and certificates"};
  app.require_subcommand(1);

  int n = 0;
  int max_n = 0;
  std::string file;
  std::string format = "ascii";
  SearchOptions solve_opts, table_opts;

  auto* solve = app.add_subcommand("solve", "compute m_k(n) with a witness");
  solve->add_option("--n", n, "board side")->required()->check(CLI::Range(1, kMaxSearchSide));
  solve_opts.add_to(solve);

  auto* verify_cmd = app.add_subcommand("verify", "check a placement for goodness");
  verify_cmd->add_option("--file", file, "placement JSON")->required();

  auto* refute = app.add_subcommand("refute", "certificate that a small placement is not good");
  refute->add_option("--file", file, "placement JSON")->required();

  auto* audit_cmd = app.add_subcommand("audit", "row/column counting audit of a placement");
  audit_cmd->add_option("--file", file, "placement JSON")->required();

  auto* table = app.add_subcommand("table", "tabulate m_k(n) for n = 1..max-n");
  table->add_option("--max-n", max_n, "largest board side")->required()->check(
      CLI::Range(1, kMaxSearchSide));
  table_opts.add_to(table);

  auto* render = app.add_subcommand("render", "draw a placement");
  render->add_option("--file", file, "placement JSON")->required();
  render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  try {
    if (*solve) return cmd_solve(n, solve_opts);
    if (*verify_cmd) return cmd_verify(file);
    if (*refute) return cmd_refute(file);
    if (*audit_cmd) return cmd_audit(file);
    if (*table) return cmd_table(max_n, table_opts);
    if (*render) return cmd_render(file, format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const BoundNotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const InvalidPlacementError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what();
    if (e.lower > 0) {
      std::cerr << " (m in [" << e.lower << ",";
      if (e.upper) std::cerr << *e.upper;
      else std::cerr << "?";
      std::cerr << "])";
    }
    std::cerr << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
