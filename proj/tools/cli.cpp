#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "champagne/canonical.hpp"
#include "champagne/catalog.hpp"
#include "champagne/forbidden.hpp"
#include "champagne/geometry.hpp"
#include "champagne/graph_io.hpp"
#include "champagne/search.hpp"
#include "champagne/signature.hpp"

namespace champagne::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// RAMSEY_JOBS, when set, wins over --jobs.
int resolve_jobs(int flag_value) {
  const char* env = std::getenv("RAMSEY_JOBS");
  if (env == nullptr || *env == '\0') return flag_value;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) {
    throw UsageError(std::string("RAMSEY_JOBS must be a positive integer, got \"") + env + "\"");
  }
  return value;
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << j.dump(2) << '\n';
}

json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return json::parse(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot read " + path);
  return json::parse(file);
}

ForbiddenFamily resolve_family(const std::string& name_or_path) {
  if (name_or_path == "default") return ForbiddenFamily::standard();
  try {
    return load_family(name_or_path);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

struct SearchArgs {
  std::string family = "default";
  int n = 10;
  std::size_t cap = SearchOptions{}.survivor_cap;
  std::string witnesses;
  std::string out;
  bool no_timings = false;
  bool quiet = false;
};

int cmd_search(const SearchArgs& a, int jobs, std::ostream& out, std::ostream& err) {
  ForbiddenFamily family;
  try {
    family = resolve_family(a.family);
  } catch (const std::exception& e) {
    err << "error: bad family: " << e.what() << '\n';
    return kBadInput;
  }

  SearchOptions options;
  options.jobs = jobs;
  options.survivor_cap = a.cap;
  options.keep_witnesses = !a.witnesses.empty();
  if (!a.quiet) options.progress = [&err](const LevelStats& s) { err << format_progress(s) << '\n'; };

  SearchReport report;
  int code = kOk;
  try {
    report = run_search(family, a.n, options);
  } catch (const SurvivorCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    report = e.partial();
    code = kCapExceeded;
  }

  json j = to_json(report, !a.no_timings);
  if (code == kCapExceeded) j["verdict"] = {{"status", "cap_exceeded"}, {"k", report.final_k}};
  write_json(j, a.out, out);

  if (code == kOk && !a.witnesses.empty()) {
    std::ofstream file(a.witnesses);
    if (!file) throw UsageError("cannot write " + a.witnesses);
    for (const auto& g : report.witnesses) file << to_graph6(g) << '\n';
  }
  return code;
}

struct VerifyArgs {
  int trials = 1000;
  std::uint64_t seed = 0;
  bool corrupt = false;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, int jobs, std::ostream& out, std::ostream& err) {
  const std::vector<PatternKind> kinds{PatternKind::cycle(5), PatternKind::cycle(7), PatternKind::cycle(9),
                                       PatternKind::h7()};
  LemmaOptions options;
  options.trials = a.trials;
  options.seed = a.seed;
  options.jobs = jobs;
  options.corrupt = a.corrupt;

  bool all_passed = true;
  json lemmas = json::array();
  for (const auto& kind : kinds) {
    const LemmaReport report = verify_pattern_lemma(kind, options);
    lemmas.push_back(to_json(report));
    if (!report.passed()) {
      all_passed = false;
      err << "FAIL " << kind.name() << ": " << report.failures << " of " << report.trials << " trials\n";
      if (report.first_failure) {
        err << "  trial " << report.first_failure->trial << ": " << report.first_failure->reason << '\n'
            << "  matrix " << matrix_to_json(report.first_failure->matrix).dump() << '\n';
      }
    }
  }

  json references = json::array();
  for (const auto& ref : reference_signatures()) {
    const Signature numeric = signature_float(ref.matrix);
    const bool ok = ref.exact == ref.expected && numeric == ref.expected;
    const auto triple = [](const Signature& s) { return json::array({s.n_plus, s.n_zero, s.n_minus}); };
    references.push_back({{"label", ref.label},
                          {"expected", triple(ref.expected)},
                          {"exact", triple(ref.exact)},
                          {"float", triple(numeric)},
                          {"passed", ok}});
    if (!ok) {
      all_passed = false;
      err << "FAIL reference " << ref.label << ": expected " << to_string(ref.expected) << ", exact "
          << to_string(ref.exact) << ", float " << to_string(numeric) << '\n';
    }
  }

  const json report{{"seed", a.seed},
                    {"trials", a.trials},
                    {"corrupt", a.corrupt},
                    {"lemmas", std::move(lemmas)},
                    {"references", std::move(references)},
                    {"passed", all_passed}};
  write_json(report, a.out, out);
  return all_passed ? kOk : kFailed;
}

struct CheckLinesArgs {
  std::string input = "-";
  bool distances_only = false;
  std::optional<double> tol;
  std::string out;
};

int cmd_check_lines(const CheckLinesArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  LineConfig config;
  try {
    config = read_json(a.input, in).get<LineConfig>();
  } catch (const std::exception& e) {
    err << "error: cannot parse line configuration: " << e.what() << '\n';
    return kBadInput;
  }
  if (a.tol) config.tolerance = *a.tol;

  ChiralityReport chirality;
  try {
    chirality = chirality_graph(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  for (const auto& d : chirality.pairs) {
    if (std::abs(d.distance - 1.0) > config.tolerance) {
      err << "lines " << d.i << " and " << d.j << " are at distance " << d.distance << '\n';
    }
  }

  if (a.distances_only) {
    json j{{"mode", "distances"},
           {"tolerance", config.tolerance},
           {"chirality", to_json(chirality)},
           {"passed", chirality.distances_ok}};
    write_json(j, a.out, out);
    return chirality.distances_ok ? kOk : kFailed;
  }

  for (const auto& d : chirality.pairs) {
    if (d.parallel) err << "lines " << d.i << " and " << d.j << " are parallel\n";
    if (d.coplanar) err << "lines " << d.i << " and " << d.j << " intersect\n";
  }
  if (!chirality.chirality_defined) err << "chirality is only defined in R^3\n";

  json j{{"mode", "realization"}, {"tolerance", config.tolerance}};
  if (!chirality.valid() || config.lines.size() < 2) {
    j["chirality"] = to_json(chirality);
    j["passed"] = false;
    write_json(j, a.out, out);
    return kFailed;
  }
  const RealizationReport realization = check_realization(config, config.tolerance);
  for (const auto& p : realization.properties) {
    if (!p.passed) err << "property failed: " << p.name << " (" << p.detail << ")\n";
  }
  j["realization"] = to_json(realization);
  j["passed"] = realization.passed();
  write_json(j, a.out, out);
  return realization.passed() ? kOk : kFailed;
}

int cmd_gen_lower_bound(int dim, const std::string& path, std::ostream& out) {
  json j = lower_bound_config(dim);
  write_json(j, path, out);
  return kOk;
}

int cmd_catalog(const std::string& name, const std::string& path, std::ostream& out, std::ostream& err) {
  json entries = json::array();
  for (const auto& entry : catalog()) {
    if (!name.empty() && entry.name != name) continue;
    const auto& g = entry.graph;
    json drawn = json::array();
    for (auto [u, v] : g.edge_list()) drawn.push_back(std::to_string(u + 1) + "-" + std::to_string(v + 1));
    const CanonicalForm canon = canonical_form(g);
    entries.push_back({{"name", entry.name},
                       {"graph", g},
                       {"edge_count", g.edge_count()},
                       {"drawn_edges", std::move(drawn)},
                       {"graph6", to_graph6(g)},
                       {"canonical_code", to_hex(canon.code)},
                       {"canonical_graph6", to_graph6(Graph(g.order(), canon.code))}});
  }
  if (entries.empty()) {
    err << "error: no catalog graph named \"" << name << "\"\n";
    return kBadInput;
  }
  write_json(entries, path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey-type search, signature lemmas and equidistant line checks", "champagne"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = default_jobs();
  app.add_option("-j,--jobs", jobs, "Worker threads (RAMSEY_JOBS overrides)")->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Level-by-level feasible coloring search");
  search_cmd->add_option("--family", search.family, "\"default\" or a family JSON file")
      ->capture_default_str();
  search_cmd->add_option("-n,--n", search.n, "Largest order to build")->check(CLI::Range(1, kMaxVertices))
      ->capture_default_str();
  search_cmd->add_option("--cap", search.cap, "Survivor cap per level")->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd->add_option("--witnesses", search.witnesses, "graph6 file for the last non-empty level");
  search_cmd->add_option("-o,--out", search.out, "Report path (default stdout)");
  search_cmd->add_flag("--no-timings", search.no_timings, "Omit wall times from the report");
  search_cmd->add_flag("-q,--quiet", search.quiet, "No progress lines");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-signatures", "Randomized checks of the sign-pattern lemmas");
  verify_cmd->add_option("--trials", verify.trials, "Trials per pattern")->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  verify_cmd->add_flag("--corrupt", verify.corrupt, "Zero one pattern slot in every sample");
  verify_cmd->add_option("-o,--out", verify.out, "Report path (default stdout)");

  CheckLinesArgs lines;
  auto* lines_cmd = app.add_subcommand("check-lines", "Validate an equidistant line configuration");
  lines_cmd->add_option("input", lines.input, "Configuration JSON, or - for stdin")->capture_default_str();
  lines_cmd->add_flag("--distances-only", lines.distances_only, "Check pairwise distances only");
  lines_cmd->add_option("--tol", lines.tol, "Distance tolerance (default from the file)")
      ->check(CLI::PositiveNumber);
  lines_cmd->add_option("-o,--out", lines.out, "Report path (default stdout)");

  int dim = 3;
  std::string lower_out;
  auto* lower_cmd = app.add_subcommand("gen-lower-bound", "2n-2 pairwise unit-distance lines in R^n");
  lower_cmd->add_option("--dim", dim, "Ambient dimension n")->check(CLI::Range(3, 64))->capture_default_str();
  lower_cmd->add_option("-o,--out", lower_out, "Output path (default stdout)");

  std::string catalog_name;
  std::string catalog_out;
  auto* catalog_cmd = app.add_subcommand("catalog", "Named graphs with graph6 and canonical codes");
  catalog_cmd->add_option("--name", catalog_name, "Only this graph");
  catalog_cmd->add_option("-o,--out", catalog_out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*search_cmd) return cmd_search(search, resolve_jobs(jobs), out, err);
    if (*verify_cmd) return cmd_verify(verify, resolve_jobs(jobs), out, err);
    if (*lines_cmd) return cmd_check_lines(lines, in, out, err);
    if (*lower_cmd) return cmd_gen_lower_bound(dim, lower_out, out);
    if (*catalog_cmd) return cmd_catalog(catalog_name, catalog_out, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}

}  // namespace champagne::cli
