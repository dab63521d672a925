#include "champagne/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "champagne/canonical.hpp"
#include "champagne/graph_io.hpp"

namespace champagne {
namespace {

constexpr std::size_t kParentsPerChunk = 32;
constexpr std::size_t kLocalDedupThreshold = std::size_t{1} << 22;

void sort_unique(std::vector<EdgeBits>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

struct WorkerOutput {
  std::vector<EdgeBits> codes;
  std::size_t kept = 0;
};

void expand_parent(const Graph& parent, const ForbiddenFamily& family, WorkerOutput& out) {
  const int k = parent.order();
  const AdjacencyRows rows = parent.rows();
  const auto bad = forbidden_extensions(k, rows, family);
  const std::uint32_t masks = 1U << k;
  for (std::uint32_t n = 0; n < masks; ++n) {
    if ((bad[n >> 6] >> (n & 63)) & 1U) continue;
    AdjacencyRows child = rows;
    for (int u = 0; u < k; ++u) {
      if ((n >> u) & 1U) child[u] |= static_cast<VertexMask>(1U << k);
    }
    child[k] = static_cast<VertexMask>(n);
    out.codes.push_back(canonical_code(k + 1, child));
    ++out.kept;
  }
  if (out.codes.size() >= kLocalDedupThreshold) sort_unique(out.codes);
}

}  // namespace

FeasibleLevel FeasibleLevel::initial() { return FeasibleLevel{1, {Graph(1)}}; }

std::string format_progress(const LevelStats& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "level=%d expanded=%zu kept=%zu deduped=%zu elapsed=%.3f", s.k,
                s.expanded, s.kept, s.count, s.seconds);
  return buf;
}

FeasibleLevel extend_level(const FeasibleLevel& level, const ForbiddenFamily& family, int jobs,
                           LevelStats* stats) {
  if (level.k >= kMaxVertices) throw std::invalid_argument("extend_level: level already at 16 vertices");
  const auto start = std::chrono::steady_clock::now();
  jobs = std::max(1, jobs);

  // Workers claim chunks of parents; each owns its output. The merge below
  // sorts, so the result is independent of which worker took which chunk.
  std::vector<WorkerOutput> outputs(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next{0};
  auto work = [&](WorkerOutput& out) {
    while (true) {
      const std::size_t begin = next.fetch_add(kParentsPerChunk);
      if (begin >= level.graphs.size()) break;
      const std::size_t end = std::min(begin + kParentsPerChunk, level.graphs.size());
      for (std::size_t i = begin; i < end; ++i) expand_parent(level.graphs[i], family, out);
    }
    sort_unique(out.codes);
  };
  if (jobs == 1) {
    work(outputs[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(outputs.size());
    for (auto& out : outputs) threads.emplace_back([&work, &out] { work(out); });
  }

  std::vector<EdgeBits> merged;
  std::size_t kept = 0;
  for (auto& out : outputs) {
    kept += out.kept;
    merged.insert(merged.end(), out.codes.begin(), out.codes.end());
    out.codes = {};
  }
  sort_unique(merged);

  FeasibleLevel next_level{level.k + 1, {}};
  next_level.graphs.reserve(merged.size());
  for (const auto& code : merged) next_level.graphs.emplace_back(level.k + 1, code);

  if (stats) {
    stats->k = next_level.k;
    stats->expanded = level.graphs.size() * (std::size_t{1} << level.k);
    stats->kept = kept;
    stats->count = next_level.count();
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return next_level;
}

SearchReport run_search(const ForbiddenFamily& family, int n_max, const SearchOptions& options) {
  if (n_max < 1 || n_max > kMaxVertices) throw std::invalid_argument("n_max must be in [1, 16]");

  SearchReport report;
  report.family = family_to_json(family);
  report.n_max = n_max;

  FeasibleLevel level = FeasibleLevel::initial();
  LevelStats first{1, 1, 1, 1, 0.0};
  report.levels.push_back(first);
  if (options.progress) options.progress(first);

  FeasibleLevel last_nonempty = level;
  while (level.k < n_max && level.count() > 0) {
    LevelStats stats;
    level = extend_level(level, family, options.jobs, &stats);
    report.levels.push_back(stats);
    if (options.progress) options.progress(stats);
    if (level.count() > options.survivor_cap) {
      report.final_k = level.k;
      throw SurvivorCapExceeded("level " + std::to_string(level.k) + " has " +
                                    std::to_string(level.count()) + " survivors, above the cap of " +
                                    std::to_string(options.survivor_cap),
                                std::move(report));
    }
    if (level.count() > 0) last_nonempty = level;
  }

  report.final_k = level.k;
  report.empty = level.count() == 0;
  if (options.keep_witnesses) {
    report.witness_k = last_nonempty.k;
    report.witnesses = std::move(last_nonempty.graphs);
  }
  return report;
}

nlohmann::json to_json(const SearchReport& report, bool include_timings) {
  auto levels = nlohmann::json::array();
  for (const auto& s : report.levels) {
    nlohmann::json entry{{"k", s.k}, {"count", s.count}, {"expanded", s.expanded}, {"kept", s.kept}};
    if (include_timings) entry["seconds"] = s.seconds;
    levels.push_back(std::move(entry));
  }
  nlohmann::json verdict;
  if (report.empty) {
    verdict = {{"status", "empty"}, {"k", report.final_k}};
  } else {
    verdict = {{"status", "feasible"},
               {"k", report.final_k},
               {"count", report.levels.empty() ? 0 : report.levels.back().count}};
  }
  nlohmann::json out{{"family", report.family},
                     {"n_max", report.n_max},
                     {"levels", std::move(levels)},
                     {"verdict", std::move(verdict)}};
  if (report.witness_k > 0) {
    auto g6 = nlohmann::json::array();
    for (const auto& g : report.witnesses) g6.push_back(to_graph6(g));
    out["witnesses"] = {{"k", report.witness_k}, {"graph6", std::move(g6)}};
  }
  return out;
}

bool brute_force_check(const ForbiddenFamily& family, int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("brute_force_check is limited to 1 <= n <= 7");
  const int slots = slot_count(n);
  for (std::uint32_t code = 0; code < (1U << slots); ++code) {
    EdgeBits bits;
    for (int s = 0; s < slots; ++s) {
      if ((code >> s) & 1U) bits.set(s);
    }
    if (!is_forbidden(Graph(n, bits), family)) return false;
  }
  return true;
}

}  // namespace champagne
