#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "champagne/forbidden.hpp"
#include "champagne/graph.hpp"

namespace champagne {

/// Colorings of K_k with no forbidden subgraph, one canonical
/// representative per isomorphism class, sorted by code.
struct FeasibleLevel {
  int k = 0;
  std::vector<Graph> graphs;

  std::size_t count() const noexcept { return graphs.size(); }
  static FeasibleLevel initial();  // {K1}
};

struct LevelStats {
  int k = 0;
  std::size_t expanded = 0;  // one-vertex extensions generated
  std::size_t kept = 0;      // extensions passing the forbidden filter
  std::size_t count = 0;     // isomorphism classes left after dedup
  double seconds = 0.0;
};

/// `level=k expanded=X kept=Y deduped=Z elapsed=T`
std::string format_progress(const LevelStats& stats);

struct SearchOptions {
  int jobs = 1;
  std::size_t survivor_cap = 50'000'000;
  bool keep_witnesses = false;
  std::function<void(const LevelStats&)> progress;
};

struct SearchReport {
  nlohmann::json family;
  int n_max = 0;
  std::vector<LevelStats> levels;
  bool empty = false;  // true iff the last level reached has no survivors
  int final_k = 0;
  /// Survivors of the last non-empty level, when requested.
  std::vector<Graph> witnesses;
  int witness_k = 0;
};

/// Serialized report. Timings are optional so reports from runs with
/// different worker counts can be compared byte for byte.
nlohmann::json to_json(const SearchReport& report, bool include_timings = true);

class SurvivorCapExceeded : public std::runtime_error {
 public:
  SurvivorCapExceeded(std::string what, SearchReport partial)
      : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}
  const SearchReport& partial() const noexcept { return partial_; }

 private:
  SearchReport partial_;
};

/// All 2^k one-vertex extensions of every graph in `level`, filtered,
/// canonicalized and deduplicated. The result does not depend on `jobs`.
FeasibleLevel extend_level(const FeasibleLevel& level, const ForbiddenFamily& family, int jobs = 1,
                           LevelStats* stats = nullptr);

/// Builds levels 1..n_max, stopping at the first empty one.
/// Throws SurvivorCapExceeded (with the partial report) when a level grows
/// beyond options.survivor_cap, std::invalid_argument on n_max outside [1, 16].
SearchReport run_search(const ForbiddenFamily& family, int n_max, const SearchOptions& options = {});

/// Whether every labeled coloring of K_n is forbidden, by direct
/// enumeration of all 2^(n(n-1)/2) colorings. Refuses n > 7.
bool brute_force_check(const ForbiddenFamily& family, int n);

}  // namespace champagne
