#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uknight/lattice.hpp"
#include "uknight/tour.hpp"

namespace uknight {

enum class SearchMode { kExhaustive, kHeuristic };
enum class StopReason { kCompleted, kTimeLimit, kTargetReached };

const char* to_string(SearchMode mode);
const char* to_string(StopReason reason);

/// Name of the pseudo-random generator behind heuristic tie-breaking. Each
/// restart r seeds std::mt19937_64 with splitmix64(seed + r); bounded draws
/// use rejection sampling so the sequence is identical on every platform.
inline constexpr const char* kGeneratorName = "mt19937_64+splitmix64";

/// Largest box volume the solvers accept.
inline constexpr std::int64_t kMaxSearchVolume = std::int64_t{1} << 22;

struct SearchConfig {
  SearchMode mode = SearchMode::kHeuristic;
  bool closed = false;
  std::optional<double> time_limit;  // seconds
  std::uint64_t seed = 0;
  int restarts = 64;
  int beam_width = 1;
  int threads = 1;
  std::optional<std::int64_t> target_length;
  /// Heuristic runs without an explicit target stop at the published record
  /// for the box shape when one exists.
  bool default_target_from_records = true;
};

/// Throws std::invalid_argument for non-positive counts, a non-positive time
/// limit, a negative target or an oversized box.
void validate(const Box& box, const SearchConfig& config);

struct SearchResult {
  Tour best;
  std::int64_t length = 0;
  bool optimal = false;
  std::uint64_t nodes_expanded = 0;
  std::int64_t restarts_done = 0;
  double elapsed = 0.0;
  StopReason stopped_by = StopReason::kCompleted;
  std::optional<std::int64_t> target_length;  // effective target, if any
  /// Heuristic only: best length after each completed restart, in restart
  /// order.
  std::vector<std::int64_t> best_by_restart;
};

/// Knobs that exist for cross-checking the solver against itself.
struct ExhaustiveOptions {
  bool restrict_roots = true;  // roots limited to canonical_start_cells
  bool prune = true;           // reachability bound
};

/// Depth-first branch and bound. Completes with optimal = true unless a time
/// limit or target stops it first.
SearchResult solve_exhaustive(const Box& box, const SearchConfig& config,
                              const ExhaustiveOptions& options = {});

/// Multi-start constructive search: each restart grows a path from a random
/// cell by the least-onward-degree rule, keeping the best `beam_width`
/// partial paths per step. Never claims optimality.
SearchResult solve_heuristic(const Box& box, const SearchConfig& config);

/// Dispatches on config.mode.
SearchResult solve(const Box& box, const SearchConfig& config);

/// Admissible bound on further moves from `head`: the number of unvisited
/// cells reachable from it through unvisited cells by knight moves.
/// `visited` is indexed by Box::index_of and has box.volume() entries.
std::int64_t upper_bound(const Box& box, const std::vector<bool>& visited, Cell head);

}  // namespace uknight
