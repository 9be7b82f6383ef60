#include "uknight/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "uknight/crossing_index.hpp"
#include "uknight/records.hpp"

namespace uknight {
namespace {

using Clock = std::chrono::steady_clock;

// Knight graph of a box on linear cell indices, neighbours in canonical
// offset order.
struct KnightGraph {
  explicit KnightGraph(const Box& b) : box(b), adj(static_cast<std::size_t>(b.volume())) {
    for (std::int64_t i = 0; i < b.volume(); ++i) {
      for (Cell d : knight_moves(b, b.cell_at(i))) {
        adj[static_cast<std::size_t>(i)].push_back(static_cast<int>(b.index_of(d)));
      }
    }
  }

  Cell cell(int i) const { return box.cell_at(i); }
  Segment segment(int from, int to) const { return {cell(from), cell(to)}; }

  Box box;
  std::vector<std::vector<int>> adj;
};

// Cells reachable from `head` through cells that are neither visited nor
// blocked. `scratch` is a reusable BFS queue.
std::int64_t reach_count(const KnightGraph& g, const std::vector<bool>& visited, int head,
                         int min_index, std::vector<std::uint32_t>& mark, std::uint32_t stamp,
                         std::vector<int>& queue) {
  queue.clear();
  queue.push_back(head);
  mark[static_cast<std::size_t>(head)] = stamp;
  std::int64_t count = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int d : g.adj[static_cast<std::size_t>(queue[q])]) {
      const auto du = static_cast<std::size_t>(d);
      if (d < min_index || visited[du] || mark[du] == stamp) continue;
      mark[du] = stamp;
      queue.push_back(d);
      ++count;
    }
  }
  return count;
}

class Deadline {
 public:
  Deadline(Clock::time_point start, std::optional<double> limit) : start_(start) {
    if (limit) end_ = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*limit));
  }
  bool expired() const { return end_ && Clock::now() >= *end_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

Tour make_tour(const KnightGraph& g, const std::vector<int>& path, bool closed) {
  Tour t{g.box, {}, closed};
  t.cells.reserve(path.size());
  for (int i : path) t.cells.push_back(g.cell(i));
  return t;
}

// Every tour leaving the solvers goes through the independent verifier.
void certify(const Tour& t) {
  const auto report = verify(t);
  if (!report.ok) {
    throw std::logic_error("search produced an uncertified tour: " + report.to_string());
  }
}

// Longest-so-far holder shared by work units. A strictly longer tour
// replaces the current one; equal lengths keep the first committed.
class BestTour {
 public:
  explicit BestTour(Tour initial) : tour_(std::move(initial)), length_(tour_.length()) {}

  std::int64_t length() const { return length_.load(std::memory_order_relaxed); }

  bool offer(Tour t) {
    const auto len = t.length();
    if (len <= length()) return false;
    certify(t);
    std::lock_guard lock(mu_);
    if (len <= length_.load()) return false;
    tour_ = std::move(t);
    length_.store(len);
    return true;
  }

  Tour take() {
    std::lock_guard lock(mu_);
    return tour_;
  }

 private:
  std::mutex mu_;
  Tour tour_;
  std::atomic<std::int64_t> length_;
};

void run_parallel(int threads, std::size_t units, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u = next++; u < units; u = next++) body(u);
  };
  if (threads <= 1 || units <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(threads), units);
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::optional<std::int64_t> effective_target(const Box& box, const SearchConfig& config) {
  if (config.target_length) return config.target_length;
  if (config.mode == SearchMode::kHeuristic && config.default_target_from_records) {
    if (auto rec = find_record(box, config.closed)) return rec->length;
  }
  return std::nullopt;
}

// Starting point for both solvers: a single cell for open runs, the empty
// tour for closed runs (a one-cell cycle is not a tour).
Tour trivial_tour(const Box& box, bool closed) {
  Tour t{box, {}, closed};
  if (!closed) t.cells.push_back({0, 0, 0});
  return t;
}

// ---------------------------------------------------------------------------
// Exhaustive search

struct SharedState {
  SharedState(Tour initial, std::optional<std::int64_t> target, Deadline deadline)
      : best(std::move(initial)), target(target), deadline(deadline) {}

  BestTour best;
  std::optional<std::int64_t> target;
  Deadline deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> target_hit{false};
  std::atomic<std::uint64_t> nodes{0};
};

class DepthFirst {
 public:
  DepthFirst(const KnightGraph& g, bool closed, bool prune, SharedState& shared)
      : g_(g),
        closed_(closed),
        prune_(prune),
        shared_(shared),
        index_(g.box),
        visited_(static_cast<std::size_t>(g.box.volume()), false),
        mark_(visited_.size(), 0) {}

  // Explores every path that starts with the move start → first.
  void run_unit(int start, int first) {
    path_.assign({start});
    visited_[static_cast<std::size_t>(start)] = true;
    push(first);
    descend();
    pop();
    visited_[static_cast<std::size_t>(start)] = false;
    flush_nodes();
  }

 private:
  int start() const { return path_.front(); }
  int head() const { return path_.back(); }
  std::int64_t length() const { return static_cast<std::int64_t>(path_.size()) - 1; }

  void push(int to) {
    index_.insert(g_.segment(head(), to));
    path_.push_back(to);
    visited_[static_cast<std::size_t>(to)] = true;
  }

  void pop() {
    visited_[static_cast<std::size_t>(head())] = false;
    path_.pop_back();
    index_.remove_last();
  }

  void flush_nodes() {
    shared_.nodes += local_nodes_;
    local_nodes_ = 0;
  }

  bool should_stop() {
    if ((++local_nodes_ & 0x3ff) == 0) {
      flush_nodes();
      if (shared_.deadline.expired()) {
        shared_.timed_out = true;
        shared_.stop = true;
      }
    }
    return shared_.stop.load(std::memory_order_relaxed);
  }

  void offer(std::int64_t len) {
    if (len <= shared_.best.length()) return;
    shared_.best.offer(make_tour(g_, path_, closed_));
    if (shared_.target && shared_.best.length() >= *shared_.target) {
      shared_.target_hit = true;
      shared_.stop = true;
    }
  }

  bool can_close() const {
    if (path_.size() < 3 || path_[1] > head()) return false;
    const auto& nbrs = g_.adj[static_cast<std::size_t>(head())];
    if (std::find(nbrs.begin(), nbrs.end(), start()) == nbrs.end()) return false;
    return !index_.conflicts(g_.segment(head(), start()), g_.cell(start()), g_.cell(head()));
  }

  void descend() {
    if (should_stop()) return;
    if (!closed_) {
      offer(length());
    } else if (length() + 1 > shared_.best.length() && can_close()) {
      offer(length() + 1);
    }
    if (prune_) {
      const std::int64_t bound = reach_count(g_, visited_, head(), closed_ ? start() : 0, mark_,
                                             ++stamp_, queue_) +
                                 (closed_ ? 1 : 0);
      if (length() + bound <= shared_.best.length()) return;
    }
    const Cell from = g_.cell(head());
    for (int to : g_.adj[static_cast<std::size_t>(head())]) {
      if (visited_[static_cast<std::size_t>(to)] || (closed_ && to < start())) continue;
      if (index_.conflicts({from, g_.cell(to)}, from)) continue;
      push(to);
      descend();
      pop();
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const KnightGraph& g_;
  bool closed_;
  bool prune_;
  SharedState& shared_;
  CrossingIndex index_;
  std::vector<int> path_;
  std::vector<bool> visited_;
  std::vector<std::uint32_t> mark_;
  std::vector<int> queue_;
  std::uint32_t stamp_ = 0;
  std::uint64_t local_nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Heuristic search

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, n) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = 0;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

struct PartialPath {
  explicit PartialPath(const KnightGraph& g, int start)
      : path{start}, visited(static_cast<std::size_t>(g.box.volume()), false), index(g.box) {
    visited[static_cast<std::size_t>(start)] = true;
  }

  int head() const { return path.back(); }
  std::int64_t length() const { return static_cast<std::int64_t>(path.size()) - 1; }

  void extend(const KnightGraph& g, int to) {
    index.insert(g.segment(head(), to));
    path.push_back(to);
    visited[static_cast<std::size_t>(to)] = true;
  }

  void retract() {
    visited[static_cast<std::size_t>(head())] = false;
    path.pop_back();
    index.remove_last();
  }

  std::vector<int> path;
  std::vector<bool> visited;
  CrossingIndex index;
};

bool legal(const KnightGraph& g, const PartialPath& p, int to) {
  if (p.visited[static_cast<std::size_t>(to)]) return false;
  const Cell from = g.cell(p.head());
  return !p.index.conflicts({from, g.cell(to)}, from);
}

int onward_degree(const KnightGraph& g, PartialPath& p, int to) {
  p.extend(g, to);
  int degree = 0;
  for (int next : g.adj[static_cast<std::size_t>(to)]) {
    if (legal(g, p, next)) ++degree;
  }
  p.retract();
  return degree;
}

bool closable(const KnightGraph& g, const PartialPath& p) {
  if (p.path.size() < 3) return false;
  const int start = p.path.front();
  const auto& nbrs = g.adj[static_cast<std::size_t>(p.head())];
  if (std::find(nbrs.begin(), nbrs.end(), start) == nbrs.end()) return false;
  return !p.index.conflicts(g.segment(p.head(), start), g.cell(start), g.cell(p.head()));
}

struct Candidate {
  std::size_t parent;
  int to;
  bool dead_end;  // onward degree 0: taken only when nothing else is left
  int degree;
  std::uint64_t tie;

  bool operator<(const Candidate& o) const {
    if (dead_end != o.dead_end) return !dead_end;
    if (degree != o.degree) return degree < o.degree;
    return tie < o.tie;
  }
};

struct RestartOutcome {
  std::vector<int> best_path;
  std::int64_t best_length = -1;
  std::uint64_t nodes = 0;
  bool finished = false;
};

RestartOutcome run_restart(const KnightGraph& g, const SearchConfig& config, std::int64_t restart,
                           const Deadline& deadline, const std::atomic<bool>& stop) {
  std::mt19937_64 rng(splitmix64(config.seed + static_cast<std::uint64_t>(restart)));
  const auto volume = static_cast<std::uint64_t>(g.box.volume());
  const int start = static_cast<int>(uniform_below(rng, volume));

  RestartOutcome out;
  auto consider = [&](const PartialPath& p) {
    if (!config.closed) {
      if (p.length() > out.best_length) {
        out.best_length = p.length();
        out.best_path = p.path;
      }
    } else if (p.length() + 1 > out.best_length && closable(g, p)) {
      out.best_length = p.length() + 1;
      out.best_path = p.path;
    }
  };

  std::vector<PartialPath> beam;
  beam.emplace_back(g, start);
  consider(beam.front());
  const auto width = static_cast<std::size_t>(config.beam_width);

  while (!beam.empty()) {
    if (stop.load(std::memory_order_relaxed) || deadline.expired()) return out;
    std::vector<Candidate> candidates;
    for (std::size_t b = 0; b < beam.size(); ++b) {
      for (int to : g.adj[static_cast<std::size_t>(beam[b].head())]) {
        if (!legal(g, beam[b], to)) continue;
        ++out.nodes;
        const int degree = onward_degree(g, beam[b], to);
        candidates.push_back({b, to, degree == 0, degree, rng()});
      }
    }
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() > width) candidates.resize(width);

    std::vector<std::size_t> uses(beam.size(), 0);
    for (const auto& c : candidates) ++uses[c.parent];
    std::vector<PartialPath> next;
    next.reserve(candidates.size());
    for (const auto& c : candidates) {
      if (--uses[c.parent] == 0) {
        next.push_back(std::move(beam[c.parent]));
      } else {
        next.push_back(beam[c.parent]);
      }
      next.back().extend(g, c.to);
      consider(next.back());
    }
    beam = std::move(next);
  }
  out.finished = true;
  return out;
}

}  // namespace

const char* to_string(SearchMode mode) {
  return mode == SearchMode::kExhaustive ? "exhaustive" : "heuristic";
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kCompleted: return "completed";
    case StopReason::kTimeLimit: return "time_limit";
    case StopReason::kTargetReached: return "target_reached";
  }
  return "completed";
}

void validate(const Box& box, const SearchConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("restarts must be positive");
  if (config.beam_width < 1) throw std::invalid_argument("beam width must be positive");
  if (config.threads < 1) throw std::invalid_argument("threads must be positive");
  if (config.time_limit && !(*config.time_limit > 0.0)) {
    throw std::invalid_argument("time limit must be positive");
  }
  if (config.target_length && *config.target_length < 0) {
    throw std::invalid_argument("target length must be non-negative");
  }
  if (box.volume() > kMaxSearchVolume) {
    throw std::invalid_argument("box " + box.to_string() + " is too large to search");
  }
}

std::int64_t upper_bound(const Box& box, const std::vector<bool>& visited, Cell head) {
  if (static_cast<std::int64_t>(visited.size()) != box.volume()) {
    throw std::invalid_argument("visited set does not match the box volume");
  }
  if (!box.contains(head)) throw std::out_of_range("head " + to_string(head) + " outside box");
  const KnightGraph g(box);
  std::vector<std::uint32_t> mark(visited.size(), 0);
  std::vector<int> queue;
  return reach_count(g, visited, static_cast<int>(box.index_of(head)), 0, mark, 1, queue);
}

SearchResult solve_exhaustive(const Box& box, const SearchConfig& config,
                              const ExhaustiveOptions& options) {
  validate(box, config);
  const Deadline deadline(Clock::now(), config.time_limit);
  const KnightGraph g(box);

  SearchResult result;
  result.target_length = effective_target(box, config);
  SharedState shared(trivial_tour(box, config.closed), result.target_length, deadline);

  // Work units are (root, first move). Open paths start from one cell per
  // symmetry orbit; a cycle is rooted at its least cell, which can always be
  // mapped onto an orbit representative.
  std::vector<std::pair<int, int>> units;
  std::vector<int> roots;
  if (options.restrict_roots) {
    for (Cell c : canonical_start_cells(box)) roots.push_back(static_cast<int>(box.index_of(c)));
  } else {
    for (std::int64_t i = 0; i < box.volume(); ++i) roots.push_back(static_cast<int>(i));
  }
  for (int r : roots) {
    for (int to : g.adj[static_cast<std::size_t>(r)]) {
      if (config.closed && to < r) continue;
      units.emplace_back(r, to);
    }
  }

  if (result.target_length && shared.best.length() >= *result.target_length) {
    shared.target_hit = true;
    shared.stop = true;
  }
  run_parallel(config.threads, units.size(), [&](std::size_t u) {
    if (shared.stop) return;
    DepthFirst dfs(g, config.closed, options.prune, shared);
    dfs.run_unit(units[u].first, units[u].second);
  });

  result.best = shared.best.take();
  certify(result.best);
  result.length = result.best.length();
  result.nodes_expanded = shared.nodes;
  result.elapsed = deadline.elapsed();
  if (shared.target_hit) {
    result.stopped_by = StopReason::kTargetReached;
  } else if (shared.timed_out) {
    result.stopped_by = StopReason::kTimeLimit;
  } else {
    result.stopped_by = StopReason::kCompleted;
    result.optimal = true;
  }
  return result;
}

SearchResult solve_heuristic(const Box& box, const SearchConfig& config) {
  validate(box, config);
  const Deadline deadline(Clock::now(), config.time_limit);
  const KnightGraph g(box);

  SearchResult result;
  result.target_length = effective_target(box, config);

  const auto restarts = static_cast<std::size_t>(config.restarts);
  std::vector<RestartOutcome> outcomes(restarts);
  std::vector<bool> done(restarts, false);
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> target_hit{false};

  if (result.target_length && trivial_tour(box, config.closed).length() >= *result.target_length) {
    stop = true;
    target_hit = true;
  }
  run_parallel(config.threads, restarts, [&](std::size_t r) {
    if (stop) return;
    if (deadline.expired()) {
      timed_out = true;
      stop = true;
      return;
    }
    outcomes[r] = run_restart(g, config, static_cast<std::int64_t>(r), deadline, stop);
    if (!outcomes[r].finished) {
      if (deadline.expired()) timed_out = true;
      stop = true;
      return;
    }
    done[r] = true;
    if (result.target_length && outcomes[r].best_length >= *result.target_length) {
      target_hit = true;
      stop = true;
    }
  });

  // Best over completed restarts in restart order; ties keep the earliest.
  Tour best = trivial_tour(box, config.closed);
  std::int64_t best_length = best.length();
  for (std::size_t r = 0; r < restarts; ++r) {
    if (!done[r]) continue;
    ++result.restarts_done;
    result.nodes_expanded += outcomes[r].nodes;
    if (outcomes[r].best_length > best_length) {
      best = make_tour(g, outcomes[r].best_path, config.closed);
      best_length = outcomes[r].best_length;
    }
    result.best_by_restart.push_back(best_length);
  }
  certify(best);
  result.best = std::move(best);
  result.length = result.best.length();
  result.elapsed = deadline.elapsed();
  if (target_hit) {
    result.stopped_by = StopReason::kTargetReached;
  } else if (timed_out) {
    result.stopped_by = StopReason::kTimeLimit;
  } else {
    result.stopped_by = StopReason::kCompleted;
  }
  return result;
}

SearchResult solve(const Box& box, const SearchConfig& config) {
  return config.mode == SearchMode::kExhaustive ? solve_exhaustive(box, config)
                                                : solve_heuristic(box, config);
}

}  // namespace uknight
