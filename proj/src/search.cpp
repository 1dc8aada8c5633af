#include "hperc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hperc/constructions.hpp"
#include "hperc/engine.hpp"

namespace hperc {

std::string to_string(Target target) {
  return target == Target::percolate ? "percolate" : "one-phase";
}

std::string to_string(SearchMode mode) {
  return mode == SearchMode::exact ? "exact" : "dedup";
}

std::string to_string(ReachGoal goal) {
  return goal == ReachGoal::contains_l ? "contains-L" : "one-phase";
}

std::string to_string(ReachStatus status) {
  switch (status) {
    case ReachStatus::found:
      return "found";
    case ReachStatus::exhausted:
      return "exhausted";
    case ReachStatus::inconclusive:
      break;
  }
  return "inconclusive";
}

std::int64_t SearchReport::examined() const {
  return std::accumulate(examined_per_size.begin(), examined_per_size.end(), std::int64_t{0});
}

namespace {

using Mask = std::uint64_t;

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Mask first_mask(int k) {
  return k == 0 ? 0 : (Mask{1} << k) - 1;
}

// Next mask with the same popcount in numeric (= colex) order.
Mask next_mask(Mask m) {
  const Mask lowest = m & (~m + 1);
  const Mask ripple = m + lowest;
  return ripple | (((m ^ ripple) >> 2) / lowest);
}

Mask unrank_colex(std::int64_t rank, int n, int k) {
  Mask m = 0;
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(c, i) > rank) --c;
    m |= Mask{1} << c;
    rank -= binomial(c, i);
    --c;
  }
  return m;
}

CellSet from_mask(const GridShape& shape, Mask m) {
  CellSet s(shape);
  while (m) {
    s.insert_index(static_cast<std::size_t>(__builtin_ctzll(m)));
    m &= m - 1;
  }
  return s;
}

// With t = r = d = 2 an empty row or column can never be infected, since
// every edge through a vertex meets its row and column in another vertex.
bool has_empty_line(const CellSet& a) {
  const auto& shape = a.shape();
  std::vector<int> rows(static_cast<std::size_t>(shape.extent(0)), 0);
  std::vector<int> cols(static_cast<std::size_t>(shape.extent(1)), 0);
  for (std::size_t i : a.indices()) {
    ++rows[static_cast<std::size_t>(shape.coordinate(i, 0) - 1)];
    ++cols[static_cast<std::size_t>(shape.coordinate(i, 1) - 1)];
  }
  return std::count(rows.begin(), rows.end(), 0) > 0 || std::count(cols.begin(), cols.end(), 0) > 0;
}

class Predicate {
 public:
  Predicate(const GridShape& shape, const Params& params, Target target)
      : params_(params),
        target_(target),
        prune_lines_(target == Target::percolate && shape.dimension() == 2 && params.t == 2 && params.r == 2) {}

  bool operator()(const CellSet& a) const {
    if (target_ == Target::one_phase) return one_phase(a, params_);
    if (prune_lines_ && !a.is_full() && has_empty_line(a)) return false;
    return percolates(a, params_);
  }

 private:
  Params params_;
  Target target_;
  bool prune_lines_;
};

struct SizeOutcome {
  std::optional<std::int64_t> witness_rank;
  std::int64_t examined = 0;
  std::int64_t checks = 0;
  std::int64_t duplicates = 0;
  bool aborted = false;
};

constexpr std::int64_t kChunk = 2048;

SizeOutcome scan_size_parallel(const GridShape& shape, const Predicate& accept, int k, std::int64_t budget_left, int threads) {
  const int n = static_cast<int>(shape.cell_count());
  const std::int64_t total = binomial(n, k);
  std::atomic<std::int64_t> next_chunk{0};
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::atomic<std::int64_t> checks{0};
  std::atomic<bool> aborted{false};

  auto work = [&] {
    while (!aborted.load()) {
      const std::int64_t lo = next_chunk.fetch_add(kChunk);
      if (lo >= total || lo > best.load()) return;
      const std::int64_t hi = std::min(total, lo + kChunk);
      Mask m = unrank_colex(lo, n, k);
      for (std::int64_t rank = lo; rank < hi; ++rank, m = k ? next_mask(m) : m) {
        if (rank > best.load()) return;
        if (checks.fetch_add(1) >= budget_left) {
          aborted.store(true);
          return;
        }
        if (accept(from_mask(shape, m))) {
          std::int64_t cur = best.load();
          while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
          }
          return;
        }
      }
    }
  };

  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  SizeOutcome out;
  out.checks = std::min<std::int64_t>(checks.load(), budget_left);
  const std::int64_t found = best.load();
  if (found != std::numeric_limits<std::int64_t>::max()) {
    // Every rank below the witness was rejected by some worker.
    out.witness_rank = found;
    out.examined = found + 1;
  } else if (aborted.load()) {
    out.aborted = true;
    out.examined = out.checks;
  } else {
    out.examined = total;
  }
  return out;
}

SizeOutcome scan_size_dedup(const GridShape& shape, const Predicate& accept, int k, std::int64_t budget_left) {
  const int n = static_cast<int>(shape.cell_count());
  const std::int64_t total = binomial(n, k);
  std::unordered_set<std::string> seen;
  SizeOutcome out;
  Mask m = first_mask(k);
  for (std::int64_t rank = 0; rank < total; ++rank, m = k ? next_mask(m) : m) {
    ++out.examined;
    const CellSet candidate = from_mask(shape, m);
    if (!seen.insert(canonical_key(candidate)).second) {
      ++out.duplicates;
      continue;
    }
    if (out.checks >= budget_left) {
      out.aborted = true;
      return out;
    }
    ++out.checks;
    if (accept(candidate)) {
      out.witness_rank = rank;
      return out;
    }
  }
  return out;
}

}  // namespace

SearchReport min_size(const GridShape& shape, const Params& params, Target target, const SearchOptions& options) {
  params.validate(shape);
  if (shape.cell_count() > kMaxSearchCells) {
    throw InvalidInput("exhaustive search supports at most " + std::to_string(kMaxSearchCells) + " cells");
  }
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.shape = shape;
  report.params = params;
  report.target = target;
  report.mode = options.mode;

  const Predicate accept(shape, params, target);
  const int n = static_cast<int>(shape.cell_count());
  for (int k = 0; k <= n; ++k) {
    const std::int64_t budget_left = options.budget - report.checks;
    const SizeOutcome outcome = options.mode == SearchMode::exact
                                    ? scan_size_parallel(shape, accept, k, budget_left, options.threads)
                                    : scan_size_dedup(shape, accept, k, budget_left);
    report.examined_per_size.push_back(outcome.examined);
    report.checks += outcome.checks;
    report.duplicates_skipped += outcome.duplicates;
    if (outcome.witness_rank) {
      report.minimum = k;
      report.witness = from_mask(shape, unrank_colex(*outcome.witness_rank, n, k));
      report.lower_bound = k;
      report.exhaustive = true;
      break;
    }
    if (outcome.aborted) break;
    report.lower_bound = k + 1;
  }
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SearchReport min_percolating_size(const GridShape& shape, const Params& params, const SearchOptions& options) {
  return min_size(shape, params, Target::percolate, options);
}

SearchReport min_one_phase_size(const GridShape& shape, const Params& params, const SearchOptions& options) {
  return min_size(shape, params, Target::one_phase, options);
}

// Samplers

CellSet random_subset(const GridShape& shape, std::uint64_t seed, double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidInput("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  CellSet out(shape);
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (coin(rng)) out.insert_index(i);
  }
  return out;
}

namespace {

template <typename Keep>
CellSet reverse_delete(const GridShape& shape, std::uint64_t seed, Keep&& keep) {
  std::vector<std::size_t> order(shape.cell_count());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  CellSet current = CellSet::full(shape);
  for (std::size_t i : order) {
    current.erase_index(i);
    if (!keep(current)) current.insert_index(i);
  }
  return current;
}

}  // namespace

CellSet random_percolating_set(const GridShape& shape, const Params& params, std::uint64_t seed) {
  params.validate(shape);
  return reverse_delete(shape, seed, [&](const CellSet& s) { return percolates(s, params); });
}

CellSet random_one_phase_set(const GridShape& shape, const Params& params, std::uint64_t seed) {
  params.validate(shape);
  return reverse_delete(shape, seed, [&](const CellSet& s) { return one_phase(s, params); });
}

// Shift reachability

bool reach_goal_met(const CellSet& a, const Params& params, ReachGoal goal) {
  if (goal == ReachGoal::one_phase) return one_phase(a, params);
  return l_set(a.shape(), params).is_subset_of(a);
}

namespace {

std::string occupancy_key(const CellSet& a) {
  const auto occ = a.occupancy();
  return std::string(occ.begin(), occ.end());
}

struct Node {
  CellSet set;
  std::size_t parent;
  std::optional<ShiftRecord> record;
  int depth;
};

std::vector<ShiftRecord> path_to(const std::vector<Node>& nodes, std::size_t id) {
  std::vector<ShiftRecord> path;
  while (nodes[id].record) {
    path.push_back(*nodes[id].record);
    id = nodes[id].parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ReachResult shift_reach(const CellSet& a, const Params& params, const ReachOptions& options) {
  params.validate(a.shape());
  if (!percolates(a, params)) throw PreconditionViolation("shift_reach needs a percolating set");
  ReachResult result;
  if (options.max_states == 0) return result;

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  nodes.push_back({a, 0, std::nullopt, 0});
  index.emplace(occupancy_key(a), 0);
  result.states_visited = 1;
  if (reach_goal_met(a, params, options.goal)) {
    result.status = ReachStatus::found;
    return result;
  }

  const auto& shape = a.shape();
  bool cut = false;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (nodes[id].depth >= options.max_ops) {
      cut = true;
      continue;
    }
    const CellSet current = nodes[id].set;
    for (std::size_t i = 0; i < shape.cell_count(); ++i) {
      if (!is_infectable(current, i, params)) continue;
      const Vertex v = shape.vertex_at(i);
      for (const Edge& e : infecting_edges(current, v, params)) {
        std::vector<Vertex> targets;
        if (options.maximal_only) {
          Vertex top = maximal_shift_target(e);
          if (top != v) targets.push_back(std::move(top));
        } else {
          for (auto& w : edge_vertices(e)) {
            if (w != v) targets.push_back(std::move(w));
          }
        }
        for (const auto& w : targets) {
          auto next = shift(current, e, w);
          auto key = occupancy_key(next.set);
          if (index.contains(key)) continue;
          if (nodes.size() >= options.max_states) {
            result.status = ReachStatus::inconclusive;
            return result;
          }
          const std::size_t child = nodes.size();
          const bool goal = reach_goal_met(next.set, params, options.goal);
          nodes.push_back({std::move(next.set), id, std::move(next.record), nodes[id].depth + 1});
          index.emplace(std::move(key), child);
          result.states_visited = nodes.size();
          if (goal) {
            result.status = ReachStatus::found;
            result.path = path_to(nodes, child);
            return result;
          }
          queue.push_back(child);
        }
      }
    }
  }
  result.status = cut ? ReachStatus::inconclusive : ReachStatus::exhausted;
  return result;
}

}  // namespace hperc
