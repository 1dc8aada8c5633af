#pragma once

// Exhaustive oracles for minimum percolating and one-phase sets, seeded
// samplers of percolating sets, and a bounded explorer of shift sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hperc/lattice.hpp"
#include "hperc/transforms.hpp"

namespace hperc {

enum class Target { percolate, one_phase };
enum class SearchMode { exact, dedup };

std::string to_string(Target target);
std::string to_string(SearchMode mode);

inline constexpr std::int64_t kDefaultBudget = 100'000'000;
// Subsets are enumerated as 64-bit masks.
inline constexpr std::size_t kMaxSearchCells = 62;

struct SearchOptions {
  SearchMode mode = SearchMode::exact;
  // Maximum number of predicate evaluations.
  std::int64_t budget = kDefaultBudget;
  // Worker threads for exact mode; dedup mode always runs on one thread.
  int threads = 1;
};

struct SearchReport {
  GridShape shape{1};
  Params params;
  Target target = Target::percolate;
  SearchMode mode = SearchMode::exact;
  std::optional<int> minimum;
  std::optional<CellSet> witness;
  // Every size below this was enumerated without finding a witness.
  int lower_bound = 0;
  // Index = subset size; subsets visited, up to and including the witness.
  std::vector<std::int64_t> examined_per_size;
  std::int64_t checks = 0;
  std::int64_t duplicates_skipped = 0;
  double duration_ms = 0;
  bool exhaustive = false;

  std::int64_t examined() const;
};

// Subsets of each size are visited in colex order of linear cell indices,
// sizes ascending; the witness is the colex-first satisfying set of the
// least satisfying size, independent of the thread count.
SearchReport min_size(const GridShape& shape, const Params& params, Target target, const SearchOptions& options = {});

SearchReport min_percolating_size(const GridShape& shape, const Params& params, const SearchOptions& options = {});
SearchReport min_one_phase_size(const GridShape& shape, const Params& params, const SearchOptions& options = {});

// Each cell independently with probability `density`.
CellSet random_subset(const GridShape& shape, std::uint64_t seed, double density);

// Starts from the full grid and deletes cells in seeded random order
// whenever the rest still percolates; the result is deletion-minimal.
CellSet random_percolating_set(const GridShape& shape, const Params& params, std::uint64_t seed);

// Same, keeping the set one-phase percolating.
CellSet random_one_phase_set(const GridShape& shape, const Params& params, std::uint64_t seed);

enum class ReachGoal { contains_l, one_phase };
enum class ReachStatus {
  found,
  // Every set reachable within the shift graph was visited; none is a goal.
  exhausted,
  // A depth or state bound cut the search short.
  inconclusive,
};

std::string to_string(ReachGoal goal);
std::string to_string(ReachStatus status);

struct ReachOptions {
  ReachGoal goal = ReachGoal::contains_l;
  int max_ops = 16;
  std::size_t max_states = 100'000;
  bool maximal_only = false;
};

struct ReachResult {
  ReachStatus status = ReachStatus::inconclusive;
  std::vector<ShiftRecord> path;
  std::size_t states_visited = 0;
};

// Breadth-first search over shift successors of a percolating set.
ReachResult shift_reach(const CellSet& a, const Params& params, const ReachOptions& options);

bool reach_goal_met(const CellSet& a, const Params& params, ReachGoal goal);

}  // namespace hperc
