#include "doctest.h"
#include "hperc/constructions.hpp"
#include "hperc/search.hpp"
#include "support.hpp"

using namespace hperc;

namespace {

struct Frozen {
  std::vector<int> dims;
  Params params;
  Target target;
  int minimum;
};

// Values computed once by the bitmask oracle below and frozen here.
const std::vector<Frozen> kFrozen{
    {{3, 3}, {2, 2}, Target::percolate, 5},
    {{1, 4}, {2, 2}, Target::percolate, 4},
    {{2, 4}, {2, 2}, Target::percolate, 5},
    {{4, 4}, {2, 2}, Target::percolate, 7},
    {{2, 2, 2}, {2, 2}, Target::percolate, 4},
    {{2, 2, 3}, {2, 2}, Target::percolate, 5},
    {{2, 2, 2}, {2, 1}, Target::percolate, 1},
    {{2, 2, 2}, {2, 3}, Target::percolate, 7},
    {{3, 3}, {3, 2}, Target::percolate, 8},
    {{3, 4}, {3, 2}, Target::percolate, 10},
    {{3, 3}, {3, 2}, Target::one_phase, 8},
    {{3, 4}, {3, 2}, Target::one_phase, 10},
    {{4, 4}, {2, 2}, Target::one_phase, 7},
    {{2, 3, 3}, {2, 3}, Target::percolate, 14},
};

std::optional<int> oracle_minimum(const Frozen& f) {
  const oracle::Hypergraph h(f.dims, f.params.t, f.params.r);
  return oracle::min_size(f.dims, [&](const oracle::Cells& a) {
    return f.target == Target::percolate ? h.percolates(a) : h.one_phase(a);
  });
}

}  // namespace

TEST_CASE("frozen minima match the bitmask oracle") {
  for (const auto& f : kFrozen) {
    CAPTURE(to_string(GridShape(f.dims)));
    CAPTURE(f.params.t);
    CAPTURE(f.params.r);
    CHECK(oracle_minimum(f) == f.minimum);
  }
}

TEST_CASE("search reproduces the frozen minima") {
  for (const auto& f : kFrozen) {
    const GridShape s(f.dims);
    CAPTURE(to_string(s));
    const SearchReport r = min_size(s, f.params, f.target);
    REQUIRE(r.exhaustive);
    CHECK(r.minimum == f.minimum);
    REQUIRE(r.witness);
    CHECK(static_cast<int>(r.witness->size()) == f.minimum);
    CHECK((f.target == Target::percolate ? percolates(*r.witness, f.params) : one_phase(*r.witness, f.params)));
    CHECK(r.lower_bound == f.minimum);
  }
}

TEST_CASE("closed-form value equals the searched minimum") {
  for (const auto& f : kFrozen) {
    if (f.target != Target::percolate) continue;
    const GridShape s(f.dims);
    CHECK(m_formula(s, f.params).total == f.minimum);
  }
}

TEST_CASE("one-phase bound is attained") {
  for (const auto& f : kFrozen) {
    if (f.target != Target::one_phase) continue;
    const int t = f.params.t;
    CHECK(f.minimum == (f.dims[0] + f.dims[1]) * (t - 1) - (t - 1) * (t - 1));
  }
}

TEST_CASE("thread count does not change the report") {
  for (const auto& f : kFrozen) {
    const GridShape s(f.dims);
    SearchOptions one;
    SearchOptions many;
    many.threads = 3;
    const SearchReport a = min_size(s, f.params, f.target, one);
    const SearchReport b = min_size(s, f.params, f.target, many);
    CHECK(a.minimum == b.minimum);
    CHECK(a.witness == b.witness);
    CHECK(a.examined_per_size == b.examined_per_size);
  }
}

TEST_CASE("dedup mode agrees with exact mode") {
  for (const auto& f : kFrozen) {
    const GridShape s(f.dims);
    SearchOptions dedup;
    dedup.mode = SearchMode::dedup;
    const SearchReport a = min_size(s, f.params, f.target);
    const SearchReport b = min_size(s, f.params, f.target, dedup);
    CHECK(b.exhaustive);
    CHECK(a.minimum == b.minimum);
    CHECK(a.witness == b.witness);
    CHECK(b.checks <= a.checks);
  }
  SearchOptions dedup;
  dedup.mode = SearchMode::dedup;
  CHECK(min_size(GridShape{4, 4}, Params{2, 2}, Target::percolate, dedup).duplicates_skipped > 0);
}

TEST_CASE("exhausted budget is reported") {
  SearchOptions opts;
  opts.budget = 50;
  const SearchReport r = min_size(GridShape{4, 4}, Params{2, 2}, Target::percolate, opts);
  CHECK_FALSE(r.exhaustive);
  CHECK_FALSE(r.minimum);
  CHECK(r.checks <= 50);
  CHECK(r.lower_bound < 7);
}

TEST_CASE("search limits") {
  CHECK_THROWS_AS((min_size(GridShape{8, 8}, Params{2, 2}, Target::percolate)), InvalidInput);
  CHECK_THROWS_AS((min_size(GridShape{3, 3}, Params{2, 3}, Target::percolate)), InvalidInput);
  // A grid without edges only percolates when full.
  const SearchReport r = min_size(GridShape{1, 3}, Params{2, 2}, Target::percolate);
  CHECK(r.minimum == 3);
}

TEST_CASE("random percolating sets are deletion-minimal") {
  for (const auto& [dims, params] : {std::pair{std::vector<int>{4, 5}, Params{2, 2}}, std::pair{std::vector<int>{5, 5}, Params{3, 2}},
                                     std::pair{std::vector<int>{3, 3, 3}, Params{2, 2}}}) {
    const GridShape s(dims);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const CellSet a = random_percolating_set(s, params, seed);
      CHECK(percolates(a, params));
      CHECK(static_cast<std::int64_t>(a.size()) >= m_formula(s, params).total);
      for (const auto& v : a.members()) {
        CellSet b = a;
        b.erase(v);
        CHECK_FALSE(percolates(b, params));
      }
      CHECK(random_percolating_set(s, params, seed) == a);
    }
  }
}

TEST_CASE("random one-phase sets are deletion-minimal") {
  const GridShape s{4, 5};
  const Params p{3, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CellSet a = random_one_phase_set(s, p, seed);
    CHECK(one_phase(a, p));
    CHECK(a.size() >= 12);
    for (const auto& v : a.members()) {
      CellSet b = a;
      b.erase(v);
      CHECK_FALSE(one_phase(b, p));
    }
  }
}

TEST_CASE("random subsets") {
  const GridShape s{10, 10};
  CHECK(random_subset(s, 3, 0.0).empty());
  CHECK(random_subset(s, 3, 1.0).is_full());
  CHECK(random_subset(s, 3, 0.5) == random_subset(s, 3, 0.5));
  CHECK_THROWS_AS((random_subset(s, 3, 1.5)), InvalidInput);
}

TEST_CASE("shift reachability") {
  const GridShape s{3, 4};
  const Params p{2, 2};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CellSet a = random_percolating_set(s, p, seed);
    for (const auto goal : {ReachGoal::contains_l, ReachGoal::one_phase}) {
      ReachOptions opts;
      opts.goal = goal;
      const ReachResult r = shift_reach(a, p, opts);
      REQUIRE(r.status == ReachStatus::found);
      CellSet current = a;
      for (const auto& rec : r.path) current = shift(current, rec.edge, rec.removed).set;
      CHECK(reach_goal_met(current, p, goal));
      CHECK(percolates(current, p));
    }
  }
  const CellSet l = l_set(s, p);
  const ReachResult at_goal = shift_reach(l, p, {});
  CHECK(at_goal.status == ReachStatus::found);
  CHECK(at_goal.path.empty());

  ReachOptions none;
  none.max_states = 0;
  CHECK(shift_reach(random_percolating_set(s, p, 1), p, none).status == ReachStatus::inconclusive);
  CHECK_THROWS_AS((shift_reach(CellSet(s), p, {})), PreconditionViolation);
}

TEST_CASE("one maximal shift turns the reversed corner into the l_set") {
  const GridShape s{2, 2};
  const Params p{2, 2};
  const CellSet a = support::cells(s, {{1, 2}, {2, 1}, {2, 2}});
  ReachOptions opts;
  opts.maximal_only = true;
  const ReachResult r = shift_reach(a, p, opts);
  CHECK(r.status == ReachStatus::found);
  REQUIRE(r.path.size() == 1);
  CHECK(r.path[0].infected == Vertex{1, 1});
  CHECK(r.path[0].removed == Vertex{2, 2});
}
