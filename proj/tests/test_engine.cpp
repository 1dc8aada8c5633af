#include "doctest.h"
#include "hperc/constructions.hpp"
#include "hperc/engine.hpp"
#include "support.hpp"

using namespace hperc;
using support::cells;

namespace {

struct Config {
  std::vector<int> dims;
  Params params;
};

const std::vector<Config> kConfigs{
    {{4, 4}, {2, 2}}, {{3, 5}, {3, 2}}, {{2, 3, 3}, {2, 2}}, {{3, 3, 3}, {2, 3}},
    {{4, 3, 2}, {2, 1}}, {{5}, {3, 1}}, {{2, 2, 2, 2}, {2, 2}}, {{3, 4, 4}, {3, 2}},
};

}  // namespace

TEST_CASE("infecting edge examples") {
  const GridShape s{2, 5};
  const Params p{2, 2};
  const CellSet a = cells(s, {{1, 1}, {1, 5}, {2, 1}});
  const auto e = infecting_edge(a, Vertex{2, 5}, p);
  REQUIRE(e);
  CHECK(*e == Edge(s, p, {{1, 2}, {1, 5}}));
  CHECK(infecting_edges(a, Vertex{2, 5}, p).size() == 1);

  CHECK_FALSE(infecting_edge(CellSet(s), Vertex{1, 1}, p));
  CHECK_FALSE(infecting_edge(CellSet(GridShape{3, 3, 3}), Vertex{2, 2, 2}, Params{2, 1}));

  const GridShape line{3};
  const auto e1 = infecting_edge(cells(line, {{1}}), Vertex{3}, Params{2, 1});
  REQUIRE(e1);
  CHECK(*e1 == Edge(line, Params{2, 1}, {{1, 3}}));
}

TEST_CASE("infecting edge of an infected vertex is a precondition violation") {
  const GridShape s{2, 2};
  const CellSet a = cells(s, {{1, 1}});
  CHECK_THROWS_AS((infecting_edges(a, Vertex{1, 1}, Params{2, 2})), PreconditionViolation);
}

TEST_CASE("infecting edges agree with explicit enumeration") {
  std::mt19937_64 rng(11);
  for (const auto& cfg : kConfigs) {
    const GridShape s(cfg.dims);
    const oracle::Hypergraph h(cfg.dims, cfg.params.t, cfg.params.r);
    for (int trial = 0; trial < 30; ++trial) {
      const CellSet a = support::random_set(s, rng, 0.6);
      for (std::size_t i = 0; i < s.cell_count(); ++i) {
        if (a.contains_index(i)) continue;
        std::set<std::set<std::size_t>> expected;
        for (const auto& e : h.edges()) {
          if (std::find(e.begin(), e.end(), i) == e.end()) continue;
          if (std::all_of(e.begin(), e.end(), [&](std::size_t j) { return j == i || a.contains_index(j); })) {
            expected.emplace(e.begin(), e.end());
          }
        }
        std::set<std::set<std::size_t>> got;
        std::vector<Edge> list = infecting_edges(a, s.vertex_at(i), cfg.params);
        CHECK(std::is_sorted(list.begin(), list.end()));
        for (const auto& e : list) {
          std::set<std::size_t> members;
          for (const auto& v : edge_vertices(e)) members.insert(s.index_of(v));
          got.insert(members);
        }
        CHECK(got == expected);
        CHECK(got.size() == list.size());
        CHECK(is_infectable(a, i, cfg.params) == !expected.empty());
      }
    }
  }
}

TEST_CASE("phases agree with explicit enumeration") {
  std::mt19937_64 rng(12);
  for (const auto& cfg : kConfigs) {
    const GridShape s(cfg.dims);
    const oracle::Hypergraph h(cfg.dims, cfg.params.t, cfg.params.r);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int trial = 0; trial < 60; ++trial) {
      const CellSet a = support::random_set(s, rng, density(rng));
      const auto expected = h.phases(support::to_oracle(a));
      const FullForm ff = full_form(a, cfg.params);
      REQUIRE(ff.trace.phases.size() == expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k) CHECK(support::to_oracle(ff.trace.phases[k]) == expected[k]);
      CHECK(support::to_oracle(phase_step(a, cfg.params)) == h.step(support::to_oracle(a)));
      CHECK(closure(a, cfg.params) == ff.closure);
      CHECK(percolates(a, cfg.params) == h.percolates(support::to_oracle(a)));
      CHECK(one_phase(a, cfg.params) == h.one_phase(support::to_oracle(a)));
    }
  }
}

TEST_CASE("phase step examples") {
  const GridShape s{5, 6};
  const Params p{2, 2};
  CHECK(phase_step(CellSet::full(s), p) == CellSet::full(s));
  CHECK(phase_step(l_set(s, p), p) == CellSet::full(s));
  CHECK(phase_step(CellSet(GridShape{2, 2}), p).empty());
}

TEST_CASE("full form examples") {
  const GridShape s{2, 2};
  const Params p{2, 2};
  const FullForm full = full_form(CellSet::full(s), p);
  CHECK(full.closure.is_full());
  CHECK(full.trace.terminal_phase() == 0);
  const FullForm corner = full_form(cells(s, {{1, 1}, {1, 2}, {2, 1}}), p);
  CHECK(corner.closure.is_full());
  CHECK(corner.trace.terminal_phase() == 1);
  const FullForm empty = full_form(CellSet(s), p);
  CHECK(empty.trace.terminal_phase() == 0);
  CHECK(empty.closure.empty());
}

TEST_CASE("percolation examples") {
  const Params p{2, 2};
  CHECK(percolates(l_set(GridShape{3, 3}, p), p));
  CHECK_FALSE(percolates(CellSet(GridShape{1, 1}), p));
  CHECK(percolates(cells(GridShape{1}, {{1}}), Params{2, 1}));
  // A row without cells stays empty.
  const GridShape s{3, 4};
  CellSet a = CellSet::full(s);
  for (int j = 1; j <= 4; ++j) a.erase(Vertex{2, j});
  CHECK_FALSE(percolates(a, p));
  CHECK(closure(a, p) == a);
}

TEST_CASE("one-phase examples") {
  const Params p{2, 2};
  CHECK(one_phase(l_set(GridShape{5, 6}, p), p));
  CHECK(one_phase(CellSet::full(GridShape{3, 3}), p));
  CHECK_FALSE(one_phase(cells(GridShape{2, 2}, {{1, 1}}), p));
  // Percolates in two phases but not one.
  const GridShape s{3, 3};
  const CellSet staircase = cells(s, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  CHECK(percolates(staircase, p));
  CHECK_FALSE(one_phase(staircase, p));
  CHECK(full_form(staircase, p).trace.terminal_phase() == 2);
}

TEST_CASE("grids without edges") {
  CHECK_FALSE(has_edges(GridShape{1, 5}, Params{2, 2}));
  CHECK(has_edges(GridShape{2, 5}, Params{2, 2}));
  CHECK_FALSE(has_edges(GridShape{2, 2}, Params{3, 1}));
  const GridShape s{1, 3};
  CHECK_FALSE(percolates(cells(s, {{1, 1}, {1, 2}}), Params{2, 2}));
  CHECK(percolates(CellSet::full(s), Params{2, 2}));
}

TEST_CASE("step-by-step percolation") {
  const GridShape s{2, 2};
  const Params p{2, 2};
  CHECK(step_by_step(CellSet::full(s), p).steps.empty());
  const StepTrace one = step_by_step(cells(s, {{1, 1}, {1, 2}, {2, 1}}), p);
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].infected == Vertex{2, 2});
  CHECK(one.steps[0].edge == Edge(s, p, {{1, 2}, {1, 2}}));
  CHECK(one.terminal().is_full());
}

TEST_CASE("step-by-step terminal set does not depend on the order") {
  std::mt19937_64 rng(13);
  for (const auto& cfg : kConfigs) {
    const GridShape s(cfg.dims);
    for (int trial = 0; trial < 10; ++trial) {
      const CellSet a = support::random_set(s, rng, 0.3);
      const CellSet expected = closure(a, cfg.params);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const StepTrace trace = step_by_step(a, cfg.params, Selection::random(seed));
        CHECK(trace.terminal() == expected);
        CHECK(trace.steps.size() == expected.size() - a.size());
        CellSet current = a;
        for (const auto& step : trace.steps) {
          CHECK_FALSE(current.contains(step.infected));
          CHECK(step.edge.contains(step.infected));
          for (const auto& v : edge_vertices(step.edge)) {
            if (v != step.infected) CHECK(current.contains(v));
          }
          current.insert(step.infected);
        }
      }
      CHECK(step_by_step(a, cfg.params).terminal() == expected);
    }
  }
}

TEST_CASE("seeded step order is reproducible") {
  const GridShape s{4, 4};
  const Params p{2, 2};
  const CellSet a = cells(s, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 1}, {4, 1}});
  const StepTrace x = step_by_step(a, p, Selection::random(5));
  const StepTrace y = step_by_step(a, p, Selection::random(5));
  REQUIRE(x.steps.size() == y.steps.size());
  for (std::size_t i = 0; i < x.steps.size(); ++i) {
    CHECK(x.steps[i].infected == y.steps[i].infected);
    CHECK(x.steps[i].edge == y.steps[i].edge);
  }
  // Lexicographic selection infects the least infectable vertex first.
  CHECK(step_by_step(a, p).steps.front().infected == Vertex{2, 2});
}

TEST_CASE("shape mismatch between set and params is rejected") {
  CHECK_THROWS_AS((full_form(CellSet(GridShape{3, 3}), Params{2, 3})), InvalidInput);
  CHECK_THROWS_AS((full_form(CellSet(GridShape{3, 3}), Params{1, 2})), InvalidInput);
}
