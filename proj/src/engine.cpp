#include "hperc/engine.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <random>
#include <set>

namespace hperc {

namespace {

using Offset = std::ptrdiff_t;

// Enumerates infecting edges of one vertex. Candidate side values on an axis
// are restricted to coordinates x for which v with that coordinate replaced
// by x is already infected, since every such vertex lies in the edge.
class EdgeSearch {
 public:
  EdgeSearch(const CellSet& a, std::size_t vertex, const Params& params)
      : a_(a), shape_(a.shape()), params_(params), vertex_(vertex) {
    const int d = shape_.dimension();
    coords_.resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) coords_[static_cast<std::size_t>(k)] = shape_.coordinate(vertex, k);
  }

  // visit(axes, chosen) where chosen[j] lists the t-1 other values on axes[j].
  template <typename Visit>
  void run(Visit&& visit) {
    const int d = shape_.dimension();
    const int r = params_.r;
    std::vector<int> eligible;
    for (int k = 0; k < d; ++k) {
      if (shape_.extent(k) >= params_.t) eligible.push_back(k);
    }
    if (static_cast<int>(eligible.size()) < r) return;

    // r-subsets of eligible axes in lexicographic order.
    std::vector<std::size_t> pick(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) pick[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j);
    while (true) {
      axes_.clear();
      for (auto p : pick) axes_.push_back(eligible[p]);
      if (!search_axes(visit)) return;
      int j = r - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == eligible.size() - static_cast<std::size_t>(r - j)) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int i = j + 1; i < r; ++i) pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

 private:
  template <typename Visit>
  bool search_axes(Visit& visit) {
    const auto r = axes_.size();
    candidates_.assign(r, {});
    for (std::size_t j = 0; j < r; ++j) {
      const int k = axes_[j];
      const int c = coords_[static_cast<std::size_t>(k)];
      for (int x = 1; x <= shape_.extent(k); ++x) {
        if (x == c) continue;
        if (a_.contains_index(shifted(vertex_, k, x - c))) candidates_[j].push_back(x);
      }
      if (static_cast<int>(candidates_[j].size()) < params_.t - 1) return true;
    }
    chosen_.assign(r, {});
    deltas_.assign(r, {});
    return choose_axis(0, visit);
  }

  std::size_t shifted(std::size_t index, int axis, int by) const {
    return static_cast<std::size_t>(static_cast<Offset>(index) + static_cast<Offset>(by) * static_cast<Offset>(shape_.stride(axis)));
  }

  template <typename Visit>
  bool choose_axis(std::size_t j, Visit& visit) {
    if (j == axes_.size()) return visit(axes_, chosen_);
    const auto& cand = candidates_[j];
    const auto need = static_cast<std::size_t>(params_.t - 1);
    std::vector<std::size_t> pick(need);
    for (std::size_t i = 0; i < need; ++i) pick[i] = i;
    while (true) {
      chosen_[j].clear();
      for (auto p : pick) chosen_[j].push_back(cand[p]);
      build_deltas(j);
      if (new_vertices_infected(j)) {
        if (!choose_axis(j + 1, visit)) return false;
      }
      std::size_t i = need;
      while (i > 0 && pick[i - 1] == cand.size() - (need - (i - 1))) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t q = i; q < need; ++q) pick[q] = pick[q - 1] + 1;
    }
    return true;
  }

  void build_deltas(std::size_t j) {
    const int k = axes_[j];
    const int c = coords_[static_cast<std::size_t>(k)];
    auto& out = deltas_[j];
    out.clear();
    out.push_back(0);
    for (int x : chosen_[j]) out.push_back(static_cast<Offset>(x - c) * static_cast<Offset>(shape_.stride(k)));
  }

  // Checks the edge vertices whose coordinate on axes_[j] differs from v,
  // with axes before j ranging over their chosen sides.
  bool new_vertices_infected(std::size_t j) const {
    std::vector<std::size_t> pos(j + 1, 0);
    pos[j] = 1;
    while (true) {
      Offset off = static_cast<Offset>(vertex_);
      for (std::size_t i = 0; i <= j; ++i) off += deltas_[i][pos[i]];
      if (!a_.contains_index(static_cast<std::size_t>(off))) return false;
      std::size_t i = 0;
      for (; i <= j; ++i) {
        if (++pos[i] < deltas_[i].size()) break;
        pos[i] = i == j ? 1 : 0;
      }
      if (i > j) return true;
    }
  }

  const CellSet& a_;
  const GridShape& shape_;
  const Params& params_;
  std::size_t vertex_;
  std::vector<int> coords_;
  std::vector<int> axes_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<int>> chosen_;
  std::vector<std::vector<Offset>> deltas_;
};

Edge make_edge(const CellSet& a, std::size_t vertex, const Params& params, const std::vector<int>& axes,
               const std::vector<std::vector<int>>& chosen) {
  const auto& shape = a.shape();
  std::vector<std::vector<int>> sides(static_cast<std::size_t>(shape.dimension()));
  for (int k = 0; k < shape.dimension(); ++k) sides[static_cast<std::size_t>(k)] = {shape.coordinate(vertex, k)};
  for (std::size_t j = 0; j < axes.size(); ++j) {
    auto& side = sides[static_cast<std::size_t>(axes[j])];
    side.insert(side.end(), chosen[j].begin(), chosen[j].end());
  }
  return Edge(shape, params, std::move(sides));
}

int hamming(const GridShape& shape, std::size_t x, std::size_t y) {
  int diff = 0;
  for (int k = 0; k < shape.dimension(); ++k) diff += shape.coordinate(x, k) != shape.coordinate(y, k);
  return diff;
}

}  // namespace

CellSet StepTrace::terminal() const {
  CellSet out = start;
  for (const auto& s : steps) out.insert(s.infected);
  return out;
}

bool has_edges(const GridShape& shape, const Params& params) {
  const auto long_axes = std::count_if(shape.dims().begin(), shape.dims().end(), [&](int n) { return n >= params.t; });
  return long_axes >= params.r;
}

void for_each_infecting_edge(const CellSet& a, const Vertex& v, const Params& params,
                             const std::function<bool(const Edge&)>& visit) {
  params.validate(a.shape());
  const std::size_t index = a.shape().index_of(v);
  if (a.contains_index(index)) throw PreconditionViolation("vertex " + to_string(v) + " is already infected");
  EdgeSearch search(a, index, params);
  search.run([&](const std::vector<int>& axes, const std::vector<std::vector<int>>& chosen) {
    return visit(make_edge(a, index, params, axes, chosen));
  });
}

std::vector<Edge> infecting_edges(const CellSet& a, const Vertex& v, const Params& params) {
  std::vector<Edge> out;
  for_each_infecting_edge(a, v, params, [&](const Edge& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<Edge> infecting_edge(const CellSet& a, const Vertex& v, const Params& params) {
  std::optional<Edge> out;
  for_each_infecting_edge(a, v, params, [&](const Edge& e) {
    out = e;
    return false;
  });
  return out;
}

bool is_infectable(const CellSet& a, std::size_t index, const Params& params) {
  if (a.contains_index(index)) return false;
  bool found = false;
  EdgeSearch search(a, index, params);
  search.run([&](const auto&, const auto&) {
    found = true;
    return false;
  });
  return found;
}

CellSet phase_step(const CellSet& a, const Params& params) {
  params.validate(a.shape());
  CellSet next = a;
  if (!has_edges(a.shape(), params)) return next;
  for (std::size_t i = 0; i < a.shape().cell_count(); ++i) {
    if (is_infectable(a, i, params)) next.insert_index(i);
  }
  return next;
}

namespace {

// Phase iteration where, after the first phase, only vertices within
// Hamming distance r of a newly infected vertex are re-examined: any edge
// that became infecting contains a new vertex and v, which differ on at
// most the r varying axes.
template <typename OnPhase>
CellSet run_phases(const CellSet& a, const Params& params, OnPhase&& on_phase) {
  params.validate(a.shape());
  const auto& shape = a.shape();
  CellSet current = a;
  if (!has_edges(shape, params)) return current;
  std::vector<std::size_t> fresh;
  bool first = true;
  while (true) {
    std::vector<std::size_t> infected;
    for (std::size_t i = 0; i < shape.cell_count(); ++i) {
      if (current.contains_index(i)) continue;
      if (!first && params.r < shape.dimension()) {
        const bool near = std::any_of(fresh.begin(), fresh.end(), [&](std::size_t u) { return hamming(shape, i, u) <= params.r; });
        if (!near) continue;
      }
      if (is_infectable(current, i, params)) infected.push_back(i);
    }
    if (infected.empty()) return current;
    for (auto i : infected) current.insert_index(i);
    on_phase(current);
    fresh = std::move(infected);
    first = false;
  }
}

}  // namespace

FullForm full_form(const CellSet& a, const Params& params) {
  PhaseTrace trace;
  trace.phases.push_back(a);
  CellSet result = run_phases(a, params, [&](const CellSet& phase) { trace.phases.push_back(phase); });
  return {std::move(result), std::move(trace)};
}

CellSet closure(const CellSet& a, const Params& params) {
  return run_phases(a, params, [](const CellSet&) {});
}

bool percolates(const CellSet& a, const Params& params) {
  return closure(a, params).is_full();
}

bool one_phase(const CellSet& a, const Params& params) {
  params.validate(a.shape());
  if (!has_edges(a.shape(), params)) return a.is_full();
  for (std::size_t i = 0; i < a.shape().cell_count(); ++i) {
    if (!a.contains_index(i) && !is_infectable(a, i, params)) return false;
  }
  return true;
}

StepTrace step_by_step(const CellSet& a, const Params& params, Selection selection) {
  params.validate(a.shape());
  const auto& shape = a.shape();
  StepTrace trace{a, {}};
  if (!has_edges(shape, params)) return trace;

  CellSet current = a;
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (is_infectable(current, i, params)) ready.insert(i);
  }
  std::mt19937_64 rng(selection.seed);
  while (!ready.empty()) {
    auto it = ready.begin();
    if (selection.kind == Selection::Kind::seeded_random) {
      std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
      it = std::next(ready.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
    }
    const std::size_t u = *it;
    ready.erase(it);
    const Vertex v = shape.vertex_at(u);
    auto edge = infecting_edge(current, v, params);
    current.insert_index(u);
    trace.steps.push_back({v, std::move(*edge)});
    // Infectability is monotone, so only vertices near u can join `ready`.
    for (std::size_t i = 0; i < shape.cell_count(); ++i) {
      if (current.contains_index(i) || ready.contains(i) || hamming(shape, i, u) > params.r) continue;
      if (is_infectable(current, i, params)) ready.insert(i);
    }
  }
  return trace;
}

}  // namespace hperc
