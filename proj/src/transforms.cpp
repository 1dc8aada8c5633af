#include "hperc/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace hperc {

namespace {

void require_planar(const CellSet& a) {
  if (a.shape().dimension() != 2) throw InvalidInput("operation requires a two-dimensional set");
}

std::vector<int> p_row(const CellSet& a, int row) {
  std::vector<int> out;
  for (int c = 1; c <= a.shape().extent(1); ++c) {
    if (a.contains(Vertex{row, c})) out.push_back(c);
  }
  return out;
}

bool disjoint(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> both;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
  return both.empty();
}

long total_coordinate_sum(const CellSet& a) {
  long sum = 0;
  for (const auto& v : a.members()) sum += v.coordinate_sum();
  return sum;
}

}  // namespace

CellSet union_slices(const CellSet& a, int axis, int m1, int m2) {
  const auto& shape = a.shape();
  if (axis < 0 || axis >= shape.dimension()) throw InvalidInput("axis out of range");
  const int n = shape.extent(axis);
  if (m1 < 1 || m1 > n || m2 < 1 || m2 > n) throw InvalidInput("slice index out of range");
  if (m1 == m2) throw InvalidInput("union_slices needs two distinct slices");
  const int keep = std::min(m1, m2);
  const int drop = std::max(m1, m2);
  CellSet out(shape.with_extent(axis, n - 1));
  for (auto v : a.members()) {
    if (v[axis] == drop) {
      v[axis] = keep;
    } else if (v[axis] > drop) {
      --v[axis];
    }
    out.insert(v);
  }
  return out;
}

CellSet remove_slice(const CellSet& a, int axis, int m) {
  const auto& shape = a.shape();
  if (axis < 0 || axis >= shape.dimension()) throw InvalidInput("axis out of range");
  const int n = shape.extent(axis);
  if (m < 1 || m > n) throw InvalidInput("slice index out of range");
  if (n == 1) throw InvalidInput("cannot remove the only slice along an axis");
  CellSet out(shape.with_extent(axis, n - 1));
  for (auto v : a.members()) {
    if (v[axis] == m) continue;
    if (v[axis] > m) --v[axis];
    out.insert(v);
  }
  return out;
}

CellSet repack_first_column(const CellSet& a, const Params& params) {
  require_planar(a);
  params.validate(a.shape());
  const int t = params.t;
  if (a.shape().extent(1) < t) throw InvalidInput("repacking needs at least t columns");
  CellSet out = a;
  for (int k = 1; k <= a.shape().extent(0); ++k) {
    if (!a.contains(Vertex{k, 1})) continue;
    int leftmost_empty = 0;
    for (int c = 1; c <= t; ++c) {
      if (!a.contains(Vertex{k, c})) {
        leftmost_empty = c;
        break;
      }
    }
    if (leftmost_empty == 0) continue;
    out.erase(Vertex{k, 1});
    out.insert(Vertex{k, leftmost_empty});
  }
  return out;
}

std::optional<CornerPlacement> place_blocked_edge_in_corner(const CellSet& a, const Params& params) {
  require_planar(a);
  params.validate(a.shape());
  const auto& shape = a.shape();
  const int t = params.t;
  if (params.r != 2) throw InvalidInput("corner placement needs r = 2");
  if (shape.extent(0) < t || shape.extent(1) < t) throw InvalidInput("corner placement needs n1, n2 >= t");
  if (!one_phase(a, params)) throw PreconditionViolation("set does not percolate in one phase");

  const CellSet minus = remove_slice(a, 1, 1);
  if (one_phase(minus, params)) return std::nullopt;

  std::optional<Vertex> blocked;
  for (std::size_t i = 0; i < shape.cell_count() && !blocked; ++i) {
    if (a.contains_index(i)) continue;
    Vertex v = shape.vertex_at(i);
    if (v[1] == 1) continue;
    const Vertex reduced{v[0], v[1] - 1};
    if (!is_infectable(minus, minus.shape().index_of(reduced), params)) blocked = v;
  }
  if (!blocked) throw std::logic_error("no blocked vertex although the reduced set is not one-phase");
  const Vertex v = *blocked;
  const Edge e0 = *infecting_edge(a, v, params);

  std::vector<int> row_map(static_cast<std::size_t>(shape.extent(0)), 0);
  std::vector<int> col_map(static_cast<std::size_t>(shape.extent(1)), 0);
  int next = 1;
  for (int x : e0.side(0)) {
    if (x != v[0]) row_map[static_cast<std::size_t>(x - 1)] = next++;
  }
  row_map[static_cast<std::size_t>(v[0] - 1)] = next++;
  for (int x = 1; x <= shape.extent(0); ++x) {
    if (row_map[static_cast<std::size_t>(x - 1)] == 0) row_map[static_cast<std::size_t>(x - 1)] = next++;
  }
  const auto& cols = e0.side(1);
  if (cols.front() != 1) throw std::logic_error("blocking edge avoids the first column");
  col_map[0] = 1;
  next = 2;
  for (int y : cols) {
    if (y != 1 && y != v[1]) col_map[static_cast<std::size_t>(y - 1)] = next++;
  }
  col_map[static_cast<std::size_t>(v[1] - 1)] = next++;
  for (int y = 1; y <= shape.extent(1); ++y) {
    if (col_map[static_cast<std::size_t>(y - 1)] == 0) col_map[static_cast<std::size_t>(y - 1)] = next++;
  }

  const std::vector<std::vector<int>> perms{row_map, col_map};
  std::vector<int> corner(static_cast<std::size_t>(t));
  std::iota(corner.begin(), corner.end(), 1);
  return CornerPlacement{permute(a, perms), Vertex{t, t}, Edge(shape, params, {corner, corner}), row_map, col_map};
}

// Shifts

ShiftResult shift(const CellSet& a, const Edge& e, const Vertex& w) {
  if (e.dimension() != a.shape().dimension()) throw InvalidInput("edge dimension does not match the set");
  std::optional<Vertex> missing;
  for (const auto& u : edge_vertices(e)) {
    if (a.contains(u)) continue;
    if (missing) throw PreconditionViolation("edge " + to_string(e) + " is not an infecting edge of the set");
    missing = u;
  }
  if (!missing) throw PreconditionViolation("edge " + to_string(e) + " is fully infected");
  if (!e.contains(w) || w == *missing) {
    throw PreconditionViolation("shift target " + to_string(w) + " must be an infected vertex of the edge");
  }
  CellSet out = a;
  out.insert(*missing);
  out.erase(w);
  const bool maximal = w.coordinate_sum() == maximal_shift_target(e).coordinate_sum();
  return {std::move(out), ShiftRecord{e, *missing, w, maximal}};
}

Vertex maximal_shift_target(const Edge& e) {
  auto vertices = edge_vertices(e);
  return *std::max_element(vertices.begin(), vertices.end(), [](const Vertex& x, const Vertex& y) {
    const long sx = x.coordinate_sum();
    const long sy = y.coordinate_sum();
    return sx != sy ? sx < sy : x < y;
  });
}

bool is_standard_position(const Edge& e, const CellSet& a) {
  std::optional<Vertex> missing;
  for (const auto& u : edge_vertices(e)) {
    if (a.contains(u)) continue;
    if (missing) throw PreconditionViolation("edge is not an infecting edge of the set");
    missing = u;
  }
  if (!missing) throw PreconditionViolation("edge is fully infected");
  return missing->coordinate_sum() == maximal_shift_target(e).coordinate_sum();
}

namespace {

struct Candidate {
  Vertex v;
  Edge e;
};

std::optional<Candidate> first_nonstandard(const CellSet& a, const Params& params) {
  const auto& shape = a.shape();
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (!is_infectable(a, i, params)) continue;
    const Vertex v = shape.vertex_at(i);
    std::optional<Candidate> found;
    for_each_infecting_edge(a, v, params, [&](const Edge& e) {
      if (e.top_corner() == v) return true;
      found = Candidate{v, e};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<Candidate> all_nonstandard(const CellSet& a, const Params& params) {
  const auto& shape = a.shape();
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (!is_infectable(a, i, params)) continue;
    const Vertex v = shape.vertex_at(i);
    for_each_infecting_edge(a, v, params, [&](const Edge& e) {
      if (e.top_corner() != v) out.push_back({v, e});
      return true;
    });
  }
  return out;
}

}  // namespace

bool has_maximal_shift(const CellSet& a, const Params& params) {
  params.validate(a.shape());
  return first_nonstandard(a, params).has_value();
}

NormalForm normalize_max_shifts(const CellSet& a, const Params& params, std::optional<std::uint64_t> seed) {
  params.validate(a.shape());
  NormalForm out{a, {}};
  std::mt19937_64 rng(seed.value_or(0));
  const long limit = total_coordinate_sum(a);
  while (true) {
    std::optional<Candidate> pick;
    if (seed) {
      auto all = all_nonstandard(out.set, params);
      if (!all.empty()) {
        std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
        pick = std::move(all[dist(rng)]);
      }
    } else {
      pick = first_nonstandard(out.set, params);
    }
    if (!pick) return out;
    if (static_cast<long>(out.shifts.size()) >= limit) {
      throw std::logic_error("maximal shifts failed to terminate within the coordinate-sum bound");
    }
    auto result = shift(out.set, pick->e, maximal_shift_target(pick->e));
    out.set = std::move(result.set);
    out.shifts.push_back(std::move(result.record));
  }
}

// Planar structure

PRowDecomposition p_row_decomposition(const CellSet& a) {
  require_planar(a);
  const int n1 = a.shape().extent(0);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n1));
  for (int k = 1; k <= n1; ++k) rows[static_cast<std::size_t>(k - 1)] = p_row(a, k);

  // Rows are joined through any shared column.
  std::vector<int> parent(static_cast<std::size_t>(n1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::map<int, int> first_row_of_column;
  for (int k = 0; k < n1; ++k) {
    for (int c : rows[static_cast<std::size_t>(k)]) {
      auto [it, inserted] = first_row_of_column.emplace(c, k);
      if (!inserted) parent[static_cast<std::size_t>(find(k))] = find(it->second);
    }
  }

  PRowDecomposition out;
  std::map<int, std::size_t> class_of_root;
  for (int k = 0; k < n1; ++k) {
    if (rows[static_cast<std::size_t>(k)].empty()) continue;
    auto [it, inserted] = class_of_root.emplace(find(k), out.classes.size());
    if (inserted) {
      out.classes.push_back({});
      out.representatives.push_back(rows[static_cast<std::size_t>(k)]);
    }
    out.classes[it->second].push_back(k + 1);
  }

  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    const auto& members = out.classes[i];
    const auto& rep = out.representatives[i];
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (disjoint(rows[static_cast<std::size_t>(members[x] - 1)], rows[static_cast<std::size_t>(members[y] - 1)])) {
          throw RowPairViolation(members[x], members[y],
                                 "rows " + std::to_string(members[x]) + " and " + std::to_string(members[y]) +
                                     " are disjoint but related: the set is not stable under maximal shifts");
        }
      }
      const auto& row = rows[static_cast<std::size_t>(members[x] - 1)];
      if (!std::includes(rep.begin(), rep.end(), row.begin(), row.end())) {
        throw RowPairViolation(members.front(), members[x],
                               "row " + std::to_string(members[x]) + " is not contained in its class representative (row " +
                                   std::to_string(members.front()) + ")");
      }
    }
  }
  return out;
}

CellSet stable_full_form(const CellSet& a) {
  const auto decomposition = p_row_decomposition(a);
  CellSet out(a.shape());
  for (std::size_t i = 0; i < decomposition.classes.size(); ++i) {
    for (int row : decomposition.classes[i]) {
      for (int col : decomposition.representatives[i]) out.insert(Vertex{row, col});
    }
  }
  return out;
}

std::optional<std::vector<ProductBlock>> product_blocks(const CellSet& a) {
  require_planar(a);
  std::vector<ProductBlock> blocks;
  for (int k = 1; k <= a.shape().extent(0); ++k) {
    auto row = p_row(a, k);
    if (row.empty()) continue;
    auto same = std::find_if(blocks.begin(), blocks.end(), [&](const ProductBlock& b) { return b.cols == row; });
    if (same != blocks.end()) {
      same->rows.push_back(k);
      continue;
    }
    for (const auto& b : blocks) {
      if (!disjoint(b.cols, row)) return std::nullopt;
    }
    blocks.push_back({{k}, std::move(row)});
  }
  return blocks;
}

}  // namespace hperc
