#include "hperc/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace hperc {

long Vertex::coordinate_sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), 0L);
}

std::string to_string(const Vertex& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.dimension(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

GridShape::GridShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidInput("shape must have at least one dimension");
  std::int64_t count = 1;
  for (int n : dims_) {
    if (n < 1) throw InvalidInput("shape extents must be positive");
    if (count > kMaxCells / n) throw InvalidInput("shape has too many cells for dense occupancy");
    count *= n;
  }
  count_ = static_cast<std::size_t>(count);
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size() - 1; k > 0; --k) {
    strides_[k - 1] = strides_[k] * static_cast<std::size_t>(dims_[k]);
  }
}

bool GridShape::contains(const Vertex& v) const {
  if (v.dimension() != dimension()) return false;
  for (int k = 0; k < dimension(); ++k) {
    if (v[k] < 1 || v[k] > extent(k)) return false;
  }
  return true;
}

std::size_t GridShape::index_of(const Vertex& v) const {
  if (!contains(v)) {
    throw InvalidInput("vertex " + to_string(v) + " is outside shape " + to_string(*this));
  }
  std::size_t index = 0;
  for (int k = 0; k < dimension(); ++k) {
    index += static_cast<std::size_t>(v[k] - 1) * stride(k);
  }
  return index;
}

Vertex GridShape::vertex_at(std::size_t index) const {
  std::vector<int> coords(dims_.size());
  for (int k = 0; k < dimension(); ++k) coords[static_cast<std::size_t>(k)] = coordinate(index, k);
  return Vertex(std::move(coords));
}

GridShape GridShape::without_axis(int axis) const {
  if (axis < 0 || axis >= dimension()) throw InvalidInput("axis out of range");
  if (dimension() == 1) throw InvalidInput("cannot drop the only axis of a shape");
  std::vector<int> dims = dims_;
  dims.erase(dims.begin() + axis);
  return GridShape(std::move(dims));
}

GridShape GridShape::with_extent(int axis, int extent) const {
  if (axis < 0 || axis >= dimension()) throw InvalidInput("axis out of range");
  std::vector<int> dims = dims_;
  dims[static_cast<std::size_t>(axis)] = extent;
  return GridShape(std::move(dims));
}

std::string to_string(const GridShape& shape) {
  std::ostringstream os;
  for (int k = 0; k < shape.dimension(); ++k) os << (k ? "x" : "") << shape.extent(k);
  return os.str();
}

void Params::validate(const GridShape& shape) const {
  if (t < 2) throw InvalidInput("t must be at least 2");
  if (r < 1 || r > shape.dimension()) {
    throw InvalidInput("r must satisfy 1 <= r <= d (d = " + std::to_string(shape.dimension()) + ")");
  }
}

std::int64_t cell_count(const GridShape& shape) {
  return static_cast<std::int64_t>(shape.cell_count());
}

std::int64_t edgesum(const GridShape& shape) {
  return std::accumulate(shape.dims().begin(), shape.dims().end(), std::int64_t{0});
}

// CellSet

CellSet::CellSet(GridShape shape) : shape_(std::move(shape)), occupancy_(shape_.cell_count(), 0) {}

CellSet::CellSet(GridShape shape, std::span<const Vertex> members) : CellSet(std::move(shape)) {
  for (const auto& v : members) insert(v);
}

CellSet CellSet::full(GridShape shape) {
  CellSet s(std::move(shape));
  std::fill(s.occupancy_.begin(), s.occupancy_.end(), 1);
  s.count_ = s.occupancy_.size();
  return s;
}

CellSet CellSet::from_indices(GridShape shape, std::span<const std::size_t> indices) {
  CellSet s(std::move(shape));
  for (std::size_t i : indices) {
    if (i >= s.occupancy_.size()) throw InvalidInput("cell index out of range");
    s.insert_index(i);
  }
  return s;
}

std::vector<Vertex> CellSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < occupancy_.size(); ++i) {
    if (occupancy_[i]) out.push_back(shape_.vertex_at(i));
  }
  return out;
}

std::vector<std::size_t> CellSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < occupancy_.size(); ++i) {
    if (occupancy_[i]) out.push_back(i);
  }
  return out;
}

void CellSet::check_compatible(const CellSet& other) const {
  if (!(shape_ == other.shape_)) throw InvalidInput("cell sets have different shapes");
}

bool CellSet::is_subset_of(const CellSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < occupancy_.size(); ++i) {
    if (occupancy_[i] && !other.occupancy_[i]) return false;
  }
  return true;
}

CellSet CellSet::united(const CellSet& other) const {
  check_compatible(other);
  CellSet out = *this;
  for (std::size_t i = 0; i < occupancy_.size(); ++i) {
    if (other.occupancy_[i]) out.insert_index(i);
  }
  return out;
}

// Edge

Edge::Edge(const GridShape& shape, const Params& params, std::vector<std::vector<int>> sides)
    : sides_(std::move(sides)) {
  params.validate(shape);
  if (static_cast<int>(sides_.size()) != shape.dimension()) {
    throw InvalidInput("edge must have one side per axis");
  }
  int varying = 0;
  for (int k = 0; k < shape.dimension(); ++k) {
    auto& side = sides_[static_cast<std::size_t>(k)];
    std::sort(side.begin(), side.end());
    if (std::adjacent_find(side.begin(), side.end()) != side.end()) {
      throw InvalidInput("edge side has repeated values");
    }
    for (int x : side) {
      if (x < 1 || x > shape.extent(k)) throw InvalidInput("edge side value out of range");
    }
    if (static_cast<int>(side.size()) == params.t) {
      ++varying;
    } else if (side.size() != 1) {
      throw InvalidInput("edge sides must have size t or 1");
    }
  }
  if (varying != params.r) throw InvalidInput("edge must vary along exactly r axes");
}

std::vector<int> Edge::axes() const {
  std::vector<int> out;
  for (int k = 0; k < dimension(); ++k) {
    if (side(k).size() > 1) out.push_back(k);
  }
  return out;
}

std::size_t Edge::vertex_count() const {
  std::size_t n = 1;
  for (const auto& s : sides_) n *= s.size();
  return n;
}

bool Edge::contains(const Vertex& v) const {
  if (v.dimension() != dimension()) return false;
  for (int k = 0; k < dimension(); ++k) {
    if (!std::binary_search(side(k).begin(), side(k).end(), v[k])) return false;
  }
  return true;
}

Vertex Edge::top_corner() const {
  std::vector<int> coords;
  coords.reserve(sides_.size());
  for (const auto& s : sides_) coords.push_back(s.back());
  return Vertex(std::move(coords));
}

std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
  if (auto c = a.axes() <=> b.axes(); c != 0) return c;
  return a.sides_ <=> b.sides_;
}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  for (int k = 0; k < e.dimension(); ++k) {
    if (k) os << 'x';
    os << '{';
    for (std::size_t j = 0; j < e.side(k).size(); ++j) os << (j ? "," : "") << e.side(k)[j];
    os << '}';
  }
  return os.str();
}

std::vector<Vertex> edge_vertices(const Edge& edge) {
  std::vector<Vertex> out;
  const int d = edge.dimension();
  if (d == 0) return out;
  out.reserve(edge.vertex_count());
  std::vector<std::size_t> pos(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<int> coords(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) coords[static_cast<std::size_t>(k)] = edge.side(k)[pos[static_cast<std::size_t>(k)]];
    out.emplace_back(std::move(coords));
    int k = d - 1;
    while (k >= 0 && ++pos[static_cast<std::size_t>(k)] == edge.side(k).size()) {
      pos[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

// Slices and projections

namespace {

void check_axis(const GridShape& shape, int axis) {
  if (axis < 0 || axis >= shape.dimension()) throw InvalidInput("axis out of range");
}

void check_slice_index(const GridShape& shape, int axis, int m) {
  check_axis(shape, axis);
  if (m < 1 || m > shape.extent(axis)) throw InvalidInput("slice index out of range");
}

}  // namespace

CellSet slice(const CellSet& a, int axis, int m) {
  const auto& shape = a.shape();
  check_slice_index(shape, axis, m);
  CellSet out(shape);
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (a.contains_index(i) && shape.coordinate(i, axis) == m) out.insert_index(i);
  }
  return out;
}

CellSet project(const CellSet& a, int axis, bool require_single_slice) {
  const auto& shape = a.shape();
  check_axis(shape, axis);
  CellSet out(shape.without_axis(axis));
  int seen = 0;
  for (const auto& v : a.members()) {
    if (require_single_slice) {
      if (seen == 0) {
        seen = v[axis];
      } else if (seen != v[axis]) {
        throw PreconditionViolation("projected set meets more than one slice");
      }
    }
    std::vector<int> coords = v.coords();
    coords.erase(coords.begin() + axis);
    out.insert(Vertex(std::move(coords)));
  }
  return out;
}

CellSet p_slice(const CellSet& a, int axis, int m) {
  return project(slice(a, axis, m), axis);
}

CellSet permute(const CellSet& a, std::span<const std::vector<int>> perms) {
  const auto& shape = a.shape();
  if (static_cast<int>(perms.size()) != shape.dimension()) {
    throw InvalidInput("need one permutation per axis");
  }
  for (int k = 0; k < shape.dimension(); ++k) {
    auto p = perms[static_cast<std::size_t>(k)];
    std::sort(p.begin(), p.end());
    std::vector<int> iota(static_cast<std::size_t>(shape.extent(k)));
    std::iota(iota.begin(), iota.end(), 1);
    if (p != iota) throw InvalidInput("not a permutation of the axis range");
  }
  CellSet out(shape);
  for (const auto& v : a.members()) {
    std::vector<int> coords(v.coords().size());
    for (int k = 0; k < shape.dimension(); ++k) {
      coords[static_cast<std::size_t>(k)] = perms[static_cast<std::size_t>(k)][static_cast<std::size_t>(v[k] - 1)];
    }
    out.insert(Vertex(std::move(coords)));
  }
  return out;
}

// canonical_key

namespace {

constexpr std::size_t kExactGroupLimit = 40320;

std::string shape_prefix(const GridShape& shape) {
  std::string out;
  for (int n : shape.dims()) {
    out += std::to_string(n);
    out += ',';
  }
  out += '|';
  return out;
}

// Pattern of every slice along `axis` of `cells`, read in row-major order of
// the remaining axes.
std::vector<std::string> slice_patterns(const GridShape& shape, std::span<const std::uint8_t> cells, int axis) {
  const auto n = static_cast<std::size_t>(shape.extent(axis));
  std::vector<std::string> patterns(n);
  const std::size_t per = shape.cell_count() / n;
  for (auto& p : patterns) p.reserve(per);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    patterns[static_cast<std::size_t>(shape.coordinate(i, axis) - 1)].push_back(static_cast<char>('0' + cells[i]));
  }
  return patterns;
}

std::string sorted_slices(const GridShape& shape, std::span<const std::uint8_t> cells, int axis) {
  auto patterns = slice_patterns(shape, cells, axis);
  std::sort(patterns.begin(), patterns.end());
  std::string out;
  for (const auto& p : patterns) out += p;
  return out;
}

bool exact_group_small(const GridShape& shape, int sorted_axis) {
  std::size_t order = 1;
  for (int k = 0; k < shape.dimension(); ++k) {
    if (k == sorted_axis) continue;
    for (int j = 2; j <= shape.extent(k); ++j) {
      order *= static_cast<std::size_t>(j);
      if (order > kExactGroupLimit) return false;
    }
  }
  return true;
}

std::string exact_key(const CellSet& a, int sorted_axis) {
  const auto& shape = a.shape();
  const int d = shape.dimension();
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    perms[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(shape.extent(k)));
    std::iota(perms[static_cast<std::size_t>(k)].begin(), perms[static_cast<std::size_t>(k)].end(), 0);
  }
  std::vector<std::uint8_t> cells(shape.cell_count());
  std::string best;
  bool first = true;
  while (true) {
    // cells(x) = a(perm(x)) on every non-sorted axis.
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t src = 0;
      for (int k = 0; k < d; ++k) {
        const auto c = static_cast<std::size_t>(shape.coordinate(i, k) - 1);
        const auto mapped = k == sorted_axis ? c : static_cast<std::size_t>(perms[static_cast<std::size_t>(k)][c]);
        src += mapped * shape.stride(k);
      }
      cells[i] = a.occupancy()[src];
    }
    auto candidate = sorted_slices(shape, cells, sorted_axis);
    if (first || candidate < best) {
      best = std::move(candidate);
      first = false;
    }
    int k = d - 1;
    for (; k >= 0; --k) {
      if (k == sorted_axis) continue;
      auto& p = perms[static_cast<std::size_t>(k)];
      if (std::next_permutation(p.begin(), p.end())) break;
    }
    if (k < 0) break;
  }
  return best;
}

// Stable-sorts slices along `axis` by pattern; returns whether anything moved.
bool sort_axis(const GridShape& shape, std::vector<std::uint8_t>& cells, int axis) {
  auto patterns = slice_patterns(shape, cells, axis);
  std::vector<std::size_t> order(patterns.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return patterns[x] < patterns[y]; });
  if (std::is_sorted(order.begin(), order.end())) return false;
  std::vector<std::size_t> rank(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) rank[order[j]] = j;
  std::vector<std::uint8_t> next(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto c = static_cast<std::size_t>(shape.coordinate(i, axis) - 1);
    const std::size_t dst = i - c * shape.stride(axis) + rank[c] * shape.stride(axis);
    next[dst] = cells[i];
  }
  bool moved = next != cells;
  cells = std::move(next);
  return moved;
}

}  // namespace

std::string canonical_key(const CellSet& a) {
  const auto& shape = a.shape();
  const auto& dims = shape.dims();
  const int sorted_axis = static_cast<int>(std::max_element(dims.begin(), dims.end()) - dims.begin());
  if (exact_group_small(shape, sorted_axis)) {
    return "C" + shape_prefix(shape) + exact_key(a, sorted_axis);
  }

  std::vector<std::uint8_t> cells(a.occupancy().begin(), a.occupancy().end());
  const int max_rounds = 2 * shape.dimension() * *std::max_element(dims.begin(), dims.end());
  for (int round = 0; round < max_rounds; ++round) {
    bool moved = false;
    for (int k = 0; k < shape.dimension(); ++k) moved = sort_axis(shape, cells, k) || moved;
    if (!moved) {
      std::string out = "S" + shape_prefix(shape);
      for (auto c : cells) out.push_back(static_cast<char>('0' + c));
      return out;
    }
  }
  std::string out = "R" + shape_prefix(shape);
  for (auto c : a.occupancy()) out.push_back(static_cast<char>('0' + c));
  return out;
}

}  // namespace hperc
