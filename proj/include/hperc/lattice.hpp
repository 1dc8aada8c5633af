#pragma once

// Vertex sets over the hyperrectangle graph [n1] x ... x [nd].
//
// Coordinates are 1-based everywhere in the public API. Axis indices are
// 0-based in C++ (they index GridShape::dims()) and 1-based in JSON.
// Internally a cell is addressed by its row-major linear index with the
// first axis most significant.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hperc {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense occupancy is used throughout, so shapes are capped well below what
// a 64-bit index could address.
inline constexpr std::int64_t kMaxCells = std::int64_t{1} << 24;

class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> coords) : coords_(std::move(coords)) {}
  Vertex(std::initializer_list<int> coords) : coords_(coords) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
  int& operator[](int axis) { return coords_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& coords() const { return coords_; }

  long coordinate_sum() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const Vertex& v);

class GridShape {
 public:
  explicit GridShape(std::vector<int> dims);
  GridShape(std::initializer_list<int> dims) : GridShape(std::vector<int>(dims)) {}

  int dimension() const { return static_cast<int>(dims_.size()); }
  int extent(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  std::size_t cell_count() const { return count_; }

  bool contains(const Vertex& v) const;
  std::size_t index_of(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;
  // 1-based coordinate of `index` along `axis`.
  int coordinate(std::size_t index, int axis) const {
    return static_cast<int>((index / stride(axis)) % static_cast<std::size_t>(extent(axis))) + 1;
  }

  GridShape without_axis(int axis) const;
  GridShape with_extent(int axis, int extent) const;

  friend bool operator==(const GridShape& a, const GridShape& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 1;
};

std::string to_string(const GridShape& shape);

// Infection threshold t (side length of an edge) and edge rank r.
struct Params {
  int t = 2;
  int r = 2;

  // Throws InvalidInput unless t >= 2 and 1 <= r <= shape.dimension().
  void validate(const GridShape& shape) const;

  friend bool operator==(const Params&, const Params&) = default;
};

std::int64_t cell_count(const GridShape& shape);
std::int64_t edgesum(const GridShape& shape);

class CellSet {
 public:
  explicit CellSet(GridShape shape);
  CellSet(GridShape shape, std::span<const Vertex> members);

  static CellSet full(GridShape shape);
  static CellSet from_indices(GridShape shape, std::span<const std::size_t> indices);

  const GridShape& shape() const { return shape_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == shape_.cell_count(); }

  bool contains(const Vertex& v) const { return occupancy_[shape_.index_of(v)] != 0; }
  bool contains_index(std::size_t i) const { return occupancy_[i] != 0; }

  void insert(const Vertex& v) { insert_index(shape_.index_of(v)); }
  void erase(const Vertex& v) { erase_index(shape_.index_of(v)); }
  void insert_index(std::size_t i) {
    if (!occupancy_[i]) {
      occupancy_[i] = 1;
      ++count_;
    }
  }
  void erase_index(std::size_t i) {
    if (occupancy_[i]) {
      occupancy_[i] = 0;
      --count_;
    }
  }

  // Members in ascending lexicographic (= linear index) order.
  std::vector<Vertex> members() const;
  std::vector<std::size_t> indices() const;
  std::span<const std::uint8_t> occupancy() const { return occupancy_; }

  bool is_subset_of(const CellSet& other) const;
  CellSet united(const CellSet& other) const;

  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.shape_ == b.shape_ && a.occupancy_ == b.occupancy_;
  }

 private:
  void check_compatible(const CellSet& other) const;

  GridShape shape_;
  std::vector<std::uint8_t> occupancy_;
  std::size_t count_ = 0;
};

// A hyperedge I_1 x ... x I_d: on r axes the side is a t-element set of
// coordinates, elsewhere a single coordinate. Sides are kept sorted.
class Edge {
 public:
  Edge() = default;
  // Throws InvalidInput if the sides do not describe an edge of (shape, params).
  Edge(const GridShape& shape, const Params& params, std::vector<std::vector<int>> sides);

  int dimension() const { return static_cast<int>(sides_.size()); }
  const std::vector<std::vector<int>>& sides() const { return sides_; }
  const std::vector<int>& side(int axis) const { return sides_[static_cast<std::size_t>(axis)]; }
  // Axes whose side has more than one value, ascending (0-based).
  std::vector<int> axes() const;
  std::size_t vertex_count() const;
  bool contains(const Vertex& v) const;
  // Vertex with the largest value on every side; the unique maximiser of the
  // coordinate sum over the edge.
  Vertex top_corner() const;

  friend bool operator==(const Edge&, const Edge&) = default;
  // Axes ascending first, then side tuples ascending axis by axis.
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b);

 private:
  std::vector<std::vector<int>> sides_;
};

std::string to_string(const Edge& e);

// All t^r vertices of the edge, in lexicographic order.
std::vector<Vertex> edge_vertices(const Edge& edge);

// Members of `a` whose coordinate along `axis` equals m; same shape as `a`.
CellSet slice(const CellSet& a, int axis, int m);

// Drops coordinate `axis` from every member. Throws PreconditionViolation if
// `require_single_slice` is set and `a` meets more than one slice.
CellSet project(const CellSet& a, int axis, bool require_single_slice = false);

// The m-th P-slice along `axis` (project(slice(a, axis, m), axis)).
CellSet p_slice(const CellSet& a, int axis, int m);

// Key that is identical for sets which differ by a permutation of slices
// along any axes, computed as the lexicographically least slice-sorted
// encoding over the permutation group when that group is small enough,
// otherwise by iterated slice sorting.
std::string canonical_key(const CellSet& a);

// Relabels coordinates: the member x maps to (perm[0][x_1 - 1], ...).
// Each perm[k] is a permutation of [n_k] (1-based values).
CellSet permute(const CellSet& a, std::span<const std::vector<int>> perms);

}  // namespace hperc
