#include "hperc/constructions.hpp"

namespace hperc {

namespace {

int large_coordinates(const GridShape& shape, std::size_t index, int t) {
  int large = 0;
  for (int k = 0; k < shape.dimension(); ++k) large += shape.coordinate(index, k) > t - 1;
  return large;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

CellSet l_set(const GridShape& shape, const Params& params) {
  params.validate(shape);
  CellSet out(shape);
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (large_coordinates(shape, i, params.t) <= params.r - 1) out.insert_index(i);
  }
  return out;
}

std::int64_t l_set_cardinality(const GridShape& shape, const Params& params) {
  params.validate(shape);
  // Odometer over coordinates; independent of the linear indexing.
  const int d = shape.dimension();
  std::vector<int> x(static_cast<std::size_t>(d), 1);
  std::int64_t count = 0;
  while (true) {
    int large = 0;
    for (int v : x) large += v > params.t - 1;
    count += large <= params.r - 1;
    int k = d - 1;
    while (k >= 0 && x[static_cast<std::size_t>(k)] == shape.extent(k)) {
      x[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) return count;
    ++x[static_cast<std::size_t>(k)];
  }
}

MFormulaTerms m_formula(const GridShape& shape, const Params& params) {
  params.validate(shape);
  const int d = shape.dimension();
  const int t = params.t;
  if (d > 30) throw InvalidInput("m_formula supports at most 30 dimensions");
  MFormulaTerms out;
  out.terms.assign(static_cast<std::size_t>(params.r), 0);
  for (int n : shape.dims()) out.has_negative_factor = out.has_negative_factor || n + 1 - t < 0;

  // Subsets of [d] as bitmasks.
  for (std::uint32_t subset = 0; subset < (1u << d); ++subset) {
    const int s = __builtin_popcount(subset);
    if (s > params.r - 1) continue;
    std::int64_t product = ipow(t - 1, d - s);
    for (int i = 0; i < d; ++i) {
      if (subset & (1u << i)) product *= shape.extent(i) + 1 - t;
    }
    out.terms[static_cast<std::size_t>(s)] += product;
  }
  for (auto term : out.terms) out.total += term;
  return out;
}

}  // namespace hperc
