#pragma once

#include <cstdint>
#include <vector>

#include "hperc/lattice.hpp"

namespace hperc {

// Vertices with at most r-1 coordinates exceeding t-1.
CellSet l_set(const GridShape& shape, const Params& params);

// Counts l_set members directly, without materialising the set or using
// the closed-form sum.
std::int64_t l_set_cardinality(const GridShape& shape, const Params& params);

struct MFormulaTerms {
  // terms[s] = sum over s-subsets I of [d] of (t-1)^(d-s) * prod_{i in I} (n_i + 1 - t)
  std::vector<std::int64_t> terms;
  std::int64_t total = 0;
  // Some n_i < t - 1, so a factor (n_i + 1 - t) is negative.
  bool has_negative_factor = false;
};

MFormulaTerms m_formula(const GridShape& shape, const Params& params);

}  // namespace hperc
