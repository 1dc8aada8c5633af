#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hperc/lattice.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Cells to_oracle(const hperc::CellSet& a) {
  const auto occ = a.occupancy();
  return {occ.begin(), occ.end()};
}

inline hperc::CellSet from_oracle(const hperc::GridShape& shape, const oracle::Cells& cells) {
  hperc::CellSet out(shape);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) out.insert_index(i);
  }
  return out;
}

inline hperc::CellSet random_set(const hperc::GridShape& shape, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  hperc::CellSet out(shape);
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    if (coin(rng)) out.insert_index(i);
  }
  return out;
}

inline hperc::CellSet cells(const hperc::GridShape& shape, std::initializer_list<hperc::Vertex> members) {
  hperc::CellSet out(shape);
  for (const auto& v : members) out.insert(v);
  return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace support
