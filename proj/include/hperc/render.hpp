#pragma once

// Grid pictures of vertex sets. Two-dimensional sets are drawn with rows
// top to bottom and columns left to right; three-dimensional sets as one
// panel per slice along the first axis.
//
// ASCII legend: '#' infected, '.' uninfected, '*' newly infected in this
// frame, 'o' member of the highlighted edge.

#include <optional>
#include <string>
#include <vector>

#include "hperc/engine.hpp"
#include "hperc/lattice.hpp"

namespace hperc {

inline constexpr int kSvgFormatVersion = 1;
inline constexpr int kSvgCell = 20;

struct Frame {
  std::string title;
  CellSet cells;
  // Cells of `cells` outside `previous` are drawn as newly infected.
  std::optional<CellSet> previous;
  std::optional<Edge> highlight;
};

// Throws InvalidInput for sets of dimension above 3.
std::string render_ascii(const std::vector<Frame>& frames);
std::string render_svg(const std::vector<Frame>& frames);

std::vector<Frame> phase_frames(const PhaseTrace& trace);
std::vector<Frame> step_frames(const StepTrace& trace);

}  // namespace hperc
