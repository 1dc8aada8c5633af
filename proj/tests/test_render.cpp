#include <fstream>
#include <iterator>

#include "doctest.h"
#include "hperc/constructions.hpp"
#include "hperc/render.hpp"
#include "hperc/transforms.hpp"
#include "support.hpp"

using namespace hperc;
using support::cells;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HPERC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<Frame> l_frames() {
  return {{"", l_set(GridShape{5, 6}, Params{2, 2}), std::nullopt, std::nullopt}};
}

std::vector<Frame> edge_frames() {
  const GridShape s{2, 5};
  const Params p{2, 2};
  const CellSet a = cells(s, {{1, 1}, {1, 5}, {2, 1}});
  return {{"edge infecting (2,5)", a, std::nullopt, infecting_edge(a, Vertex{2, 5}, p)}};
}

std::vector<Frame> union_frames() {
  const CellSet a = cells(GridShape{4, 5}, {{1, 1}, {1, 2}, {2, 1}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 5}});
  return {{"before", a, std::nullopt, std::nullopt}, {"after", union_slices(a, 0, 3, 4), std::nullopt, std::nullopt}};
}

std::vector<Frame> cube_phases() {
  const GridShape s{2, 2, 2};
  const Params p{2, 2};
  return phase_frames(full_form(cells(s, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}), p).trace);
}

}  // namespace

TEST_CASE("ascii legend") {
  const GridShape s{2, 3};
  const CellSet before = cells(s, {{1, 1}});
  const CellSet after = cells(s, {{1, 1}, {2, 2}});
  CHECK(render_ascii({{"", after, before, std::nullopt}}) == "#..\n.*.\n");
  CHECK(render_ascii({{"t", before, std::nullopt, Edge(s, Params{2, 2}, {{1, 2}, {1, 3}})}}) == "t\no.o\no.o\n");
}

TEST_CASE("ascii golden files") {
  CHECK(render_ascii(l_frames()) == golden("l_5x6.txt"));
  CHECK(render_ascii(edge_frames()) == golden("edge_2x5.txt"));
  CHECK(render_ascii(union_frames()) == golden("union_4x5.txt"));
  CHECK(render_ascii(cube_phases()) == golden("cube_phases.txt"));
}

TEST_CASE("svg golden files") {
  CHECK(render_svg(l_frames()) == golden("l_5x6.svg"));
  CHECK(render_svg(edge_frames()) == golden("edge_2x5.svg"));
  CHECK(render_svg(union_frames()) == golden("union_4x5.svg"));
}

TEST_CASE("renders are stable across calls") {
  CHECK(render_svg(cube_phases()) == render_svg(cube_phases()));
  CHECK(render_svg(l_frames()).find("format version 1") != std::string::npos);
}

TEST_CASE("renders reject four dimensions") {
  const std::vector<Frame> frames{{"", CellSet(GridShape{2, 2, 2, 2}), std::nullopt, std::nullopt}};
  CHECK_THROWS_AS((render_ascii(frames)), InvalidInput);
  CHECK_THROWS_AS((render_svg(frames)), InvalidInput);
}

TEST_CASE("step frames highlight each edge") {
  const GridShape s{2, 2};
  const StepTrace trace = step_by_step(cells(s, {{1, 1}, {1, 2}, {2, 1}}), Params{2, 2});
  const auto frames = step_frames(trace);
  REQUIRE(frames.size() == 3);
  CHECK(frames[1].highlight);
  CHECK(render_ascii(frames) == "start\n##\n#.\n\nstep 1 infects (2,2)\noo\noo\n\nterminal\n##\n#*\n");
}
