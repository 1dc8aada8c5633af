#pragma once

// Percolation by phases and step-by-step percolation on a hyperrectangle
// graph.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hperc/lattice.hpp"

namespace hperc {

// A0 = phases.front() ⊂ A1 ⊂ ... ⊂ Af = phases.back(), with phase_step(Af) = Af.
struct PhaseTrace {
  std::vector<CellSet> phases;

  int terminal_phase() const { return static_cast<int>(phases.size()) - 1; }
};

struct Step {
  Vertex infected;
  Edge edge;
};

struct StepTrace {
  CellSet start;
  std::vector<Step> steps;

  CellSet terminal() const;
};

struct Selection {
  enum class Kind { lexicographic, seeded_random };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;

  static Selection lexicographic() { return {}; }
  static Selection random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

// False when fewer than r axes are long enough to hold a side of length t;
// such a hypergraph has no edges at all.
bool has_edges(const GridShape& shape, const Params& params);

// Calls `visit` for every edge E with E \ a = {v}, in edge order, until it
// returns false. Throws PreconditionViolation if v is already in a.
void for_each_infecting_edge(const CellSet& a, const Vertex& v, const Params& params,
                             const std::function<bool(const Edge&)>& visit);

std::vector<Edge> infecting_edges(const CellSet& a, const Vertex& v, const Params& params);

// The least infecting edge of v in a (axes ascending, then sides ascending).
std::optional<Edge> infecting_edge(const CellSet& a, const Vertex& v, const Params& params);

bool is_infectable(const CellSet& a, std::size_t index, const Params& params);

// a together with every vertex that has an infecting edge in a.
CellSet phase_step(const CellSet& a, const Params& params);

struct FullForm {
  CellSet closure;
  PhaseTrace trace;
};

FullForm full_form(const CellSet& a, const Params& params);

// full_form(a).closure without recording the phases.
CellSet closure(const CellSet& a, const Params& params);

bool percolates(const CellSet& a, const Params& params);

bool one_phase(const CellSet& a, const Params& params);

StepTrace step_by_step(const CellSet& a, const Params& params, Selection selection = Selection::lexicographic());

}  // namespace hperc
