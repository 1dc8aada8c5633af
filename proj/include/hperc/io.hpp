#pragma once

// JSON encodings. Coordinates and axis numbers are 1-based on the wire.
//
//   instance: {"shape":[n1,...], "t":T, "r":R, "cells":[[c1,...], ...]}
//   edge:     {"axes":[1,2], "varying":{"1":[1,2],"2":[1,5]}, "fixed":{"3":1}}
//   phases:   {"shape":..., "t":..., "r":..., "phases":[[cell,...], ...]}
//   steps:    {"shape":..., "t":..., "r":..., "start":[cell,...],
//              "steps":[{"v":cell, "edge":edge}, ...]}

#include <string>
#include <string_view>

#include "json.hpp"

#include "hperc/constructions.hpp"
#include "hperc/engine.hpp"
#include "hperc/search.hpp"
#include "hperc/transforms.hpp"

namespace hperc {

using Json = nlohmann::ordered_json;

struct Instance {
  CellSet cells;
  Params params;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Json to_json(const Vertex& v);
Json cells_to_json(const CellSet& a);
Json to_json(const Edge& e);
Json to_json(const Instance& instance);
Json to_json(const PhaseTrace& trace, const Params& params);
Json to_json(const StepTrace& trace, const Params& params);
Json to_json(const MFormulaTerms& terms, const GridShape& shape, const Params& params);
Json to_json(const SearchReport& report);
Json to_json(const ShiftRecord& record);
Json to_json(const NormalForm& normal, const Params& params);
Json to_json(const PRowDecomposition& decomposition);
Json to_json(const ReachResult& result);

// All parsers throw InvalidInput with a diagnostic on malformed input.
GridShape shape_from_json(const Json& j);
Params params_from_json(const Json& j, const GridShape& shape);
CellSet cells_from_json(const Json& j, const GridShape& shape);
Vertex vertex_from_json(const Json& j, const GridShape& shape);
Edge edge_from_json(const Json& j, const GridShape& shape, const Params& params);
Instance instance_from_json(const Json& j);
Instance parse_instance(std::string_view text);
PhaseTrace phase_trace_from_json(const Json& j, const GridShape& shape);
StepTrace step_trace_from_json(const Json& j, const GridShape& shape, const Params& params);

Json parse_json(std::string_view text);

inline constexpr std::string_view kSearchCsvHeader = "shape,t,r,target,minimum,examined,duration_ms,exact";
std::string search_csv_row(const SearchReport& report);

}  // namespace hperc
