#include "hperc/io.hpp"

#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace hperc {

namespace {

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  const auto value = j.get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw InvalidInput(what + " is out of range");
  }
  return static_cast<int>(value);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return *it;
}

int axis_key(const std::string& key, const GridShape& shape) {
  int axis = 0;
  try {
    std::size_t used = 0;
    axis = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw InvalidInput("edge axis key \"" + key + "\" is not a number");
  }
  if (axis < 1 || axis > shape.dimension()) throw InvalidInput("edge axis " + key + " is out of range");
  return axis - 1;
}

Json header(const GridShape& shape, const Params& params) {
  Json j;
  j["shape"] = shape.dims();
  j["t"] = params.t;
  j["r"] = params.r;
  return j;
}

}  // namespace

Json to_json(const Vertex& v) {
  return Json(v.coords());
}

Json cells_to_json(const CellSet& a) {
  Json out = Json::array();
  for (const auto& v : a.members()) out.push_back(to_json(v));
  return out;
}

Json to_json(const Edge& e) {
  Json j;
  Json axes = Json::array();
  Json varying = Json::object();
  Json fixed = Json::object();
  for (int k = 0; k < e.dimension(); ++k) {
    const auto key = std::to_string(k + 1);
    if (e.side(k).size() > 1) {
      axes.push_back(k + 1);
      varying[key] = e.side(k);
    } else {
      fixed[key] = e.side(k).front();
    }
  }
  j["axes"] = std::move(axes);
  j["varying"] = std::move(varying);
  j["fixed"] = std::move(fixed);
  return j;
}

Json to_json(const Instance& instance) {
  Json j = header(instance.cells.shape(), instance.params);
  j["cells"] = cells_to_json(instance.cells);
  return j;
}

Json to_json(const PhaseTrace& trace, const Params& params) {
  Json j = header(trace.phases.front().shape(), params);
  j["f"] = trace.terminal_phase();
  Json phases = Json::array();
  for (const auto& p : trace.phases) phases.push_back(cells_to_json(p));
  j["phases"] = std::move(phases);
  return j;
}

Json to_json(const StepTrace& trace, const Params& params) {
  Json j = header(trace.start.shape(), params);
  j["start"] = cells_to_json(trace.start);
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back({{"v", to_json(s.infected)}, {"edge", to_json(s.edge)}});
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const MFormulaTerms& terms, const GridShape& shape, const Params& params) {
  Json j = header(shape, params);
  Json list = Json::array();
  for (std::size_t s = 0; s < terms.terms.size(); ++s) list.push_back({{"s", s}, {"value", terms.terms[s]}});
  j["terms"] = std::move(list);
  j["total"] = terms.total;
  j["negative_factor"] = terms.has_negative_factor;
  return j;
}

Json to_json(const SearchReport& report) {
  Json j = header(report.shape, report.params);
  j["target"] = to_string(report.target);
  j["mode"] = to_string(report.mode);
  j["minimum"] = report.minimum ? Json(*report.minimum) : Json();
  j["witness"] = report.witness ? cells_to_json(*report.witness) : Json();
  j["lower_bound"] = report.lower_bound;
  j["examined_per_size"] = report.examined_per_size;
  j["examined"] = report.examined();
  j["checks"] = report.checks;
  j["duplicates_skipped"] = report.duplicates_skipped;
  j["duration_ms"] = report.duration_ms;
  j["exhaustive"] = report.exhaustive;
  return j;
}

Json to_json(const ShiftRecord& record) {
  return {{"edge", to_json(record.edge)},
          {"infected", to_json(record.infected)},
          {"removed", to_json(record.removed)},
          {"maximal", record.maximal}};
}

Json to_json(const NormalForm& normal, const Params& params) {
  Json j = header(normal.set.shape(), params);
  Json shifts = Json::array();
  for (const auto& s : normal.shifts) shifts.push_back(to_json(s));
  j["shifts"] = std::move(shifts);
  j["cells"] = cells_to_json(normal.set);
  return j;
}

Json to_json(const PRowDecomposition& decomposition) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < decomposition.classes.size(); ++i) {
    classes.push_back({{"rows", decomposition.classes[i]}, {"representative", decomposition.representatives[i]}});
  }
  return {{"s", decomposition.classes.size()}, {"classes", std::move(classes)}};
}

Json to_json(const ReachResult& result) {
  Json path = Json::array();
  for (const auto& s : result.path) path.push_back(to_json(s));
  return {{"status", to_string(result.status)}, {"states_visited", result.states_visited}, {"shifts", std::move(path)}};
}

// Parsing

GridShape shape_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("\"shape\" must be a non-empty array");
  std::vector<int> dims;
  for (const auto& n : j) dims.push_back(as_int(n, "shape extent"));
  return GridShape(std::move(dims));
}

Params params_from_json(const Json& j, const GridShape& shape) {
  Params p{as_int(field(j, "t"), "\"t\""), as_int(field(j, "r"), "\"r\"")};
  p.validate(shape);
  return p;
}

Vertex vertex_from_json(const Json& j, const GridShape& shape) {
  if (!j.is_array()) throw InvalidInput("a cell must be an array of coordinates");
  std::vector<int> coords;
  for (const auto& c : j) coords.push_back(as_int(c, "coordinate"));
  Vertex v(std::move(coords));
  if (!shape.contains(v)) throw InvalidInput("cell " + to_string(v) + " is outside shape " + to_string(shape));
  return v;
}

CellSet cells_from_json(const Json& j, const GridShape& shape) {
  if (!j.is_array()) throw InvalidInput("\"cells\" must be an array");
  CellSet out(shape);
  for (const auto& c : j) {
    const Vertex v = vertex_from_json(c, shape);
    if (out.contains(v)) throw InvalidInput("duplicate cell " + to_string(v));
    out.insert(v);
  }
  return out;
}

Edge edge_from_json(const Json& j, const GridShape& shape, const Params& params) {
  std::vector<std::vector<int>> sides(static_cast<std::size_t>(shape.dimension()));
  const auto& varying = field(j, "varying");
  const auto& fixed = field(j, "fixed");
  if (!varying.is_object() || !fixed.is_object()) throw InvalidInput("edge \"varying\" and \"fixed\" must be objects");
  for (const auto& [key, values] : varying.items()) {
    auto& side = sides[static_cast<std::size_t>(axis_key(key, shape))];
    if (!values.is_array()) throw InvalidInput("edge varying side must be an array");
    for (const auto& x : values) side.push_back(as_int(x, "edge side value"));
  }
  for (const auto& [key, value] : fixed.items()) {
    auto& side = sides[static_cast<std::size_t>(axis_key(key, shape))];
    if (!side.empty()) throw InvalidInput("edge axis " + key + " is both fixed and varying");
    side.push_back(as_int(value, "edge fixed value"));
  }
  for (const auto& side : sides) {
    if (side.empty()) throw InvalidInput("edge leaves an axis unspecified");
  }
  Edge e(shape, params, std::move(sides));
  if (auto it = j.find("axes"); it != j.end()) {
    std::vector<int> axes;
    for (int k : e.axes()) axes.push_back(k + 1);
    if (*it != Json(axes)) throw InvalidInput("edge \"axes\" disagrees with its varying sides");
  }
  return e;
}

Instance instance_from_json(const Json& j) {
  const GridShape shape = shape_from_json(field(j, "shape"));
  const Params params = params_from_json(j, shape);
  return {cells_from_json(field(j, "cells"), shape), params};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Instance parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

PhaseTrace phase_trace_from_json(const Json& j, const GridShape& shape) {
  const auto& phases = field(j, "phases");
  if (!phases.is_array() || phases.empty()) throw InvalidInput("\"phases\" must be a non-empty array");
  PhaseTrace trace;
  for (const auto& p : phases) {
    CellSet next = cells_from_json(p, shape);
    if (!trace.phases.empty() && !trace.phases.back().is_subset_of(next)) {
      throw InvalidInput("phases must be increasing");
    }
    trace.phases.push_back(std::move(next));
  }
  return trace;
}

StepTrace step_trace_from_json(const Json& j, const GridShape& shape, const Params& params) {
  StepTrace trace{cells_from_json(field(j, "start"), shape), {}};
  const auto& steps = field(j, "steps");
  if (!steps.is_array()) throw InvalidInput("\"steps\" must be an array");
  for (const auto& s : steps) {
    trace.steps.push_back({vertex_from_json(field(s, "v"), shape), edge_from_json(field(s, "edge"), shape, params)});
  }
  return trace;
}

std::string search_csv_row(const SearchReport& report) {
  std::ostringstream os;
  os << to_string(report.shape) << ',' << report.params.t << ',' << report.params.r << ',' << to_string(report.target) << ','
     << (report.minimum ? std::to_string(*report.minimum) : std::string()) << ',' << report.examined() << ','
     << std::fixed << std::setprecision(3) << report.duration_ms << ',' << (report.exhaustive ? "true" : "false");
  return os.str();
}

}  // namespace hperc
