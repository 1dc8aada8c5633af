// hperc: command-line front end for the bootstrap percolation library.
//
// Exit codes: 0 pass, 1 failure, 2 invalid input, 3 budget exceeded or
// inconclusive.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hperc/constructions.hpp"
#include "hperc/engine.hpp"
#include "hperc/io.hpp"
#include "hperc/render.hpp"
#include "hperc/search.hpp"
#include "hperc/transforms.hpp"
#include "hperc/verify.hpp"

namespace {

using namespace hperc;

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kBudget = 3 };

struct Globals {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultBudget;
  bool json = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) {
  return j.dump(2) + "\n";
}

struct ShapeArgs {
  std::vector<int> shape;
  int t = 2;
  int r = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape, "extents, e.g. 5,6")->required()->delimiter(',');
    cmd->add_option("--t", t, "edge side length")->capture_default_str();
    cmd->add_option("--r", r, "number of long axes per edge")->capture_default_str();
  }

  std::pair<GridShape, Params> build() const {
    GridShape s(shape);
    Params p{t, r};
    p.validate(s);
    return {s, p};
  }
};

Vertex parse_vertex(const std::string& text, const GridShape& shape) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      coords.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InvalidInput("bad coordinate \"" + part + "\"");
    }
  }
  Vertex v(std::move(coords));
  if (!shape.contains(v)) throw InvalidInput("vertex " + to_string(v) + " is outside " + to_string(shape));
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Bootstrap percolation on hyperrectangle graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "input file, - for stdin");
  app.add_option("--output", g.output, "output file, - for stdout");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget, "predicate evaluations allowed per search");
  app.add_flag("--json", g.json, "machine-readable output where text is the default");

  int code = kPass;
  auto instance = [&] { return parse_instance(read_text(g.input)); };

  // percolate
  auto* percolate_cmd = app.add_subcommand("percolate", "run percolation by phases (or step by step) and emit the trace");
  bool steps = false;
  std::string render_format;
  std::string render_output = "-";
  percolate_cmd->add_flag("--steps", steps, "step-by-step percolation; random order when --seed is given");
  percolate_cmd->add_option("--render", render_format, "also render the trace")->check(CLI::IsMember({"ascii", "svg"}));
  percolate_cmd->add_option("--render-output", render_output, "render destination, - for stdout");
  percolate_cmd->callback([&] {
    const Instance in = instance();
    std::vector<Frame> frames;
    std::string text;
    if (steps) {
      const Selection sel = app.count("--seed") ? Selection::random(g.seed) : Selection::lexicographic();
      const StepTrace trace = step_by_step(in.cells, in.params, sel);
      text = dump(to_json(trace, in.params));
      frames = step_frames(trace);
      code = trace.terminal().is_full() ? kPass : kFail;
    } else {
      const FullForm ff = full_form(in.cells, in.params);
      text = dump(to_json(ff.trace, in.params));
      frames = phase_frames(ff.trace);
      code = ff.closure.is_full() ? kPass : kFail;
    }
    if (render_format.empty() || g.output != "-" || render_output != "-") write_text(g.output, text);
    if (!render_format.empty()) write_text(render_output, render_format == "svg" ? render_svg(frames) : render_ascii(frames));
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "report whether an instance percolates (exit 0) or not (exit 1)");
  bool check_one_phase = false;
  check_cmd->add_flag("--one-phase", check_one_phase, "require percolation in one phase");
  check_cmd->callback([&] {
    const Instance in = instance();
    const FullForm ff = full_form(in.cells, in.params);
    const bool perc = ff.closure.is_full();
    const bool one = perc && ff.trace.terminal_phase() <= 1;
    code = (check_one_phase ? one : perc) ? kPass : kFail;
    if (g.json) {
      write_text(g.output, dump({{"percolates", perc},
                                 {"one_phase", one},
                                 {"size", in.cells.size()},
                                 {"closure_size", ff.closure.size()},
                                 {"phases", ff.trace.terminal_phase()}}));
    } else {
      std::ostringstream os;
      os << "size " << in.cells.size() << ", closure " << ff.closure.size() << "/" << ff.closure.shape().cell_count() << " after "
         << ff.trace.terminal_phase() << " phases: " << (perc ? "percolates" : "does not percolate")
         << (one ? " in one phase" : "") << '\n';
      write_text(g.output, os.str());
    }
  });

  // lset
  auto* lset_cmd = app.add_subcommand("lset", "emit the L-set instance");
  ShapeArgs lset_args;
  lset_args.attach(lset_cmd);
  std::string lset_format = "json";
  lset_cmd->add_option("--format", lset_format)->check(CLI::IsMember({"json", "ascii"}))->capture_default_str();
  lset_cmd->callback([&] {
    const auto [shape, params] = lset_args.build();
    const CellSet l = l_set(shape, params);
    if (lset_format == "ascii") {
      write_text(g.output, render_ascii({{"", l, std::nullopt, std::nullopt}}));
    } else {
      write_text(g.output, dump(to_json(Instance{l, params})));
    }
  });

  // mvalue
  auto* mvalue_cmd = app.add_subcommand("mvalue", "emit the closed-form minimum with its per-s terms");
  ShapeArgs mvalue_args;
  mvalue_args.attach(mvalue_cmd);
  mvalue_cmd->callback([&] {
    const auto [shape, params] = mvalue_args.build();
    write_text(g.output, dump(to_json(m_formula(shape, params), shape, params)));
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "exhaustive minimum search");
  ShapeArgs search_args;
  search_args.attach(search_cmd);
  std::string target = "percolate";
  std::string mode = "exact";
  int threads = 1;
  std::string csv;
  search_cmd->add_option("--target", target)->check(CLI::IsMember({"percolate", "one-phase"}))->capture_default_str();
  search_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "dedup"}))->capture_default_str();
  search_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber)->capture_default_str();
  search_cmd->add_option("--csv", csv, "append a CSV row (header written to new files)");
  search_cmd->callback([&] {
    const auto [shape, params] = search_args.build();
    SearchOptions opts{mode == "dedup" ? SearchMode::dedup : SearchMode::exact, g.budget, threads};
    const SearchReport report = min_size(shape, params, target == "one-phase" ? Target::one_phase : Target::percolate, opts);
    write_text(g.output, dump(to_json(report)));
    if (!csv.empty()) {
      const bool fresh = !std::ifstream(csv).good();
      std::ofstream out(csv, std::ios::app);
      if (!out) throw InvalidInput("cannot write " + csv);
      if (fresh) out << kSearchCsvHeader << '\n';
      out << search_csv_row(report) << '\n';
    }
    code = report.exhaustive ? kPass : kBudget;
  });

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "apply maximal shifts until every edge is in standard position");
  bool random_order = false;
  normalize_cmd->add_flag("--random", random_order, "pick shifts in seeded random order");
  normalize_cmd->callback([&] {
    const Instance in = instance();
    const NormalForm nf = normalize_max_shifts(in.cells, in.params, random_order ? std::optional(g.seed) : std::nullopt);
    write_text(g.output, dump(to_json(nf, in.params)));
  });

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "P-row classes of a planar set stable under maximal shifts");
  decompose_cmd->callback([&] {
    const Instance in = instance();
    try {
      Json j = to_json(p_row_decomposition(in.cells));
      j["stable_full_form"] = cells_to_json(stable_full_form(in.cells));
      write_text(g.output, dump(j));
    } catch (const RowPairViolation& e) {
      std::cerr << "hperc: " << e.what() << '\n';
      code = kFail;
    }
  });

  // reach
  auto* reach_cmd = app.add_subcommand("reach", "search shift sequences for one reaching a goal");
  std::string goal = "contains-l";
  ReachOptions reach;
  reach_cmd->add_option("--goal", goal)->check(CLI::IsMember({"contains-l", "one-phase"}))->capture_default_str();
  reach_cmd->add_option("--max-ops", reach.max_ops)->capture_default_str();
  reach_cmd->add_option("--max-states", reach.max_states)->capture_default_str();
  reach_cmd->add_flag("--maximal-only", reach.maximal_only, "use maximal shifts only");
  reach_cmd->callback([&] {
    const Instance in = instance();
    reach.goal = goal == "one-phase" ? ReachGoal::one_phase : ReachGoal::contains_l;
    const ReachResult result = shift_reach(in.cells, in.params, reach);
    write_text(g.output, dump(to_json(result)));
    code = result.status == ReachStatus::found ? kPass : result.status == ReachStatus::exhausted ? kFail : kBudget;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem-verification suite");
  std::string suite = "all";
  verify::SuiteOptions vopts;
  std::vector<std::string> suite_choices = verify::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_choices))->capture_default_str();
  verify_cmd->add_option("--cap", vopts.cap, "largest extent for minimum searches")->capture_default_str();
  verify_cmd->add_option("--max-cells", vopts.max_cells, "largest grid for minimum searches")->capture_default_str();
  verify_cmd->add_option("--samples", vopts.samples, "random instances per battery")->capture_default_str();
  verify_cmd->add_option("--threads", vopts.threads)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->callback([&] {
    vopts.seed = g.seed;
    vopts.budget = g.budget;
    std::vector<verify::VerificationReport> reports;
    if (suite == "all") {
      for (const auto& name : verify::suite_names()) reports.push_back(verify::run_suite(name, vopts));
    } else {
      reports.push_back(verify::run_suite(suite, vopts));
    }
    std::string text;
    if (g.json) {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(verify::to_json(r));
      text = dump(reports.size() == 1 ? all[0] : all);
    } else {
      for (const auto& r : reports) text += verify::to_text(r);
    }
    write_text(g.output, text);
    bool failed = false;
    bool skipped = false;
    for (const auto& r : reports) {
      failed = failed || !r.passed();
      skipped = skipped || !r.complete();
    }
    code = failed ? kFail : skipped ? kBudget : kPass;
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "draw an instance or a trace");
  std::string format = "ascii";
  std::string edge_for;
  std::vector<int> union_spec;
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render_cmd->add_option("--edge-for", edge_for, "highlight the least infecting edge of this vertex, e.g. 2,3");
  render_cmd->add_option("--union", union_spec, "axis,m1,m2: draw the set before and after merging two slices")
      ->delimiter(',')
      ->expected(3);
  render_cmd->callback([&] {
    const Json j = parse_json(read_text(g.input));
    const GridShape shape = shape_from_json(j.at("shape"));
    const Params params = params_from_json(j, shape);
    std::vector<Frame> frames;
    if (j.contains("phases")) {
      frames = phase_frames(phase_trace_from_json(j, shape));
    } else if (j.contains("steps")) {
      frames = step_frames(step_trace_from_json(j, shape, params));
    } else {
      const CellSet cells = cells_from_json(j.at("cells"), shape);
      Frame f{"", cells, std::nullopt, std::nullopt};
      if (!edge_for.empty()) {
        const Vertex v = parse_vertex(edge_for, shape);
        if (cells.contains(v)) throw InvalidInput("vertex " + to_string(v) + " is already infected");
        f.highlight = infecting_edge(cells, v, params);
        if (!f.highlight) throw InvalidInput("vertex " + to_string(v) + " has no infecting edge");
        f.title = "edge infecting " + to_string(v);
      }
      frames.push_back(f);
      if (!union_spec.empty()) {
        frames.front().title = "before";
        frames.push_back({"after", union_slices(cells, union_spec[0] - 1, union_spec[1], union_spec[2]), std::nullopt, std::nullopt});
      }
    }
    write_text(g.output, format == "svg" ? render_svg(frames) : render_ascii(frames));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hperc::InvalidInput& e) {
    std::cerr << "hperc: invalid input: " << e.what() << '\n';
  } catch (const hperc::PreconditionViolation& e) {
    std::cerr << "hperc: precondition violated: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "hperc: invalid input: " << e.what() << '\n';
  }
  return kInvalid;
}
