#include "hperc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "hperc/constructions.hpp"
#include "hperc/engine.hpp"
#include "hperc/transforms.hpp"

namespace hperc::verify {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      break;
  }
  return "skipped";
}

int VerificationReport::count(Outcome outcome) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const ClaimRow& r) { return r.outcome == outcome; }));
}

void VerificationReport::append(const VerificationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

Json to_json(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"claim", r.claim},
                    {"instance", r.instance},
                    {"expected", r.expected},
                    {"observed", r.observed},
                    {"outcome", to_string(r.outcome)}});
  }
  return {{"suite", report.suite},
          {"statement", report.statement},
          {"rows", std::move(rows)},
          {"summary",
           {{"pass", report.count(Outcome::pass)},
            {"fail", report.count(Outcome::fail)},
            {"skipped", report.count(Outcome::skipped)},
            {"ok", report.passed()}}}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << ": " << report.statement << '\n';
  for (const auto& r : report.rows) {
    os << "  [" << to_string(r.outcome) << "] " << r.claim << " on " << r.instance << ": expected " << r.expected
       << ", observed " << r.observed << '\n';
  }
  os << "  " << report.count(Outcome::pass) << " passed, " << report.count(Outcome::fail) << " failed, "
     << report.count(Outcome::skipped) << " skipped\n";
  return os.str();
}

namespace {

std::string describe(const CellSet& a) {
  return cells_to_json(a).dump();
}

std::string describe(const GridShape& shape, const Params& params) {
  return to_string(shape) + " t=" + std::to_string(params.t) + " r=" + std::to_string(params.r);
}

class Tally {
 public:
  Tally(std::string claim, std::string instance) : claim_(std::move(claim)), instance_(std::move(instance)) {}

  template <typename Describe>
  void check(bool ok, Describe&& what) {
    ++trials_;
    if (!ok && violations_++ == 0) first_ = what();
  }

  int trials() const { return trials_; }
  int violations() const { return violations_; }

  ClaimRow row() const {
    ClaimRow out{claim_, instance_, "0 violations", "", Outcome::pass};
    std::ostringstream os;
    os << violations_ << " violations in " << trials_ << " trials";
    if (violations_ > 0) {
      os << "; first: " << first_;
      out.outcome = Outcome::fail;
    } else if (trials_ == 0) {
      os << " (no qualifying instances)";
      out.outcome = Outcome::skipped;
    }
    out.observed = os.str();
    return out;
  }

 private:
  std::string claim_;
  std::string instance_;
  int trials_ = 0;
  int violations_ = 0;
  std::string first_;
};

// Sub-seeds for sampled instances.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next() { return rng_(); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

long coordinate_sum(const CellSet& a) {
  long sum = 0;
  for (const auto& v : a.members()) sum += v.coordinate_sum();
  return sum;
}

bool line_full(const CellSet& a, int axis, int m) {
  return slice(a, axis, m).size() == a.shape().cell_count() / static_cast<std::size_t>(a.shape().extent(axis));
}

CellSet random_dense_percolating(const GridShape& shape, const Params& params, SeedStream& seeds) {
  while (true) {
    CellSet a = random_subset(shape, seeds.next(), seeds.uniform(0.3, 0.8));
    if (percolates(a, params)) return a;
  }
}

}  // namespace

void check_minimum(VerificationReport& report, const std::string& claim, const GridShape& shape, const Params& params,
                   Target target, std::int64_t expected, const SearchOptions& options) {
  const SearchReport result = min_size(shape, params, target, options);
  ClaimRow row{claim, describe(shape, params) + " target=" + to_string(target), std::to_string(expected), "", Outcome::pass};
  if (!result.exhaustive) {
    row.observed = "budget exhausted after " + std::to_string(result.checks) + " checks (all sizes below " +
                   std::to_string(result.lower_bound) + " rejected)";
    row.outcome = Outcome::skipped;
  } else {
    row.observed = std::to_string(*result.minimum) + " (witness " + describe(*result.witness) + ", " +
                   std::to_string(result.examined()) + " sets examined, " + std::to_string(static_cast<long>(result.duration_ms)) +
                   " ms)";
    const bool witness_ok = target == Target::percolate ? percolates(*result.witness, params) : one_phase(*result.witness, params);
    row.outcome = *result.minimum == expected && witness_ok ? Outcome::pass : Outcome::fail;
  }
  report.add(std::move(row));
}

void check_dedup_agrees(VerificationReport& report, const GridShape& shape, const Params& params, Target target,
                        const SearchOptions& options) {
  SearchOptions exact = options;
  exact.mode = SearchMode::exact;
  SearchOptions dedup = options;
  dedup.mode = SearchMode::dedup;
  const auto a = min_size(shape, params, target, exact);
  const auto b = min_size(shape, params, target, dedup);
  ClaimRow row{"dedup_matches_exact", describe(shape, params) + " target=" + to_string(target), "", "", Outcome::pass};
  if (!a.exhaustive || !b.exhaustive) {
    row.expected = "both searches complete";
    row.observed = "budget exhausted";
    row.outcome = Outcome::skipped;
  } else {
    row.expected = std::to_string(*a.minimum);
    row.observed = std::to_string(*b.minimum) + " (" + std::to_string(b.duplicates_skipped) + " duplicates skipped)";
    row.outcome = *a.minimum == *b.minimum && *a.witness == *b.witness ? Outcome::pass : Outcome::fail;
  }
  report.add(std::move(row));
}

void check_slice_union(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed) {
  const Params params{2, 2};
  SeedStream seeds(seed);
  Tally percolates_after("union_of_slices_percolates", describe(shape, params));
  Tally size_drop("union_size_is_size_minus_overlap", describe(shape, params));
  for (int s = 0; s < samples; ++s) {
    const CellSet a = random_percolating_set(shape, params, seeds.next());
    for (int k = 0; k < shape.dimension(); ++k) {
      for (int m1 = 1; m1 <= shape.extent(k); ++m1) {
        for (int m2 = m1 + 1; m2 <= shape.extent(k); ++m2) {
          const CellSet merged = union_slices(a, k, m1, m2);
          const auto overlap = (p_slice(a, k, m1).size() + p_slice(a, k, m2).size()) -
                               p_slice(a, k, m1).united(p_slice(a, k, m2)).size();
          auto what = [&] {
            return describe(a) + " axis " + std::to_string(k + 1) + " slices " + std::to_string(m1) + "," + std::to_string(m2);
          };
          percolates_after.check(percolates(merged, params), what);
          size_drop.check(merged.size() == a.size() - overlap, what);
        }
      }
    }
  }
  report.add(percolates_after.row());
  report.add(size_drop.row());
}

void check_line_removal(VerificationReport& report, const GridShape& shape, int t, int samples, std::uint64_t seed) {
  const Params params{t, 2};
  SeedStream seeds(seed);
  Tally removal("removing_a_(t-1)-cell_row_or_column_keeps_percolation", describe(shape, params));
  int qualifying = 0;
  const int attempts = 100 * samples;
  for (int attempt = 0; attempt < attempts && qualifying < samples; ++attempt) {
    const CellSet a = random_percolating_set(shape, params, seeds.next());
    bool has_line = false;
    for (int k = 0; k < 2; ++k) {
      if (shape.extent(k) < 2) continue;
      for (int m = 1; m <= shape.extent(k); ++m) {
        if (slice(a, k, m).size() != static_cast<std::size_t>(t - 1)) continue;
        has_line = has_line || k == 0;
        removal.check(percolates(remove_slice(a, k, m), params), [&] {
          return describe(a) + " removing " + (k == 0 ? "row " : "column ") + std::to_string(m);
        });
      }
    }
    qualifying += has_line;
  }
  report.add(removal.row());
  report.add({"qualifying_sets_sampled", describe(shape, params), std::to_string(samples), std::to_string(qualifying),
              qualifying >= samples ? Outcome::pass : Outcome::fail});
}

void check_repacking(VerificationReport& report, const GridShape& shape, int t, int samples, std::uint64_t seed) {
  const Params params{t, 2};
  const std::string inst = describe(shape, params);
  SeedStream seeds(seed);
  const int n1 = shape.extent(0);
  const int n2 = shape.extent(1);
  const long bound = static_cast<long>(n1 + n2) * (t - 1) - static_cast<long>(t - 1) * (t - 1);
  Tally size_bound("one_phase_size_at_least_bound", inst);
  Tally first_column("one_phase_first_column_has_t-1_cells", inst);
  Tally corner("blocked_vertex_placed_at_(t,t)", inst);
  Tally req1("repacked_requirement_I_same_size", inst);
  Tally req2("repacked_requirement_II_first_column_t-1_cells", inst);
  Tally req3("repacked_requirement_III_rest_one_phase", inst);
  int second_case = 0;
  const int attempts = 200 * samples;
  for (int attempt = 0; attempt < attempts && second_case < samples; ++attempt) {
    CellSet a = attempt % 2 == 0 ? random_one_phase_set(shape, params, seeds.next())
                                 : random_subset(shape, seeds.next(), seeds.uniform(0.5, 0.95));
    if (!one_phase(a, params)) continue;
    size_bound.check(static_cast<long>(a.size()) >= bound, [&] { return describe(a); });
    first_column.check(slice(a, 1, 1).size() >= static_cast<std::size_t>(t - 1), [&] { return describe(a); });
    const auto placement = place_blocked_edge_in_corner(a, params);
    if (!placement) continue;
    ++second_case;
    const CellSet& b = placement->relabeled;
    corner.check(!b.contains(placement->blocked) && infecting_edge(b, placement->blocked, params).has_value() &&
                     edge_vertices(placement->edge).size() == static_cast<std::size_t>(t * t),
                 [&] { return describe(a); });
    const CellSet repacked = repack_first_column(b, params);
    auto what = [&] { return describe(b) + " -> " + describe(repacked); };
    req1.check(repacked.size() == a.size(), what);
    req2.check(slice(repacked, 1, 1).size() >= static_cast<std::size_t>(t - 1), what);
    req3.check(one_phase(remove_slice(repacked, 1, 1), params), what);
  }
  for (const auto* tally : {&size_bound, &first_column, &corner, &req1, &req2, &req3}) report.add(tally->row());
  report.add({"second_case_sets_sampled", inst, std::to_string(samples), std::to_string(second_case),
              second_case >= samples ? Outcome::pass : Outcome::fail});
}

void check_closure_laws(VerificationReport& report, const GridShape& shape, const Params& params, int samples,
                        int step_seeds, std::uint64_t seed) {
  const std::string inst = describe(shape, params);
  SeedStream seeds(seed);
  Tally extensive("extensivity", inst);
  Tally idempotent("idempotence", inst);
  Tally monotone("monotonicity", inst);
  Tally phases("phase_trace_matches_plain_iteration", inst);
  Tally bound("phase_count_at_most_uninfected", inst);
  Tally one("one_phase_implies_percolation", inst);
  Tally order("step_by_step_terminal_equals_full_form", inst);
  Tally witnesses("step_edges_infect_their_vertex", inst);
  for (int s = 0; s < samples; ++s) {
    const CellSet a = random_subset(shape, seeds.next(), seeds.uniform(0.05, 0.7));
    const auto what = [&] { return describe(a); };
    const FullForm ff = full_form(a, params);
    extensive.check(a.is_subset_of(ff.closure), what);
    idempotent.check(closure(ff.closure, params) == ff.closure, what);
    const CellSet b = a.united(random_subset(shape, seeds.next(), seeds.uniform(0.05, 0.4)));
    monotone.check(ff.closure.is_subset_of(closure(b, params)), what);

    std::vector<CellSet> plain{a};
    while (true) {
      CellSet next = phase_step(plain.back(), params);
      if (next == plain.back()) break;
      plain.push_back(std::move(next));
    }
    phases.check(plain == ff.trace.phases, what);
    bound.check(static_cast<std::size_t>(ff.trace.terminal_phase()) <= shape.cell_count() - a.size(), what);
    one.check(!one_phase(a, params) || ff.closure.is_full(), what);

    for (int k = 0; k <= step_seeds; ++k) {
      const Selection sel = k == 0 ? Selection::lexicographic() : Selection::random(seeds.next());
      const StepTrace trace = step_by_step(a, params, sel);
      order.check(trace.terminal() == ff.closure, what);
      CellSet current = a;
      bool valid = true;
      for (const auto& step : trace.steps) {
        for (const auto& u : edge_vertices(step.edge)) valid = valid && (u == step.infected ? !current.contains(u) : current.contains(u));
        current.insert(step.infected);
      }
      witnesses.check(valid, what);
    }
  }
  for (const auto* tally : {&extensive, &idempotent, &monotone, &phases, &bound, &one, &order, &witnesses}) {
    report.add(tally->row());
  }
}

void check_shift_invariance(VerificationReport& report, const GridShape& shape, const Params& params, int samples,
                            std::uint64_t seed) {
  const std::string inst = describe(shape, params);
  SeedStream seeds(seed);
  Tally invariant("full_form_invariant_under_shift", inst);
  Tally size("shift_preserves_size", inst);
  Tally standard("standard_position_iff_no_maximal_shift", inst);
  for (int s = 0; s < samples; ++s) {
    const CellSet a = random_subset(shape, seeds.next(), seeds.uniform(0.2, 0.8));
    const CellSet full = closure(a, params);
    for (std::size_t i = 0; i < shape.cell_count(); ++i) {
      if (!is_infectable(a, i, params)) continue;
      const Vertex v = shape.vertex_at(i);
      for (const Edge& e : infecting_edges(a, v, params)) {
        standard.check(is_standard_position(e, a) == (maximal_shift_target(e) == v), [&] { return describe(a) + " edge " + to_string(e); });
        for (const auto& w : edge_vertices(e)) {
          if (w == v) continue;
          const auto shifted = shift(a, e, w);
          auto what = [&] { return describe(a) + " edge " + to_string(e) + " w " + to_string(w); };
          invariant.check(closure(shifted.set, params) == full, what);
          size.check(shifted.set.size() == a.size(), what);
        }
      }
    }
  }
  for (const auto* tally : {&invariant, &size, &standard}) report.add(tally->row());
}

void check_normal_form(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed) {
  const Params params{2, 2};
  const std::string inst = describe(shape, params);
  SeedStream seeds(seed);
  const int n1 = shape.extent(0);
  const int n2 = shape.extent(1);
  const CellSet l = l_set(shape, params);
  Tally size("normal_form_preserves_size", inst);
  Tally stable("normal_form_has_no_maximal_shift", inst);
  Tally steps("shift_count_below_coordinate_sum", inst);
  Tally replay("shift_sequence_replays_with_constant_full_form", inst);
  Tally lines("normal_form_contains_first_row_and_column", inst);
  Tally contains_l("normal_form_contains_l_set", inst);
  Tally one_class("percolating_normal_form_has_one_class", inst);
  Tally stable_ff("stable_full_form_equals_full_form", inst);
  Tally seeded("seeded_normal_form_contains_first_row_and_column", inst);

  auto check_stable = [&](const CellSet& a, const NormalForm& nf) {
    auto what = [&] { return describe(a) + " -> " + describe(nf.set); };
    try {
      stable_ff.check(stable_full_form(nf.set) == closure(nf.set, params), what);
    } catch (const RowPairViolation& e) {
      stable_ff.check(false, [&] { return what() + ": " + e.what(); });
    }
  };

  for (int s = 0; s < samples; ++s) {
    const CellSet a = s % 2 == 0 ? random_percolating_set(shape, params, seeds.next()) : random_dense_percolating(shape, params, seeds);
    const NormalForm nf = normalize_max_shifts(a, params);
    auto what = [&] { return describe(a) + " -> " + describe(nf.set); };
    size.check(nf.set.size() == a.size(), what);
    stable.check(!has_maximal_shift(nf.set, params), what);
    steps.check(static_cast<long>(nf.shifts.size()) <= coordinate_sum(a), what);
    CellSet current = a;
    bool ok = true;
    for (const auto& rec : nf.shifts) {
      current = shift(current, rec.edge, rec.removed).set;
      ok = ok && rec.maximal && percolates(current, params);
    }
    replay.check(ok && current == nf.set, what);
    lines.check(line_full(nf.set, 0, 1) && line_full(nf.set, 1, 1), what);
    contains_l.check(l.is_subset_of(nf.set), what);
    try {
      const auto dec = p_row_decomposition(nf.set);
      std::vector<int> all(static_cast<std::size_t>(n2));
      std::iota(all.begin(), all.end(), 1);
      one_class.check(dec.classes.size() == 1 && dec.representatives[0] == all &&
                          dec.classes[0].size() == static_cast<std::size_t>(n1),
                      what);
    } catch (const RowPairViolation& e) {
      one_class.check(false, [&] { return what() + ": " + e.what(); });
    }
    check_stable(a, nf);

    const NormalForm alt = normalize_max_shifts(a, params, seeds.next());
    seeded.check(line_full(alt.set, 0, 1) && line_full(alt.set, 1, 1) && !has_maximal_shift(alt.set, params),
                 [&] { return describe(a) + " -> " + describe(alt.set); });

    // Non-percolating sets: the product formula still gives the closure.
    const CellSet b = random_subset(shape, seeds.next(), seeds.uniform(0.1, 0.5));
    check_stable(b, normalize_max_shifts(b, params));
  }
  for (const auto* tally : {&size, &stable, &steps, &replay, &lines, &contains_l, &one_class, &stable_ff, &seeded}) {
    report.add(tally->row());
  }
}

void check_block_structure(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed) {
  const Params params{2, 2};
  SeedStream seeds(seed);
  Tally blocks("full_form_is_union_of_disjoint_products", describe(shape, params));
  for (int s = 0; s < samples; ++s) {
    const CellSet a = random_subset(shape, seeds.next(), seeds.uniform(0.05, 0.5));
    const CellSet full = closure(a, params);
    const auto split = product_blocks(full);
    bool ok = split.has_value();
    if (ok) {
      CellSet rebuilt(shape);
      for (const auto& b : *split) {
        for (int i : b.rows)
          for (int j : b.cols) rebuilt.insert(Vertex{i, j});
      }
      ok = rebuilt == full;
    }
    blocks.check(ok, [&] { return describe(a) + " -> " + describe(full); });
  }
  report.add(blocks.row());
}

void check_formula_counts(VerificationReport& report, int max_d, int max_t, int max_n) {
  Tally agree("l_set_size_equals_formula", "d<=" + std::to_string(max_d) + " t<=" + std::to_string(max_t) +
                                               " t<=n_i<=" + std::to_string(max_n));
  for (int d = 1; d <= max_d; ++d) {
    for (int t = 2; t <= max_t; ++t) {
      if (t > max_n) continue;
      std::vector<int> dims(static_cast<std::size_t>(d), t);
      while (true) {
        const GridShape shape(dims);
        for (int r = 1; r <= d; ++r) {
          const Params params{t, r};
          const auto direct = l_set_cardinality(shape, params);
          const auto formula = m_formula(shape, params).total;
          agree.check(direct == formula && static_cast<std::int64_t>(l_set(shape, params).size()) == direct, [&] {
            return describe(shape, params) + ": counted " + std::to_string(direct) + ", formula " + std::to_string(formula);
          });
        }
        int k = d - 1;
        while (k >= 0 && dims[static_cast<std::size_t>(k)] == max_n) dims[static_cast<std::size_t>(k--)] = t;
        if (k < 0) break;
        ++dims[static_cast<std::size_t>(k)];
      }
    }
  }
  report.add(agree.row());
}

void check_l_set_percolates(VerificationReport& report, const GridShape& shape, const Params& params) {
  const CellSet l = l_set(shape, params);
  const std::string inst = describe(shape, params);
  report.add({"l_set_percolates", inst, "true", percolates(l, params) ? "true" : "false",
              percolates(l, params) ? Outcome::pass : Outcome::fail});
  const auto formula = m_formula(shape, params).total;
  report.add({"l_set_size_equals_formula", inst, std::to_string(formula), std::to_string(l.size()),
              static_cast<std::int64_t>(l.size()) == formula ? Outcome::pass : Outcome::fail});
  const bool planar_full_rank = shape.dimension() == 2 && params.r == 2 && shape.extent(0) >= params.t && shape.extent(1) >= params.t;
  if (planar_full_rank) {
    const bool ok = one_phase(l, params);
    report.add({"l_set_percolates_in_one_phase", inst, "true", ok ? "true" : "false", ok ? Outcome::pass : Outcome::fail});
  }
}

// Suites

namespace {

SearchOptions search_options(const SuiteOptions& o) {
  return {SearchMode::exact, o.budget, o.threads};
}

std::vector<GridShape> shapes_up_to(int d, int max_extent, int max_cells, int min_extent = 1) {
  std::vector<GridShape> out;
  std::vector<int> dims(static_cast<std::size_t>(d), min_extent);
  if (min_extent > max_extent) return out;
  while (true) {
    long cells = 1;
    for (int n : dims) cells *= n;
    if (cells <= max_cells && std::is_sorted(dims.begin(), dims.end())) out.emplace_back(dims);
    int k = d - 1;
    while (k >= 0 && dims[static_cast<std::size_t>(k)] == max_extent) dims[static_cast<std::size_t>(k--)] = min_extent;
    if (k < 0) break;
    ++dims[static_cast<std::size_t>(k)];
  }
  return out;
}

VerificationReport prop2_2(const SuiteOptions& o) {
  VerificationReport r{"prop2_2", "the least percolating set in [n1]x[n2] with t = r = 2 has n1 + n2 - 1 cells", {}};
  const Params p{2, 2};
  for (int n1 = 1; n1 <= o.cap; ++n1) {
    for (int n2 = 1; n2 <= o.cap; ++n2) {
      const GridShape shape{n1, n2};
      if (static_cast<int>(shape.cell_count()) > o.max_cells) continue;
      check_minimum(r, "minimum_percolating_size", shape, p, Target::percolate, n1 + n2 - 1, search_options(o));
    }
  }
  return r;
}

VerificationReport thm3_1(const SuiteOptions& o) {
  VerificationReport r{"thm3_1", "the least percolating set in [n1]x...x[nd] with t = r = 2 has sum(n_i) - (d - 1) cells", {}};
  const Params p{2, 2};
  for (int d : {3, 4}) {
    for (const auto& shape : shapes_up_to(d, o.cap, o.max_cells)) {
      check_minimum(r, "minimum_percolating_size", shape, p, Target::percolate, edgesum(shape) - (d - 1), search_options(o));
    }
  }
  return r;
}

VerificationReport thm2_7(const SuiteOptions& o) {
  VerificationReport r{"thm2_7",
                       "a planar set percolating in one phase (r = 2, n_i >= t) has at least (n1 + n2)(t - 1) - (t - 1)^2 cells", {}};
  for (int t : {2, 3}) {
    const Params p{t, 2};
    for (const auto& shape : shapes_up_to(2, std::max(o.cap, t), o.max_cells, t)) {
      const int n1 = shape.extent(0);
      const int n2 = shape.extent(1);
      check_minimum(r, "minimum_one_phase_size", shape, p, Target::one_phase, (n1 + n2) * (t - 1) - (t - 1) * (t - 1),
                    search_options(o));
    }
    check_repacking(r, GridShape{5, 5}, t, o.samples, o.seed);
  }
  return r;
}

VerificationReport lemma_union(const SuiteOptions& o) {
  VerificationReport r{"lemma_union", "merging two slices of a percolating set (t = r = 2) gives a percolating set", {}};
  check_slice_union(r, GridShape{o.cap, o.cap}, o.samples, o.seed);
  check_slice_union(r, GridShape{3, 3, 3}, o.samples, o.seed);
  return r;
}

VerificationReport prop_removal(const SuiteOptions& o) {
  VerificationReport r{"prop_removal",
                       "deleting a row or column holding exactly t - 1 cells of a percolating planar set (r = 2) keeps it percolating", {}};
  for (int t : {2, 3}) check_line_removal(r, GridShape{5, 5}, t, o.samples, o.seed);
  return r;
}

VerificationReport prop4_4(const SuiteOptions& o) {
  VerificationReport r{"prop4_4",
                       "maximal shifts take a planar percolating set (t = r = 2) to one containing its first row and column", {}};
  check_shift_invariance(r, GridShape{5, 5}, Params{2, 2}, o.samples, o.seed);
  check_shift_invariance(r, GridShape{5, 5}, Params{3, 2}, o.samples, o.seed);
  check_normal_form(r, GridShape{o.cap, o.cap + 1}, o.samples, o.seed);
  check_normal_form(r, GridShape{5, 5}, o.samples, o.seed);
  check_block_structure(r, GridShape{5, 5}, o.samples, o.seed);
  return r;
}

VerificationReport closure_laws(const SuiteOptions& o) {
  VerificationReport r{"closure_laws", "the full form is a closure operator and step-by-step percolation ends at it from any order", {}};
  check_closure_laws(r, GridShape{4, 4}, Params{2, 2}, o.samples, 20, o.seed);
  check_closure_laws(r, GridShape{5, 5}, Params{3, 2}, o.samples, 20, o.seed);
  check_closure_laws(r, GridShape{3, 3, 3}, Params{2, 2}, o.samples, 20, o.seed);
  check_closure_laws(r, GridShape{3, 3, 3}, Params{2, 3}, o.samples, 20, o.seed);
  check_closure_laws(r, GridShape{4, 3, 2}, Params{2, 1}, o.samples, 20, o.seed);
  return r;
}

VerificationReport formula_vs_oracle(const SuiteOptions& o) {
  VerificationReport r{"formula_vs_oracle", "the l_set is a minimum percolating set and its size is the closed-form sum", {}};
  check_formula_counts(r, 4, 4, 6);
  const GridShape cube{2, 2, 2};
  for (int rank : {1, 2, 3}) {
    const Params p{2, rank};
    check_minimum(r, "minimum_equals_formula", cube, p, Target::percolate, m_formula(cube, p).total, search_options(o));
    check_l_set_percolates(r, cube, p);
  }
  const GridShape square{3, 3};
  check_minimum(r, "minimum_equals_formula", square, Params{3, 2}, Target::percolate, m_formula(square, Params{3, 2}).total,
                search_options(o));
  for (const auto& shape : shapes_up_to(2, 5, 25, 3)) check_l_set_percolates(r, shape, Params{3, 2});
  check_dedup_agrees(r, GridShape{3, 3}, Params{2, 2}, Target::percolate, search_options(o));
  check_dedup_agrees(r, GridShape{3, 4}, Params{2, 2}, Target::percolate, search_options(o));
  check_dedup_agrees(r, GridShape{2, 2, 2}, Params{2, 2}, Target::percolate, search_options(o));
  check_dedup_agrees(r, GridShape{3, 3}, Params{3, 2}, Target::one_phase, search_options(o));
  return r;
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"prop2_2", prop2_2},     {"thm3_1", thm3_1},         {"thm2_7", thm2_7},       {"lemma_union", lemma_union},
      {"prop_removal", prop_removal}, {"prop4_4", prop4_4}, {"closure_laws", closure_laws}, {"formula_vs_oracle", formula_vs_oracle},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [n, fn] : suites()) {
    if (n == name) return fn(options);
  }
  throw InvalidInput("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace hperc::verify
