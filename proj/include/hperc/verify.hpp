#pragma once

// Property batteries that check the combinatorial theorems on concrete
// instances, and the named suites exposed by `hperc verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hperc/io.hpp"
#include "hperc/search.hpp"

namespace hperc::verify {

enum class Outcome { pass, fail, skipped };

std::string to_string(Outcome outcome);

struct ClaimRow {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  Outcome outcome = Outcome::pass;
};

struct VerificationReport {
  std::string suite;
  std::string statement;
  std::vector<ClaimRow> rows;

  int count(Outcome outcome) const;
  bool passed() const { return count(Outcome::fail) == 0; }
  bool complete() const { return count(Outcome::skipped) == 0; }

  void add(ClaimRow row) { rows.push_back(std::move(row)); }
  void append(const VerificationReport& other);
};

Json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

struct SuiteOptions {
  int cap = 4;
  int max_cells = 16;
  int samples = 200;
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultBudget;
  int threads = 1;
};

const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

// Batteries. Each appends rows to `report`; a row passes when its claim
// held on every sampled instance.

void check_minimum(VerificationReport& report, const std::string& claim, const GridShape& shape, const Params& params,
                   Target target, std::int64_t expected, const SearchOptions& options);

// Dedup mode must agree with exact mode.
void check_dedup_agrees(VerificationReport& report, const GridShape& shape, const Params& params, Target target,
                        const SearchOptions& options);

// Merging any two slices of a percolating set (t = r = 2) keeps it percolating.
void check_slice_union(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed);

// Removing a row or column with exactly t-1 cells from a percolating planar
// set (r = 2) keeps it percolating. Sets are drawn until `samples` of them
// have such a row.
void check_line_removal(VerificationReport& report, const GridShape& shape, int t, int samples, std::uint64_t seed);

// The first-column repacking of one-phase planar sets (r = 2).
void check_repacking(VerificationReport& report, const GridShape& shape, int t, int samples, std::uint64_t seed);

// Extensivity, idempotence, monotonicity, agreement of the frontier phase
// loop with plain phase iteration, the phase-count bound, one-phase implies
// percolation, and order independence of step-by-step percolation.
void check_closure_laws(VerificationReport& report, const GridShape& shape, const Params& params, int samples,
                        int step_seeds, std::uint64_t seed);

// The full form is unchanged by every applicable shift.
void check_shift_invariance(VerificationReport& report, const GridShape& shape, const Params& params, int samples,
                            std::uint64_t seed);

// Planar t = r = 2: maximal-shift normal forms of percolating sets contain
// the first row and column, and stable_full_form matches the closure.
void check_normal_form(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed);

// Planar t = r = 2: closures split into products with disjoint row and
// column sets.
void check_block_structure(VerificationReport& report, const GridShape& shape, int samples, std::uint64_t seed);

// |l_set| against the closed-form sum for every shape with t <= n_i <= max_n.
void check_formula_counts(VerificationReport& report, int max_d, int max_t, int max_n);

// l_set percolates; for d = r = 2 it percolates in one phase.
void check_l_set_percolates(VerificationReport& report, const GridShape& shape, const Params& params);

}  // namespace hperc::verify
