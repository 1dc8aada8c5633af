// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hperc/constructions.hpp"
#include "hperc/verify.hpp"

using namespace hperc;
using verify::VerificationReport;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kSamples = 200;
constexpr int kStepSeeds = 20;
constexpr int kBlockSamples = 500;

struct Criterion {
  const char* id;
  const char* description;
  double limit_seconds;  // 0 = no time limit
  std::function<void(VerificationReport&)> run;
};

int run_criterion(const Criterion& c) {
  VerificationReport report{c.id, c.description, {}};
  const auto start = std::chrono::steady_clock::now();
  c.run(report);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
  const bool ok = !report.rows.empty() && report.passed() && report.complete() && in_time;
  std::printf("%s %s: %s (%d/%zu rows passed, %.2f s", c.id, ok ? "PASS" : "FAIL", c.description, report.count(verify::Outcome::pass),
              report.rows.size(), seconds);
  if (c.limit_seconds > 0) std::printf(", limit %.0f s", c.limit_seconds);
  std::printf(")\n");
  if (!ok) {
    for (const auto& row : report.rows) {
      if (row.outcome != verify::Outcome::pass) {
        std::printf("    [%s] %s on %s: expected %s, observed %s\n", verify::to_string(row.outcome).c_str(), row.claim.c_str(),
                    row.instance.c_str(), row.expected.c_str(), row.observed.c_str());
      }
    }
    if (!in_time) std::printf("    time limit exceeded\n");
  }
  std::fflush(stdout);
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  const SearchOptions exact{SearchMode::exact, kDefaultBudget, 1};
  const Params t2r2{2, 2};

  const std::vector<Criterion> criteria{
      {"AC1", "planar minimum percolating size is n1 + n2 - 1 for 2 <= n1, n2 <= 4 (t = r = 2)", 60,
       [&](VerificationReport& r) {
         for (int n1 = 2; n1 <= 4; ++n1)
           for (int n2 = 2; n2 <= 4; ++n2)
             verify::check_minimum(r, "minimum_percolating_size", GridShape{n1, n2}, t2r2, Target::percolate, n1 + n2 - 1, exact);
       }},
      {"AC2", "minimum percolating size is sum(n_i) - (d - 1) on 2x2x2 and 2x2x3 (t = r = 2)", 120,
       [&](VerificationReport& r) {
         verify::check_minimum(r, "minimum_percolating_size", GridShape{2, 2, 2}, t2r2, Target::percolate, 6 - 2, exact);
         verify::check_minimum(r, "minimum_percolating_size", GridShape{2, 2, 3}, t2r2, Target::percolate, 7 - 2, exact);
       }},
      {"AC3", "minimum percolating size equals the closed-form sum (2x2x2 t=2 r=1,3; 3x3 t=3 r=2)", 120,
       [&](VerificationReport& r) {
         struct Case {
           GridShape shape;
           Params params;
           std::int64_t expected;
         };
         for (const auto& c : {Case{GridShape{2, 2, 2}, Params{2, 1}, 1}, Case{GridShape{2, 2, 2}, Params{2, 3}, 7},
                               Case{GridShape{3, 3}, Params{3, 2}, 8}}) {
           const auto formula = m_formula(c.shape, c.params).total;
           r.add({"closed_form_value", to_string(c.shape), std::to_string(c.expected), std::to_string(formula),
                  formula == c.expected ? verify::Outcome::pass : verify::Outcome::fail});
           verify::check_minimum(r, "minimum_equals_closed_form", c.shape, c.params, Target::percolate, formula, exact);
         }
       }},
      {"AC4", "minimum one-phase size is (n1 + n2)(t - 1) - (t - 1)^2 on 3x3 and 3x4 (t = 3, r = 2)", 60,
       [&](VerificationReport& r) {
         verify::check_minimum(r, "minimum_one_phase_size", GridShape{3, 3}, Params{3, 2}, Target::one_phase, 8, exact);
         verify::check_minimum(r, "minimum_one_phase_size", GridShape{3, 4}, Params{3, 2}, Target::one_phase, 10, exact);
       }},
      {"AC5", "merging any slice pair of 200 random percolating sets on 4x4 and 3x3x3 keeps percolation", 0,
       [&](VerificationReport& r) {
         verify::check_slice_union(r, GridShape{4, 4}, kSamples, kSeed);
         verify::check_slice_union(r, GridShape{3, 3, 3}, kSamples, kSeed);
       }},
      {"AC6", "removing a (t-1)-cell row of 200 random percolating 5x5 sets keeps percolation (t = 2, 3)", 0,
       [&](VerificationReport& r) {
         for (int t : {2, 3}) verify::check_line_removal(r, GridShape{5, 5}, t, kSamples, kSeed);
       }},
      {"AC7", "closure laws and order independence on 200 random sets per configuration, 20 step orders each", 0,
       [&](VerificationReport& r) {
         verify::check_closure_laws(r, GridShape{4, 4}, Params{2, 2}, kSamples, kStepSeeds, kSeed);
         verify::check_closure_laws(r, GridShape{5, 5}, Params{3, 2}, kSamples, kStepSeeds, kSeed);
         verify::check_closure_laws(r, GridShape{3, 3, 3}, Params{2, 2}, kSamples, kStepSeeds, kSeed);
         verify::check_closure_laws(r, GridShape{3, 3, 3}, Params{2, 3}, kSamples, kStepSeeds, kSeed);
         verify::check_closure_laws(r, GridShape{4, 3, 2}, Params{2, 1}, kSamples, kStepSeeds, kSeed);
       }},
      {"AC8", "shifts keep the full form; maximal-shift normal forms contain row 1 and column 1", 0,
       [&](VerificationReport& r) {
         verify::check_shift_invariance(r, GridShape{5, 5}, Params{2, 2}, kSamples, kSeed);
         verify::check_shift_invariance(r, GridShape{5, 5}, Params{3, 2}, kSamples, kSeed);
         verify::check_normal_form(r, GridShape{5, 5}, kSamples, kSeed);
         verify::check_normal_form(r, GridShape{4, 6}, kSamples, kSeed);
       }},
      {"AC9", "full forms of 500 random 5x5 sets (t = r = 2) are disjoint unions of products", 0,
       [&](VerificationReport& r) { verify::check_block_structure(r, GridShape{5, 5}, kBlockSamples, kSeed); }},
      {"AC10", "l_set size equals the closed-form sum for d <= 4, t <= 4, r <= d, t <= n_i <= 6", 10,
       [&](VerificationReport& r) { verify::check_formula_counts(r, 4, 4, 6); }},
  };

  int failed = 0;
  for (const auto& c : criteria) failed += run_criterion(c);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
