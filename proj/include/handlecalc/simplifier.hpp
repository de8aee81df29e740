#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "handlecalc/chart.hpp"
#include "handlecalc/rewrite.hpp"

namespace hcalc {

enum class NormalForm { WeakSimplified, Simplified, Strong, EpsilonUniform, ParityDichotomy };

std::string_view to_string(NormalForm f);

struct NormalFormReport {
  NormalForm form = NormalForm::WeakSimplified;
  std::optional<int> exponent;  // s3-power on the s1-handle, when the form has one
  long handles_added = 0;
  RewriteTrace trace;
  std::uint64_t seed = 0;
};

struct SimplifyOptions {
  std::uint64_t seed = 0;          // recorded only; every strategy is deterministic
  std::size_t max_steps = 100000;  // BudgetExceeded past this many steps
  bool fixed_disk = false;         // weak: always produce the full-set form
  bool shifted = false;            // strong: start from h(s1, s3^-1) instead of h(s1, e)
};

// max{floor(w/2 + (b/4)(N-2)), c} + N - 1, with exact integer floor.
long weak_bound(long n, long w, long b, long c);

// ---------------------------------------------------------------------------
// Census-level plan for reaching the weak simplified form.

enum class PlanKind { Relabel, AddFullSet, AddBridges, PairElimination, LoopElimination, CrossingCollection };

std::string_view to_string(PlanKind k);

struct PlanStep {
  PlanKind kind = PlanKind::Relabel;
  int label_a = 0;  // relabel: old label; pair: lower label; crossing: i of c_{i,j}; loop: label
  int label_b = 0;  // relabel: new label; pair: upper label; crossing: j of c_{i,j}
  std::optional<EdgeDir> dir;  // relabel only
  long added = 0;              // handles added by this step
  // Counters after the step.
  long w = 0;
  long b = 0;
  long c = 0;
  long handles = 0;
  long free_bridges = 0;
};

struct StatsPlan {
  int degree = 1;
  long w0 = 0, b0 = 0, c0 = 0;
  std::vector<PlanStep> steps;
  long handles_added = 0;
};

StatsPlan plan_weak_simplify_stats(const ChartStats& ch);

// ---------------------------------------------------------------------------
// Configuration-level strategies. All require crossing-only handles.

NormalFormReport weak_simplify_config(const HandleConfig& cfg, const SimplifyOptions& opt = {});
NormalFormReport simplified_form(const HandleConfig& cfg, const SimplifyOptions& opt = {});
NormalFormReport strong_normal_form(const HandleConfig& cfg, const SimplifyOptions& opt = {});
NormalFormReport parity_normal_form(const HandleConfig& cfg, const SimplifyOptions& opt = {});
NormalFormReport epsilon_uniform_form(const HandleConfig& cfg, int epsilon, const SimplifyOptions& opt = {});

// ---------------------------------------------------------------------------

struct BoundsReport {
  int degree = 1;
  ChartTotals totals;
  long weak_bound = 0;
  std::optional<long> crossing_only_weak_upper;       // w = 0: u_w <= N
  std::optional<long> crossing_only_simplifying_upper;  // w = 0: u <= N
  long weak_bound_at_least_one = 0;                   // max{1, floor(w/2 + (b/4)(N-2))} + N - 1
  std::optional<long> weak_bound_no_black;            // b = 0: max{1, w/2} + N - 1
  long weak_upper = 0;                                // best available upper bound on u_w
  long simplifying_from_weak = 0;                     // max{1, weak_upper} + N - 1
};

BoundsReport bounds_report(const ChartStats& ch);

}  // namespace hcalc
