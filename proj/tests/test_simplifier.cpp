#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "handlecalc/chart.hpp"
#include "handlecalc/forms.hpp"
#include "handlecalc/simplifier.hpp"
#include "rule_cases.hpp"
#include "support.hpp"

using namespace hcalc;
using hcalc::testing::config;
using hcalc::testing::Rng;

namespace {

HandleConfig example_config(int n) {
  HandleConfig cfg;
  cfg.degree = 2 * n + 1;
  for (int i = 1; i <= n; ++i) cfg.handles.push_back(Handle::crossing(cfg.degree, i, n + i, 1));
  return cfg;
}

void check_report(const NormalFormReport& r) {
  auto v = verify_trace(r.trace);
  CHECK_MESSAGE(v.accepted, v.reason);
  CHECK(r.handles_added == r.trace.handles_added);
}

}  // namespace

TEST_CASE("weak_bound") {
  CHECK(weak_bound(3, 2, 0, 0) == 3);
  CHECK(weak_bound(4, 0, 0, 5) == 8);
  CHECK(weak_bound(4, 2, 4, 0) == 6);
  CHECK(weak_bound(2, 0, 0, 0) == 1);
  CHECK(weak_bound(5, 3, 2, 0) == 4 + 3);  // floor(1.5 + 1.5) = 3
  CHECK(weak_bound(4, 1, 2, 0) == 1 + 3);  // floor(0.5 + 1) = 1
}

TEST_CASE("plan_weak_simplify_stats") {
  ChartStats a;
  a.degree = 3;
  a.white = {{{1, 2}, 1}, {{2, 1}, 1}};
  StatsPlan p = plan_weak_simplify_stats(a);
  CHECK(p.handles_added == 3);
  CHECK(p.steps.back().w == 0);

  ChartStats b;
  b.degree = 4;
  b.crossings = {{{1, 3}, 2}};
  p = plan_weak_simplify_stats(b);
  CHECK(p.handles_added == 5);
  CHECK(p.steps.back().c == 0);

  ChartStats c;
  c.degree = 2;
  CHECK(plan_weak_simplify_stats(c).handles_added == 1);

  ChartStats unpaired;
  unpaired.degree = 3;
  unpaired.white = {{{1, 2}, 2}, {{2, 1}, 1}};
  CHECK_THROWS_AS(plan_weak_simplify_stats(unpaired), PreconditionError);
}

TEST_CASE("plan step deltas match their kinds") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    ChartStats ch = hcalc::testing::random_valid_census(rng, 8, 20, 8, 20);
    StatsPlan p = plan_weak_simplify_stats(ch);
    long w = p.w0, c = p.c0, handles = 0;
    for (const PlanStep& s : p.steps) {
      switch (s.kind) {
        case PlanKind::Relabel: CHECK(s.w == w + 1); break;
        case PlanKind::PairElimination: CHECK(s.w == w - 2); break;
        case PlanKind::CrossingCollection: CHECK(s.c == c - 1); break;
        default: CHECK(s.w == w); CHECK(s.c == c); break;
      }
      CHECK(s.handles == handles + s.added);
      w = s.w;
      c = s.c;
      handles = s.handles;
    }
    CHECK(w == 0);
    CHECK(c == 0);
    auto tot = stats_of_chart(ch);
    CHECK(p.handles_added == weak_bound(ch.degree, tot.w, tot.b, tot.c));
  }
}

TEST_CASE("weak_simplify_config") {
  for (int n : {2, 3, 4}) {
    auto r = weak_simplify_config(example_config(n));
    CHECK(r.handles_added == 0);
    CHECK(is_weak_simplified(r.trace.final_config));
    check_report(r);
  }

  auto split = weak_simplify_config(config(4, {{"s1", "s3 s3"}}));
  check_report(split);
  CHECK(is_weak_simplified_fixed_disk(split.trace.final_config));
  int crossings = 0;
  for (const Handle& h : split.trace.final_config.handles)
    if (h == Handle::crossing(4, 1, 3, 1)) ++crossings;
  CHECK(crossings == 2);
  CHECK(hcalc::testing::census_s(split.trace.final_config) == hcalc::testing::census_s(config(4, {{"s1", "s3 s3"}})));

  SimplifyOptions fixed;
  fixed.fixed_disk = true;
  auto loop = weak_simplify_config(config(4, {{"s1", "e"}}), fixed);
  check_report(loop);
  CHECK(loop.trace.final_config == config(4, {{"s1", "e"}, {"s2", "e"}, {"s3", "e"}}));
  CHECK(loop.handles_added == 2);

  CHECK_THROWS_AS(weak_simplify_config(config(4, {{"s1 s2", "e"}})), PreconditionError);
}

TEST_CASE("strong_normal_form") {
  auto r = strong_normal_form(config(4, {{"s1", "e"}, {"s2", "e"}, {"s3", "e"}, {"s1", "s3"}}));
  check_report(r);
  CHECK(r.exponent == 1);
  CHECK(strong_form_exponent(r.trace.final_config) == 1);

  auto none = strong_normal_form(config(4, {{"s1", "e"}}));
  CHECK(none.exponent == 0);
  CHECK(strong_form_exponent(none.trace.final_config) == 0);

  auto low = strong_normal_form(config(3, {{"s2", "e"}, {"e", "s1 s2"}}));
  check_report(low);
  CHECK(low.exponent == 0);

  auto empty = strong_normal_form(config(1, {}));
  CHECK(strong_form_exponent(empty.trace.final_config) == 0);
}

TEST_CASE("strong_normal_form exponent equals -s") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const int n = hcalc::testing::uniform(rng, 4, 8);
    HandleConfig cfg = hcalc::testing::random_crossing_only_config(rng, n, 6, 6);
    const long s = hcalc::testing::census_s(cfg);
    auto r = strong_normal_form(cfg);
    check_report(r);
    CHECK(r.exponent == -s);
    CHECK(strong_form_exponent(r.trace.final_config) == -s);
    SimplifyOptions shifted;
    shifted.shifted = true;
    auto r2 = strong_normal_form(cfg, shifted);
    check_report(r2);
    CHECK(r2.exponent == -s - 1);
  }
}

TEST_CASE("parity_normal_form") {
  auto even = parity_normal_form(config(4, {{"s1", "s3"}, {"s1", "s3^-1"}}));
  check_report(even);
  CHECK(even.exponent == 0);
  CHECK(parity_form_exponent(even.trace.final_config) == 0);

  auto odd = parity_normal_form(config(4, {{"s1", "s3"}}));
  check_report(odd);
  CHECK(odd.exponent == 1);

  auto empty = parity_normal_form(config(4, {}));
  CHECK(empty.exponent == 0);

  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const int n = hcalc::testing::uniform(rng, 4, 8);
    HandleConfig cfg = hcalc::testing::random_crossing_only_config(rng, n, 6, 6);
    auto r = parity_normal_form(cfg);
    check_report(r);
    CHECK(r.exponent == hcalc::testing::census_c(cfg) % 2);
    CHECK(parity_form_exponent(r.trace.final_config) == r.exponent);
  }
}

TEST_CASE("epsilon_uniform_form") {
  auto cancel = epsilon_uniform_form(
      config(4, {{"s1", "e"}, {"s2", "e"}, {"s3", "e"}, {"s1", "s3"}, {"s1", "s3^-1"}}), 1);
  check_report(cancel);
  CHECK(cancel.trace.final_config == config(4, {{"s1", "e"}, {"s2", "e"}, {"s3", "e"}, {"e", "e"}, {"e", "e"}}));

  auto same = config(4, {{"s1", "e"}, {"s2", "e"}, {"s3", "e"}, {"s1", "s3"}, {"s1", "s3"}});
  auto kept = epsilon_uniform_form(same, 1);
  CHECK(kept.trace.final_config == same);
  CHECK(kept.trace.steps.empty());

  Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    const int n = hcalc::testing::uniform(rng, 4, 8);
    HandleConfig cfg = hcalc::testing::random_crossing_only_config(rng, n, 6, 6);
    for (int eps : {1, -1}) {
      auto r = epsilon_uniform_form(cfg, eps);
      check_report(r);
      CHECK(is_epsilon_uniform(r.trace.final_config, eps));
      CHECK(std::labs(hcalc::testing::census_s(r.trace.final_config)) == std::labs(hcalc::testing::census_s(cfg)));
    }
  }
  CHECK_THROWS_AS(epsilon_uniform_form(same, 0), PreconditionError);
}

TEST_CASE("simplified_form witnesses the example bound") {
  for (int n : {2, 3, 4}) {
    HandleConfig cfg = example_config(n);
    auto r = simplified_form(cfg);
    check_report(r);
    CHECK(is_simplified(r.trace.final_config));
    CHECK(r.handles_added == n);
    std::vector<Handle> added;
    for (const auto& s : r.trace.steps)
      if (s.rule == Rule::AddHandles) added.insert(added.end(), s.params.handles.begin(), s.params.handles.end());
    std::vector<Handle> expected;
    for (int i = 1; i <= n; ++i) expected.push_back(Handle::crossing(2 * n + 1, n + i, i, 1));
    std::sort(added.begin(), added.end(), [](const Handle& a, const Handle& b) { return a.to_string() < b.to_string(); });
    std::sort(expected.begin(), expected.end(),
              [](const Handle& a, const Handle& b) { return a.to_string() < b.to_string(); });
    CHECK(added == expected);
  }
}

TEST_CASE("bounds_report") {
  ChartStats a;
  a.degree = 5;
  a.crossings = {{{1, 3}, 3}};
  auto r = bounds_report(a);
  CHECK(r.crossing_only_weak_upper == 5);
  CHECK(r.crossing_only_simplifying_upper == 5);

  ChartStats b;
  b.degree = 4;
  b.white = {{{1, 2}, 3}, {{2, 1}, 3}};
  b.crossings = {{{1, 3}, 1}};
  r = bounds_report(b);
  CHECK(r.weak_bound_no_black == 6);

  ChartStats c;
  c.degree = 3;
  r = bounds_report(c);
  CHECK(r.weak_upper == 0);
  CHECK(r.simplifying_from_weak == 3);
  CHECK(r.weak_bound >= 0);
}

TEST_CASE("strategies are deterministic and respect the budget") {
  auto cfg = config(6, {{"s1", "s3 s4^-1 s5"}, {"s2", "s5 s4"}, {"e", "s1 s3"}});
  SimplifyOptions a, b;
  a.seed = 7;
  b.seed = 7;
  CHECK(strong_normal_form(cfg, a).trace == strong_normal_form(cfg, b).trace);
  SimplifyOptions tiny;
  tiny.max_steps = 3;
  CHECK_THROWS_AS(strong_normal_form(cfg, tiny), BudgetExceeded);
}
