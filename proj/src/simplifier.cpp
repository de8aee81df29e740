#include "handlecalc/simplifier.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "handlecalc/forms.hpp"

namespace hcalc {

std::string_view to_string(NormalForm f) {
  switch (f) {
    case NormalForm::WeakSimplified: return "weak_simplified";
    case NormalForm::Simplified: return "simplified";
    case NormalForm::Strong: return "strong";
    case NormalForm::EpsilonUniform: return "epsilon_uniform";
    case NormalForm::ParityDichotomy: return "parity_dichotomy";
  }
  return "unknown";
}

std::string_view to_string(PlanKind k) {
  switch (k) {
    case PlanKind::Relabel: return "relabel";
    case PlanKind::AddFullSet: return "add_full_set";
    case PlanKind::AddBridges: return "add_bridges";
    case PlanKind::PairElimination: return "pair_elimination";
    case PlanKind::LoopElimination: return "loop_elimination";
    case PlanKind::CrossingCollection: return "crossing_collection";
  }
  return "unknown";
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

long weak_bound(long n, long w, long b, long c) {
  return std::max(floor_div(2 * w + b * (n - 2), 4), c) + n - 1;
}

// ---------------------------------------------------------------------------
// Stats-level planner

namespace {

constexpr std::size_t kMaxPlanSteps = 10'000'000;

class Planner {
 public:
  explicit Planner(const ChartStats& ch) : ch_(ch), white_(ch.white) {
    auto totals = stats_of_chart(ch);
    plan_.degree = ch.degree;
    plan_.w0 = w_ = totals.w;
    plan_.b0 = b_ = totals.b;
    plan_.c0 = c_ = totals.c;
  }

  StatsPlan run() {
    const int n = ch_.degree;
    relabel();
    if (n - 1 > 0) push(PlanKind::AddFullSet, 0, 0, n - 1);
    const long bridges = floor_div(2 * plan_.w0 + plan_.b0 * (n - 2), 4);
    if (bridges > 0) {
      push(PlanKind::AddBridges, 0, 0, bridges);
      free_bridges_ = bridges;
    }
    long pairs = 0;
    for (int i = 1; i + 1 <= n - 1; ++i) {
      long up = white_[{i, i + 1}];
      long down = white_[{i + 1, i}];
      if (up != down)
        throw Error(fmt::format("white vertices of types w_{{{0},{1}}} and w_{{{1},{0}}} do not pair up", i, i + 1));
      for (long t = 0; t < up; ++t) {
        w_ -= 2;
        ++pairs;
        push(PlanKind::PairElimination, i, i + 1, 0);
      }
    }
    if (pairs > bridges) throw Error("more white pairs than bridge handles");
    for (const auto& [label, count] : ch_.loops)
      if (count > 0) push(PlanKind::LoopElimination, label, 0, 0);
    for (const auto& [key, count] : ch_.crossings) {
      for (long t = 0; t < count; ++t) {
        --c_;
        long added = 0;
        if (free_bridges_ > 0)
          --free_bridges_;
        else
          added = 1;
        push(PlanKind::CrossingCollection, key.first, key.second, added);
      }
    }
    const long expected = weak_bound(n, plan_.w0, plan_.b0, plan_.c0);
    if (plan_.handles_added != expected)
      throw Error(fmt::format("plan adds {} handles, bound is {}", plan_.handles_added, expected));
    return plan_;
  }

 private:
  void relabel() {
    std::vector<int> outs, ins;
    for (const auto& [key, count] : ch_.black_edge_labels)
      for (long t = 0; t < count; ++t) (key.second == EdgeDir::Out ? outs : ins).push_back(key.first);
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    // Moving each out-edge to its partner label balances every label.
    for (std::size_t t = 0; t < outs.size() && t < ins.size(); ++t) {
      int label = outs[t];
      while (label != ins[t]) {
        int next = label + (ins[t] > label ? 1 : -1);
        white_[{next, label}] += 1;
        ++w_;
        PlanStep& s = push(PlanKind::Relabel, label, next, 0);
        s.dir = EdgeDir::Out;
        label = next;
      }
    }
  }

  PlanStep& push(PlanKind kind, int a, int b, long added) {
    if (plan_.steps.size() >= kMaxPlanSteps) throw BudgetExceeded("plan exceeds its step budget");
    PlanStep s;
    s.kind = kind;
    s.label_a = a;
    s.label_b = b;
    s.added = added;
    plan_.handles_added += added;
    handles_ += added;
    s.w = w_;
    s.b = b_;
    s.c = c_;
    s.handles = handles_;
    s.free_bridges = free_bridges_;
    plan_.steps.push_back(s);
    return plan_.steps.back();
  }

  const ChartStats& ch_;
  std::map<std::pair<int, int>, long> white_;
  StatsPlan plan_;
  long w_ = 0, b_ = 0, c_ = 0, handles_ = 0, free_bridges_ = 0;
};

}  // namespace

StatsPlan plan_weak_simplify_stats(const ChartStats& ch) {
  auto violations = validate_chart(ch);
  if (!violations.empty()) throw PreconditionError("plan_weak_simplify_stats", violations.front().detail);
  return Planner(ch).run();
}

// ---------------------------------------------------------------------------
// Configuration-level strategies

namespace {

class Derivation {
 public:
  Derivation(const HandleConfig& initial, const SimplifyOptions& opt)
      : initial_(initial), cur_(initial), max_steps_(opt.max_steps) {}

  const HandleConfig& cur() const { return cur_; }
  int degree() const { return cur_.degree; }
  int size() const { return static_cast<int>(cur_.handles.size()); }
  const Handle& at(int idx) const { return cur_.handles[static_cast<std::size_t>(idx)]; }

  void run(Applied a) {
    record(a.step);
    cur_ = std::move(a.config);
  }

  void run(MacroResult m) {
    for (const RewriteStep& s : m.steps) record(s);
    cur_ = std::move(m.config);
  }

  RewriteTrace trace() const { return RewriteTrace{initial_, steps_, cur_, added_}; }
  long added() const { return added_; }

 private:
  void record(const RewriteStep& s) {
    if (steps_.size() >= max_steps_)
      throw BudgetExceeded(fmt::format("strategy exceeded the step budget of {}", max_steps_));
    if (s.rule == Rule::AddHandles) added_ += static_cast<long>(s.params.handles.size());
    steps_.push_back(s);
  }

  HandleConfig initial_;
  HandleConfig cur_;
  std::vector<RewriteStep> steps_;
  std::size_t max_steps_;
  long added_ = 0;
};

void require_crossing_only(const HandleConfig& cfg, std::string_view strategy) {
  cfg.validate();
  for (std::size_t idx = 0; idx < cfg.handles.size(); ++idx)
    if (!cfg.handles[idx].crossing_only())
      throw PreconditionError(std::string(strategy),
                              fmt::format("handle {} = {} is not crossing-only", idx, cfg.handles[idx].to_string()));
}

int core_len(const Handle& h) { return static_cast<int>(h.core().size()); }

// Turns every cocore s_i^-1 into s_i.
void reverse_negative_cocores(Derivation& d) {
  for (int idx = 0; idx < d.size(); ++idx) {
    const Handle& h = d.at(idx);
    if (h.cocore_label() && h.cocore()[0].sign < 0) d.run(reverse_handle(d.cur(), idx));
  }
}

// Chooses one handle with cocore exactly s_i per label (empty core first,
// then lowest index) and adds h(s_i, e) for labels that have none. Entries
// of `full` already set are kept.
void ensure_full_set(Derivation& d, std::vector<int>& full) {
  const int n = d.degree();
  full.resize(static_cast<std::size_t>(std::max(n, 1)), -1);
  std::vector<Handle> missing;
  std::vector<int> missing_labels;
  for (int i = 1; i < n; ++i) {
    if (full[static_cast<std::size_t>(i)] >= 0) continue;
    int best = -1;
    for (int idx = 0; idx < d.size(); ++idx) {
      if (!d.at(idx).has_cocore(i)) continue;
      if (std::find(full.begin(), full.end(), idx) != full.end()) continue;
      if (best < 0 || (d.at(idx).core().empty() && !d.at(best).core().empty())) best = idx;
    }
    if (best >= 0) {
      full[static_cast<std::size_t>(i)] = best;
    } else {
      missing.push_back(Handle::loop(n, i));
      missing_labels.push_back(i);
    }
  }
  if (missing.empty()) return;
  const int base = d.size();
  d.run(add_handles(d.cur(), missing, Alphabet::Weak));
  for (std::size_t t = 0; t < missing_labels.size(); ++t)
    full[static_cast<std::size_t>(missing_labels[t])] = base + static_cast<int>(t);
}

bool in_full_set(const std::vector<int>& full, int idx) {
  return std::find(full.begin(), full.end(), idx) != full.end();
}

// Lowest-index h(e,e) outside the full set; adds one when none is free.
int take_spare(Derivation& d, const std::vector<int>& full) {
  for (int idx = 0; idx < d.size(); ++idx)
    if (d.at(idx).is_spare() && !in_full_set(full, idx)) return idx;
  d.run(add_handles(d.cur(), {Handle::empty(d.degree())}, Alphabet::Weak));
  return d.size() - 1;
}

bool has_spare(const Derivation& d, const std::vector<int>& full) {
  for (int idx = 0; idx < d.size(); ++idx)
    if (d.at(idx).is_spare() && !in_full_set(full, idx)) return true;
  return false;
}

// h(e, c) -> h(e, e) by deleting the last letter of c with the full-set helper.
void strip_letters(Derivation& d, int idx, const std::vector<int>& full) {
  while (!d.at(idx).core().empty()) {
    const int pos = core_len(d.at(idx)) - 1;
    const int k = d.at(idx).core()[static_cast<std::size_t>(pos)].index;
    d.run(eliminate_loop(d.cur(), full[static_cast<std::size_t>(k)], idx, LoopSite::Letter, pos));
  }
}

// Moves letter `pos` of handle `src` (cocore s_j) onto a fresh h(s_j, e)
// made from a spare. Returns the index of the new single-crossing handle.
int isolate_letter(Derivation& d, int src, int pos, const std::vector<int>& full) {
  const int j = *d.at(src).cocore_label();
  const int s = take_spare(d, full);
  d.run(eliminate_loop(d.cur(), full[static_cast<std::size_t>(j)], s, LoopSite::Handle, 0, true));
  d.run(transfer_same_label(d.cur(), src, pos, s));
  return s;
}

bool is_normal_crossing(const Handle& h) {
  return h.has_cocore(1) && h.core().is_single_letter() && h.core()[0].index == 3;
}

// Canonical order: full set by label, then `middle` in index order, then
// the remaining handles in index order.
void canonical_order(Derivation& d, const std::vector<int>& full, std::vector<int> middle) {
  std::vector<int> perm;
  for (int i = 1; i < d.degree(); ++i) perm.push_back(full[static_cast<std::size_t>(i)]);
  std::sort(middle.begin(), middle.end());
  for (int idx : middle)
    if (std::find(perm.begin(), perm.end(), idx) == perm.end()) perm.push_back(idx);
  for (int idx = 0; idx < d.size(); ++idx)
    if (std::find(perm.begin(), perm.end(), idx) == perm.end()) perm.push_back(idx);
  std::vector<int> identity(perm.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (perm != identity) d.run(permute_handles(d.cur(), perm));
}

NormalFormReport make_report(const Derivation& d, NormalForm form, std::optional<int> exponent,
                             const SimplifyOptions& opt) {
  NormalFormReport r;
  r.form = form;
  r.exponent = exponent;
  r.trace = d.trace();
  r.handles_added = r.trace.handles_added;
  r.seed = opt.seed;
  return r;
}

// Collects every crossing onto h(s1, s3^E) + sum_{i>=2} h(s_i, e) and turns
// every other handle into a spare. Returns the full-set indices.
std::vector<int> collect_crossings(Derivation& d, bool shifted) {
  const int n = d.degree();
  reverse_negative_cocores(d);
  std::vector<int> full(static_cast<std::size_t>(std::max(n, 1)), -1);
  if (shifted) {
    if (n < 4) throw PreconditionError("strong_normal_form", "the shifted variant needs degree N >= 4");
    d.run(add_handles(d.cur(), {Handle::crossing(n, 1, 3, -1)}, Alphabet::Extended));
    full[1] = d.size() - 1;
  }
  ensure_full_set(d, full);

  const int original = d.size();
  for (int idx = 0; idx < original; ++idx) {
    if (in_full_set(full, idx)) continue;
    const Handle& h = d.at(idx);
    if (h.cocore().empty()) {
      strip_letters(d, idx, full);
      continue;
    }
    const int i = *h.cocore_label();
    while (!d.at(idx).core().empty()) {
      const int pos = core_len(d.at(idx)) - 1;
      const int k = d.at(idx).core()[static_cast<std::size_t>(pos)].index;
      d.run(transfer_crossing(d.cur(), idx, pos, full[static_cast<std::size_t>(k)]));
    }
    d.run(eliminate_loop(d.cur(), full[static_cast<std::size_t>(i)], idx, LoopSite::Handle));
  }

  // Descending labels: isolate each foreign letter, retarget it to s1/s3,
  // merge it into the s1-handle and discard the carrier.
  const int f1 = n >= 2 ? full[1] : -1;
  for (int j = n - 1; j >= 1; --j) {
    const int fj = full[static_cast<std::size_t>(j)];
    while (true) {
      const auto& letters = d.at(fj).core().letters();
      int pos = -1;
      if (j >= 2) {
        if (!letters.empty()) pos = static_cast<int>(letters.size()) - 1;
      } else {
        for (std::size_t t = 0; t < letters.size(); ++t)
          if (letters[t].index != 3) {
            pos = static_cast<int>(t);
            break;
          }
      }
      if (pos < 0) break;
      const int s = isolate_letter(d, fj, pos, full);
      if (!is_normal_crossing(d.at(s))) d.run(normalize_crossing(d.cur(), s));
      d.run(transfer_same_label(d.cur(), s, 0, f1));
      d.run(eliminate_loop(d.cur(), f1, s, LoopSite::Handle));
    }
  }
  if (!has_spare(d, full)) take_spare(d, full);
  return full;
}

int s1_exponent(const Derivation& d, const std::vector<int>& full) {
  if (d.degree() < 4) return 0;
  return d.at(full[1]).core().exponent_sum();
}

}  // namespace

NormalFormReport weak_simplify_config(const HandleConfig& cfg, const SimplifyOptions& opt) {
  require_crossing_only(cfg, "weak_simplify_config");
  Derivation d(cfg, opt);
  if (!opt.fixed_disk && is_weak_simplified(cfg)) return make_report(d, NormalForm::WeakSimplified, std::nullopt, opt);

  reverse_negative_cocores(d);
  std::vector<int> full;
  ensure_full_set(d, full);
  const int original = d.size();
  for (int idx = 0; idx < original; ++idx) {
    if (in_full_set(full, idx)) continue;
    const Handle& h = d.at(idx);
    if (h.cocore().empty()) {
      strip_letters(d, idx, full);
    } else if (h.core().empty()) {
      d.run(eliminate_loop(d.cur(), full[static_cast<std::size_t>(*h.cocore_label())], idx, LoopSite::Handle));
    } else {
      while (core_len(d.at(idx)) >= 2) isolate_letter(d, idx, core_len(d.at(idx)) - 1, full);
    }
  }
  for (int i = 1; i < d.degree(); ++i) {
    const int fi = full[static_cast<std::size_t>(i)];
    while (!d.at(fi).core().empty()) isolate_letter(d, fi, core_len(d.at(fi)) - 1, full);
  }
  return make_report(d, NormalForm::WeakSimplified, std::nullopt, opt);
}

NormalFormReport simplified_form(const HandleConfig& cfg, const SimplifyOptions& opt) {
  require_crossing_only(cfg, "simplified_form");
  Derivation d(cfg, opt);
  const int n = d.degree();
  reverse_negative_cocores(d);
  const int original = d.size();
  for (int idx = 0; idx < original; ++idx) {
    if (d.at(idx).cocore().empty()) continue;
    const int i = *d.at(idx).cocore_label();
    while (!d.at(idx).core().empty()) {
      const Letter l = d.at(idx).core().letters().back();
      d.run(add_handles(d.cur(), {Handle::crossing(n, l.index, i, l.sign)}, Alphabet::Extended));
      d.run(slide_collect(d.cur(), idx, d.size() - 1, SlideMode::Cocore));
    }
  }
  for (int idx = 0; idx < original; ++idx) {
    if (!d.at(idx).cocore().empty()) continue;
    while (!d.at(idx).core().empty()) {
      const int pos = core_len(d.at(idx)) - 1;
      const int k = d.at(idx).core()[static_cast<std::size_t>(pos)].index;
      int helper = -1;
      for (int t = 0; t < d.size() && helper < 0; ++t)
        if (d.at(t).cocore_label() == k) helper = t;
      if (helper < 0) {
        d.run(add_handles(d.cur(), {Handle::loop(n, k)}, Alphabet::Weak));
        helper = d.size() - 1;
      }
      d.run(eliminate_loop(d.cur(), helper, idx, LoopSite::Letter, pos));
    }
  }
  return make_report(d, NormalForm::Simplified, std::nullopt, opt);
}

NormalFormReport strong_normal_form(const HandleConfig& cfg, const SimplifyOptions& opt) {
  require_crossing_only(cfg, "strong_normal_form");
  Derivation d(cfg, opt);
  std::vector<int> full = collect_crossings(d, opt.shifted);
  const int e = s1_exponent(d, full);
  canonical_order(d, full, {});
  return make_report(d, NormalForm::Strong, e, opt);
}

NormalFormReport parity_normal_form(const HandleConfig& cfg, const SimplifyOptions& opt) {
  require_crossing_only(cfg, "parity_normal_form");
  Derivation d(cfg, opt);
  std::vector<int> full = collect_crossings(d, opt.shifted);
  int e = s1_exponent(d, full);
  while (e != 0 && e != 1) {
    const int spare = take_spare(d, full);
    d.run(parity_shift(d.cur(), full[1], full[2], full[3], spare, e >= 2));
    e = s1_exponent(d, full);
  }
  canonical_order(d, full, {});
  return make_report(d, NormalForm::ParityDichotomy, e, opt);
}

NormalFormReport epsilon_uniform_form(const HandleConfig& cfg, int epsilon, const SimplifyOptions& opt) {
  if (epsilon != 1 && epsilon != -1)
    throw PreconditionError("epsilon_uniform_form", fmt::format("epsilon must be +1 or -1, got {}", epsilon));
  require_crossing_only(cfg, "epsilon_uniform_form");
  Derivation d(cfg, opt);
  reverse_negative_cocores(d);
  std::vector<int> full;
  ensure_full_set(d, full);

  std::vector<int> crossing;
  const int original = d.size();
  for (int idx = 0; idx < original; ++idx) {
    // Spares claimed by an earlier isolation already hold one crossing.
    if (in_full_set(full, idx) || std::find(crossing.begin(), crossing.end(), idx) != crossing.end()) continue;
    const Handle& h = d.at(idx);
    if (h.cocore().empty()) {
      strip_letters(d, idx, full);
    } else if (h.core().empty()) {
      d.run(eliminate_loop(d.cur(), full[static_cast<std::size_t>(*h.cocore_label())], idx, LoopSite::Handle));
    } else {
      while (core_len(d.at(idx)) >= 2) crossing.push_back(isolate_letter(d, idx, core_len(d.at(idx)) - 1, full));
      crossing.push_back(idx);
    }
  }
  for (int i = 1; i < d.degree(); ++i) {
    const int fi = full[static_cast<std::size_t>(i)];
    while (!d.at(fi).core().empty()) crossing.push_back(isolate_letter(d, fi, core_len(d.at(fi)) - 1, full));
  }
  std::sort(crossing.begin(), crossing.end());
  for (int x : crossing)
    if (!is_normal_crossing(d.at(x))) d.run(normalize_crossing(d.cur(), x));

  // h(s1, s3^-1) + h(s1, s3) -> h(s1, e) + h(e, s3) -> two spares.
  std::vector<int> pos, neg;
  for (int x : crossing) (d.at(x).core()[0].sign > 0 ? pos : neg).push_back(x);
  std::size_t pairs = std::min(pos.size(), neg.size());
  for (std::size_t t = 0; t < pairs; ++t) {
    d.run(slide_collect(d.cur(), neg[t], pos[t], SlideMode::Core));
    d.run(eliminate_loop(d.cur(), full[1], neg[t], LoopSite::Handle));
    d.run(eliminate_loop(d.cur(), full[3], pos[t], LoopSite::Letter, 0));
  }
  std::vector<int> left(pos.begin() + static_cast<std::ptrdiff_t>(pairs), pos.end());
  left.insert(left.end(), neg.begin() + static_cast<std::ptrdiff_t>(pairs), neg.end());
  for (int x : left) {
    const int sign = d.at(x).core()[0].sign;
    if (sign == epsilon) continue;
    const int spare = take_spare(d, full);
    d.run(parity_shift(d.cur(), x, full[2], full[3], spare, sign > 0));
  }
  canonical_order(d, full, left);
  return make_report(d, NormalForm::EpsilonUniform, std::nullopt, opt);
}

// ---------------------------------------------------------------------------

BoundsReport bounds_report(const ChartStats& ch) {
  auto violations = validate_chart(ch);
  if (!violations.empty()) throw PreconditionError("bounds_report", violations.front().detail);
  BoundsReport r;
  const long n = ch.degree;
  r.degree = ch.degree;
  r.totals = stats_of_chart(ch);
  const long w = r.totals.w, b = r.totals.b, c = r.totals.c;
  const long base = floor_div(2 * w + b * (n - 2), 4);
  r.weak_bound = weak_bound(n, w, b, c);
  r.weak_upper = r.weak_bound;
  if (w == 0) {
    r.crossing_only_weak_upper = n;
    r.crossing_only_simplifying_upper = n;
    r.weak_upper = std::min(r.weak_upper, n);
  }
  r.weak_bound_at_least_one = std::max(1L, base) + n - 1;
  if (b == 0) r.weak_bound_no_black = std::max(1L, w / 2) + n - 1;
  long loops = 0;
  for (const auto& [label, count] : ch.loops) loops += count;
  if (w == 0 && c == 0 && loops == 0) r.weak_upper = 0;
  r.simplifying_from_weak = std::max(1L, r.weak_upper) + n - 1;
  return r;
}

}  // namespace hcalc
