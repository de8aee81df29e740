#include "handlecalc/rewrite.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cstdlib>

namespace hcalc {

namespace {

struct RuleEntry {
  Rule rule;
  std::string_view name;
};

constexpr std::array<RuleEntry, 12> kRules{{
    {Rule::ReverseHandle, "reverse_handle"},
    {Rule::AbsorbLoop, "absorb_loop"},
    {Rule::EliminateLoop, "eliminate_loop"},
    {Rule::SlideCollect, "slide_collect"},
    {Rule::SwapCrossingHandle, "swap_crossing_handle"},
    {Rule::NormalizeCrossing, "normalize_crossing"},
    {Rule::MoveHandle, "move_handle"},
    {Rule::TransferCrossing, "transfer_crossing"},
    {Rule::TransferSameLabel, "transfer_same_label"},
    {Rule::ParityStep, "parity_step"},
    {Rule::AddHandles, "add_handles"},
    {Rule::PermuteHandles, "permute_handles"},
}};

[[noreturn]] void fail(Rule r, const std::string& what) { throw PreconditionError(std::string(rule_name(r)), what); }

void check_index(Rule r, const HandleConfig& cfg, int idx, std::string_view role) {
  if (idx < 0 || idx >= static_cast<int>(cfg.handles.size()))
    fail(r, fmt::format("{} index {} out of range (configuration has {} handles)", role, idx, cfg.handles.size()));
}

void check_distinct(Rule r, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) fail(r, "operand handles must be distinct");
}

void check_sign(Rule r, int sign) {
  if (sign != 1 && sign != -1) fail(r, fmt::format("sign must be +1 or -1, got {}", sign));
}

const Handle& at(const HandleConfig& cfg, int idx) { return cfg.handles[static_cast<std::size_t>(idx)]; }

// Label of a handle whose cocore is exactly s_i (positive), or 0.
int positive_label(const Handle& h) {
  auto l = h.cocore_label();
  return (l && h.cocore()[0].sign == 1) ? *l : 0;
}

// Replaces a handle, converting invariant failures into rule failures.
void set_handle(Rule r, HandleConfig& cfg, int idx, BraidWord cocore, BraidWord core) {
  try {
    cfg.handles[static_cast<std::size_t>(idx)] = Handle(std::move(cocore), std::move(core));
  } catch (const InvariantError& e) {
    fail(r, e.what());
  }
}

BraidWord gen(int n, int i, int sign = 1) { return BraidWord::generator(n, i, sign); }

std::string label_list(const HandleConfig& cfg, const std::vector<int>& skip, int skip_label) {
  std::string out;
  for (int i = 1; i <= cfg.degree - 1; ++i) {
    if (i == skip_label) continue;
    bool found = false;
    for (int idx = 0; idx < static_cast<int>(cfg.handles.size()) && !found; ++idx)
      if (std::find(skip.begin(), skip.end(), idx) == skip.end() && at(cfg, idx).has_cocore(i)) found = true;
    if (!found) out += (out.empty() ? "" : ", ") + fmt::format("s{}", i);
  }
  return out;
}

void require_full_set(Rule r, const HandleConfig& cfg, const std::vector<int>& skip, int skip_label = 0) {
  if (!has_full_set(cfg, skip, skip_label))
    fail(r, fmt::format("full set of handles h(s_i, b_i) absent; no handle with cocore {}",
                        label_list(cfg, skip, skip_label)));
}

RewriteStep make_step(Rule r, std::vector<int> operands, StepParams params = {}, bool inverse = false) {
  return RewriteStep{r, std::move(operands), std::move(params), inverse};
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& e : kRules)
    if (e.rule == r) return e.name;
  return "unknown";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& e : kRules)
    if (e.name == name) return e.rule;
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> v;
    for (const auto& e : kRules) v.push_back(e.rule);
    return v;
  }();
  return rules;
}

std::string_view to_string(LoopSite s) { return s == LoopSite::Handle ? "handle" : "letter"; }
std::string_view to_string(SlideMode m) { return m == SlideMode::Core ? "core" : "cocore"; }
std::string_view to_string(Alphabet a) { return a == Alphabet::Weak ? "weak" : "extended"; }

std::string RewriteStep::to_string() const {
  std::string ops;
  for (int o : operands) ops += (ops.empty() ? "" : ",") + std::to_string(o);
  return fmt::format("{}{}[{}]", rule_name(rule), inverse ? "^-1" : "", ops);
}

bool has_full_set(const HandleConfig& cfg, const std::vector<int>& skip, int skip_label) {
  return label_list(cfg, skip, skip_label).empty();
}

// ---------------------------------------------------------------------------

Applied reverse_handle(const HandleConfig& cfg, int idx) {
  const Rule r = Rule::ReverseHandle;
  check_index(r, cfg, idx, "handle");
  HandleConfig out = cfg;
  const Handle& h = at(cfg, idx);
  set_handle(r, out, idx, h.cocore().inverse(), h.core().inverse());
  return {std::move(out), make_step(r, {idx})};
}

Applied absorb_loop(const HandleConfig& cfg, int helper, int target, int sign) {
  const Rule r = Rule::AbsorbLoop;
  check_index(r, cfg, helper, "helper");
  check_index(r, cfg, target, "target");
  check_distinct(r, {helper, target});
  check_sign(r, sign);
  const Handle& hh = at(cfg, helper);
  const int i = positive_label(hh);
  if (i == 0 || !hh.core().empty()) fail(r, fmt::format("helper {} must be h(s_i, e)", hh.to_string()));
  const Handle& t = at(cfg, target);
  if (!t.cocore().empty()) fail(r, fmt::format("target {} must have cocore e", t.to_string()));
  HandleConfig out = cfg;
  set_handle(r, out, target, t.cocore(), t.core() * gen(cfg.degree, i, sign));
  StepParams p;
  p.sign = sign;
  return {std::move(out), make_step(r, {helper, target}, p)};
}

Applied eliminate_loop(const HandleConfig& cfg, int helper, int target, LoopSite site, int position,
                       bool inverse, int sign) {
  const Rule r = Rule::EliminateLoop;
  check_index(r, cfg, helper, "helper");
  check_index(r, cfg, target, "target");
  check_distinct(r, {helper, target});
  const Handle& hh = at(cfg, helper);
  auto label = hh.cocore_label();
  if (!label) fail(r, fmt::format("helper {} must have cocore s_i^(+-1)", hh.to_string()));
  const int i = *label;
  const int n = cfg.degree;
  const Handle& t = at(cfg, target);
  HandleConfig out = cfg;
  StepParams p;
  p.site = site;

  if (site == LoopSite::Handle) {
    if (position != 0) fail(r, "handle form takes no letter position");
    if (sign != 0) fail(r, "handle form takes no sign");
    if (!inverse) {
      auto tl = t.cocore_label();
      if (!tl || !t.core().empty())
        fail(r, fmt::format("target {} is not a crossing-free loop h(s_i^(+-1), e)", t.to_string()));
      if (*tl != i) fail(r, fmt::format("label mismatch: helper has label {}, target has label {}", i, *tl));
      set_handle(r, out, target, BraidWord(n), BraidWord(n));
    } else {
      if (!t.is_spare()) fail(r, fmt::format("target {} must be h(e, e)", t.to_string()));
      set_handle(r, out, target, gen(n, i), BraidWord(n));
    }
    return {std::move(out), make_step(r, {helper, target}, p, inverse)};
  }

  if (!t.cocore().empty())
    fail(r, fmt::format("target {} must have cocore e for the letter form", t.to_string()));
  const int len = static_cast<int>(t.core().size());
  p.position = position;
  if (!inverse) {
    if (sign != 0) fail(r, "letter removal takes no sign");
    if (position < 0 || position >= len) fail(r, fmt::format("letter position {} out of range", position));
    if (position != 0 && position != len - 1)
      fail(r, fmt::format("letter at position {} is not at an end of the core word", position));
    const Letter l = t.core()[static_cast<std::size_t>(position)];
    if (l.index != i) fail(r, fmt::format("label mismatch: helper has label {}, letter has label {}", i, l.index));
    set_handle(r, out, target, t.cocore(), t.core().erase(static_cast<std::size_t>(position)));
  } else {
    check_sign(r, sign);
    if (position != 0 && position != len)
      fail(r, fmt::format("insert position {} is not an end of the core word", position));
    BraidWord core = t.core().insert(static_cast<std::size_t>(position), Letter{i, sign});
    if (core.size() != static_cast<std::size_t>(len) + 1)
      fail(r, "inserted letter cancels against its neighbour");
    set_handle(r, out, target, t.cocore(), core);
    p.sign = sign;
  }
  return {std::move(out), make_step(r, {helper, target}, p, inverse)};
}

Applied slide_collect(const HandleConfig& cfg, int mover, int target, SlideMode mode, bool inverse, int sign) {
  const Rule r = Rule::SlideCollect;
  check_index(r, cfg, mover, "mover");
  check_index(r, cfg, target, "target");
  check_distinct(r, {mover, target});
  const int n = cfg.degree;
  const Handle& m = at(cfg, mover);
  const int i = positive_label(m);
  if (i == 0) fail(r, fmt::format("mover {} must have cocore s_i", m.to_string()));
  if (!m.crossing_only()) fail(r, fmt::format("mover {} is not crossing-only", m.to_string()));
  const Handle& t = at(cfg, target);
  auto far_from_i = [&](const BraidWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [&](const Letter& l) { return std::abs(l.index - i) > 1; });
  };
  HandleConfig out = cfg;
  StepParams p;
  p.mode = mode;

  if (mode == SlideMode::Core) {
    if (sign != 0) fail(r, "core mode takes no sign");
    if (!inverse) {
      if (!t.has_cocore(i) || !t.crossing_only())
        fail(r, fmt::format("target {} must be a crossing-only handle with cocore s{}", t.to_string(), i));
      const BraidWord c = t.core();
      set_handle(r, out, mover, m.cocore(), m.core() * c);
      set_handle(r, out, target, BraidWord(n), c);
    } else {
      if (!t.cocore().empty() || !far_from_i(t.core()))
        fail(r, fmt::format("target {} must be h(e, c) with every letter of c far from s{}", t.to_string(), i));
      const BraidWord c = t.core();
      set_handle(r, out, mover, m.cocore(), m.core() * c.inverse());
      set_handle(r, out, target, gen(n, i), c);
    }
    return {std::move(out), make_step(r, {mover, target}, p, inverse)};
  }

  const BraidWord c = t.cocore();
  if (!(c.empty() || (c.is_single_letter() && std::abs(c[0].index - i) > 1)))
    fail(r, fmt::format("target cocore {} must be e or a single letter far from s{}", c.to_string(), i));
  if (!inverse) {
    if (sign != 0) fail(r, "forward cocore mode takes no sign");
    if (!t.core().is_single_letter() || t.core()[0].index != i)
      fail(r, fmt::format("target {} must have the single core letter s{}^(+-1)", t.to_string(), i));
    const int eps = t.core()[0].sign;
    set_handle(r, out, mover, m.cocore(), eps > 0 ? m.core() * c.inverse() : m.core() * c);
    set_handle(r, out, target, c, BraidWord(n));
  } else {
    check_sign(r, sign);
    if (!t.core().empty()) fail(r, fmt::format("target {} must have core e", t.to_string()));
    set_handle(r, out, mover, m.cocore(), sign > 0 ? m.core() * c : m.core() * c.inverse());
    set_handle(r, out, target, c, gen(n, i, sign));
    p.sign = sign;
  }
  return {std::move(out), make_step(r, {mover, target}, p, inverse)};
}

Applied swap_crossing_handle(const HandleConfig& cfg, int j_idx, int k_idx, int x_idx) {
  const Rule r = Rule::SwapCrossingHandle;
  check_index(r, cfg, j_idx, "j handle");
  check_index(r, cfg, k_idx, "k handle");
  check_index(r, cfg, x_idx, "crossing handle");
  check_distinct(r, {j_idx, k_idx, x_idx});
  const int j = positive_label(at(cfg, j_idx));
  const int k = positive_label(at(cfg, k_idx));
  if (j == 0 || k == 0) fail(r, "companion handles must have cocores s_j and s_k");
  if (std::abs(j - k) <= 1) fail(r, fmt::format("labels {} and {} must satisfy |j-k| > 1", j, k));
  const Handle& x = at(cfg, x_idx);
  if (!x.has_cocore(j) || !x.core().is_single_letter() || x.core()[0].index != k)
    fail(r, fmt::format("handle {} must be h(s{}, s{}^(+-1))", x.to_string(), j, k));
  const int eps = x.core()[0].sign;
  HandleConfig out = cfg;
  set_handle(r, out, x_idx, gen(cfg.degree, k), gen(cfg.degree, j, -eps));
  return {std::move(out), make_step(r, {j_idx, k_idx, x_idx})};
}

Applied normalize_crossing(const HandleConfig& cfg, int x_idx) {
  const Rule r = Rule::NormalizeCrossing;
  check_index(r, cfg, x_idx, "crossing handle");
  if (cfg.degree < 4) fail(r, "requires degree N >= 4");
  const Handle& x = at(cfg, x_idx);
  const int j = positive_label(x);
  if (j == 0 || !x.core().is_single_letter())
    fail(r, fmt::format("handle {} must be h(s_j, s_k^(+-1))", x.to_string()));
  const int k = x.core()[0].index;
  const int eps = x.core()[0].sign;
  if (std::abs(j - k) <= 1) fail(r, fmt::format("labels {} and {} must satisfy |j-k| > 1", j, k));
  require_full_set(r, cfg, {x_idx});
  HandleConfig out = cfg;
  set_handle(r, out, x_idx, gen(cfg.degree, 1), gen(cfg.degree, 3, j < k ? eps : -eps));
  return {std::move(out), make_step(r, {x_idx})};
}

Applied move_handle(const HandleConfig& cfg, int idx, int new_pos) {
  const Rule r = Rule::MoveHandle;
  check_index(r, cfg, idx, "handle");
  check_index(r, cfg, new_pos, "new position");
  require_full_set(r, cfg, {idx});
  HandleConfig out = cfg;
  Handle h = out.handles[static_cast<std::size_t>(idx)];
  out.handles.erase(out.handles.begin() + idx);
  out.handles.insert(out.handles.begin() + new_pos, std::move(h));
  return {std::move(out), make_step(r, {idx, new_pos})};
}

Applied transfer_crossing(const HandleConfig& cfg, int j_idx, int letter_pos, int k_idx) {
  const Rule r = Rule::TransferCrossing;
  check_index(r, cfg, j_idx, "j handle");
  check_index(r, cfg, k_idx, "k handle");
  check_distinct(r, {j_idx, k_idx});
  const Handle& hj = at(cfg, j_idx);
  const int j = positive_label(hj);
  if (j == 0 || !hj.crossing_only())
    fail(r, fmt::format("handle {} must be crossing-only with cocore s_j", hj.to_string()));
  if (letter_pos < 0 || letter_pos >= static_cast<int>(hj.core().size()))
    fail(r, fmt::format("letter position {} out of range", letter_pos));
  const Letter l = hj.core()[static_cast<std::size_t>(letter_pos)];
  const int k = l.index;
  if (std::abs(j - k) <= 1) fail(r, fmt::format("labels {} and {} must satisfy |j-k| > 1", j, k));
  const Handle& hk = at(cfg, k_idx);
  if (!hk.has_cocore(k) || !hk.crossing_only())
    fail(r, fmt::format("handle {} must be crossing-only with cocore s{}", hk.to_string(), k));
  require_full_set(r, cfg, {j_idx}, j);
  HandleConfig out = cfg;
  set_handle(r, out, j_idx, hj.cocore(), hj.core().erase(static_cast<std::size_t>(letter_pos)));
  set_handle(r, out, k_idx, hk.cocore(), hk.core() * gen(cfg.degree, j, -l.sign));
  return {std::move(out), make_step(r, {j_idx, letter_pos, k_idx})};
}

Applied transfer_same_label(const HandleConfig& cfg, int j_idx, int letter_pos, int j2_idx) {
  const Rule r = Rule::TransferSameLabel;
  check_index(r, cfg, j_idx, "j handle");
  check_index(r, cfg, j2_idx, "receiving handle");
  check_distinct(r, {j_idx, j2_idx});
  const Handle& hj = at(cfg, j_idx);
  const Handle& h2 = at(cfg, j2_idx);
  const int j = positive_label(hj);
  if (j == 0 || !hj.crossing_only())
    fail(r, fmt::format("handle {} must be crossing-only with cocore s_j", hj.to_string()));
  if (!h2.has_cocore(j) || !h2.crossing_only())
    fail(r, fmt::format("receiving handle {} must be crossing-only with cocore s{}", h2.to_string(), j));
  if (letter_pos < 0 || letter_pos >= static_cast<int>(hj.core().size()))
    fail(r, fmt::format("letter position {} out of range", letter_pos));
  const Letter l = hj.core()[static_cast<std::size_t>(letter_pos)];
  if (std::abs(j - l.index) <= 1) fail(r, fmt::format("labels {} and {} must satisfy |j-k| > 1", j, l.index));
  require_full_set(r, cfg, {j_idx}, j);
  HandleConfig out = cfg;
  set_handle(r, out, j_idx, hj.cocore(), hj.core().erase(static_cast<std::size_t>(letter_pos)));
  set_handle(r, out, j2_idx, h2.cocore(), h2.core() * BraidWord(cfg.degree, {l}));
  return {std::move(out), make_step(r, {j_idx, letter_pos, j2_idx})};
}

Applied parity_step(const HandleConfig& cfg, int i_idx, int j_idx, int k_idx, int spare_idx) {
  const Rule r = Rule::ParityStep;
  check_index(r, cfg, i_idx, "i handle");
  check_index(r, cfg, j_idx, "j handle");
  check_index(r, cfg, k_idx, "k handle");
  check_index(r, cfg, spare_idx, "spare");
  check_distinct(r, {i_idx, j_idx, k_idx, spare_idx});
  const int i = positive_label(at(cfg, i_idx));
  const int j = positive_label(at(cfg, j_idx));
  const int k = positive_label(at(cfg, k_idx));
  if (i == 0 || j == 0 || k == 0) fail(r, "the i, j and k handles must have cocores s_i, s_j, s_k");
  if (std::abs(i - j) != 1 || std::abs(j - k) != 1 || std::abs(i - k) <= 1)
    fail(r, fmt::format("labels ({}, {}, {}) must satisfy |i-j| = |j-k| = 1 and |i-k| > 1", i, j, k));
  if (!at(cfg, spare_idx).is_spare())
    fail(r, fmt::format("spare {} must be h(e, e)", at(cfg, spare_idx).to_string()));
  const Handle& hi = at(cfg, i_idx);
  const Handle& hk = at(cfg, k_idx);
  HandleConfig out = cfg;
  set_handle(r, out, i_idx, hi.cocore(), hi.core() * gen(cfg.degree, k, -1));
  set_handle(r, out, k_idx, hk.cocore(), hk.core() * gen(cfg.degree, i, 1));
  return {std::move(out), make_step(r, {i_idx, j_idx, k_idx, spare_idx})};
}

Applied add_handles(const HandleConfig& cfg, const std::vector<Handle>& handles, Alphabet alphabet) {
  const Rule r = Rule::AddHandles;
  if (handles.empty()) fail(r, "no handles to add");
  for (const Handle& h : handles) {
    if (h.degree() != cfg.degree) fail(r, fmt::format("handle {} has the wrong degree", h.to_string()));
    if (h.is_spare()) continue;
    const int i = positive_label(h);
    if (i != 0 && h.core().empty()) continue;
    const bool crossing = i != 0 && h.core().is_single_letter() && std::abs(h.core()[0].index - i) > 1;
    if (crossing && alphabet == Alphabet::Extended) continue;
    fail(r, fmt::format("handle {} is outside the {} alphabet", h.to_string(), to_string(alphabet)));
  }
  HandleConfig out = cfg;
  out.handles.insert(out.handles.end(), handles.begin(), handles.end());
  StepParams p;
  p.alphabet = alphabet;
  p.handles = handles;
  return {std::move(out), make_step(r, {}, p)};
}

Applied permute_handles(const HandleConfig& cfg, const std::vector<int>& perm) {
  const Rule r = Rule::PermuteHandles;
  const std::size_t n = cfg.handles.size();
  if (perm.size() != n) fail(r, fmt::format("permutation has {} entries, configuration has {} handles", perm.size(), n));
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      fail(r, "operands are not a permutation of the handle indices");
    seen[static_cast<std::size_t>(v)] = true;
  }
  HandleConfig out = cfg;
  for (std::size_t t = 0; t < n; ++t) out.handles[t] = cfg.handles[static_cast<std::size_t>(perm[t])];
  return {std::move(out), make_step(r, perm)};
}

HandleConfig apply_step(const HandleConfig& cfg, const RewriteStep& step) {
  const Rule r = step.rule;
  const auto& o = step.operands;
  const auto& p = step.params;
  auto arity = [&](std::size_t k) {
    if (o.size() != k) fail(r, fmt::format("expects {} operands, got {}", k, o.size()));
  };
  if (step.inverse && r != Rule::EliminateLoop && r != Rule::SlideCollect)
    fail(r, "this rule has no inverse form");

  Applied a;
  switch (r) {
    case Rule::ReverseHandle: arity(1); a = reverse_handle(cfg, o[0]); break;
    case Rule::AbsorbLoop: arity(2); a = absorb_loop(cfg, o[0], o[1], p.sign); break;
    case Rule::EliminateLoop:
      arity(2);
      if (!p.site) fail(r, "missing site parameter");
      a = eliminate_loop(cfg, o[0], o[1], *p.site, p.position.value_or(0), step.inverse, p.sign);
      break;
    case Rule::SlideCollect:
      arity(2);
      if (!p.mode) fail(r, "missing mode parameter");
      a = slide_collect(cfg, o[0], o[1], *p.mode, step.inverse, p.sign);
      break;
    case Rule::SwapCrossingHandle: arity(3); a = swap_crossing_handle(cfg, o[0], o[1], o[2]); break;
    case Rule::NormalizeCrossing: arity(1); a = normalize_crossing(cfg, o[0]); break;
    case Rule::MoveHandle: arity(2); a = move_handle(cfg, o[0], o[1]); break;
    case Rule::TransferCrossing: arity(3); a = transfer_crossing(cfg, o[0], o[1], o[2]); break;
    case Rule::TransferSameLabel: arity(3); a = transfer_same_label(cfg, o[0], o[1], o[2]); break;
    case Rule::ParityStep: arity(4); a = parity_step(cfg, o[0], o[1], o[2], o[3]); break;
    case Rule::AddHandles:
      arity(0);
      if (!p.alphabet) fail(r, "missing alphabet parameter");
      a = add_handles(cfg, p.handles, *p.alphabet);
      break;
    case Rule::PermuteHandles: a = permute_handles(cfg, o); break;
  }
  // A recorded step must carry exactly the parameters its rule consumes.
  if (!(a.step == step)) fail(r, "step carries parameters this rule does not use");
  return std::move(a.config);
}

MacroResult parity_shift(const HandleConfig& cfg, int one, int two, int three, int spare, bool down) {
  MacroResult m;
  Applied a = down ? parity_step(cfg, one, two, three, spare) : parity_step(cfg, three, two, one, spare);
  m.steps.push_back(a.step);
  Applied b = slide_collect(a.config, one, three, SlideMode::Cocore);
  m.steps.push_back(b.step);
  m.config = std::move(b.config);
  return m;
}

TraceVerdict verify_trace(const RewriteTrace& trace) {
  TraceVerdict v;
  HandleConfig cur = trace.initial;
  try {
    cur.validate();
  } catch (const Error& e) {
    v.reason = fmt::format("initial configuration invalid: {}", e.what());
    return v;
  }
  long added = 0;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const RewriteStep& step = trace.steps[k];
    try {
      cur = apply_step(cur, step);
      cur.validate();
    } catch (const Error& e) {
      v.failed_step = k;
      v.rule = std::string(rule_name(step.rule));
      v.reason = e.what();
      return v;
    }
    if (step.rule == Rule::AddHandles) added += static_cast<long>(step.params.handles.size());
  }
  if (!(cur == trace.final_config)) {
    v.reason = "replayed configuration differs from the recorded final configuration";
    return v;
  }
  if (added != trace.handles_added) {
    v.reason = fmt::format("trace records {} added handles but its steps add {}", trace.handles_added, added);
    return v;
  }
  v.accepted = true;
  return v;
}

}  // namespace hcalc
