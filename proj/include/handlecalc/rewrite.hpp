#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "handlecalc/config.hpp"

namespace hcalc {

enum class Rule {
  ReverseHandle,
  AbsorbLoop,
  EliminateLoop,
  SlideCollect,
  SwapCrossingHandle,
  NormalizeCrossing,
  MoveHandle,
  TransferCrossing,
  TransferSameLabel,
  ParityStep,
  AddHandles,
  PermuteHandles,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
const std::vector<Rule>& all_rules();

// eliminate_loop: the loop is a whole handle h(s_i, e), or one core letter of
// a handle with empty cocore.
enum class LoopSite { Handle, Letter };
// slide_collect: the target shares the mover's cocore (Core), or has the
// mover's label as its single core letter (Cocore).
enum class SlideMode { Core, Cocore };
// add_handles: Weak allows h(s_i, e) and h(e, e); Extended also allows
// h(s_i, s_j^{+-1}) with |i-j| > 1.
enum class Alphabet { Weak, Extended };

std::string_view to_string(LoopSite s);
std::string_view to_string(SlideMode m);
std::string_view to_string(Alphabet a);

struct StepParams {
  int sign = 0;  // 0 when the rule takes no sign
  std::optional<LoopSite> site;
  std::optional<SlideMode> mode;
  std::optional<int> position;
  std::optional<Alphabet> alphabet;
  std::vector<Handle> handles;

  friend bool operator==(const StepParams&, const StepParams&) = default;
};

struct RewriteStep {
  Rule rule = Rule::PermuteHandles;
  std::vector<int> operands;
  StepParams params;
  bool inverse = false;

  std::string to_string() const;
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct Applied {
  HandleConfig config;
  RewriteStep step;
};

// One function per rule. Each checks its hypotheses and throws
// PreconditionError naming the rule when they fail.
Applied reverse_handle(const HandleConfig& cfg, int idx);
Applied absorb_loop(const HandleConfig& cfg, int helper, int target, int sign);
// For the inverse letter form, `position` is where the letter is inserted
// and `sign` its exponent.
Applied eliminate_loop(const HandleConfig& cfg, int helper, int target, LoopSite site, int position = 0,
                       bool inverse = false, int sign = 0);
// `sign` is the exponent of the re-created core letter for the inverse
// cocore form.
Applied slide_collect(const HandleConfig& cfg, int mover, int target, SlideMode mode, bool inverse = false,
                      int sign = 0);
Applied swap_crossing_handle(const HandleConfig& cfg, int j_idx, int k_idx, int x_idx);
Applied normalize_crossing(const HandleConfig& cfg, int x_idx);
Applied move_handle(const HandleConfig& cfg, int idx, int new_pos);
Applied transfer_crossing(const HandleConfig& cfg, int j_idx, int letter_pos, int k_idx);
Applied transfer_same_label(const HandleConfig& cfg, int j_idx, int letter_pos, int j2_idx);
Applied parity_step(const HandleConfig& cfg, int i_idx, int j_idx, int k_idx, int spare_idx);
Applied add_handles(const HandleConfig& cfg, const std::vector<Handle>& handles, Alphabet alphabet);
Applied permute_handles(const HandleConfig& cfg, const std::vector<int>& perm);

// Re-applies a recorded step.
HandleConfig apply_step(const HandleConfig& cfg, const RewriteStep& step);

// Shifts the s3-exponent on the handle `one` (cocore s1) by -2 (down) or +2
// (up) using parity_step followed by slide_collect in cocore mode. Handles
// `two` and `three` have cocores s2 and s3 and empty cores; `spare` is h(e,e).
struct MacroResult {
  HandleConfig config;
  std::vector<RewriteStep> steps;
};
MacroResult parity_shift(const HandleConfig& cfg, int one, int two, int three, int spare, bool down);

// True when every label 1..N-1 except `skip_label` is the exact cocore of
// some handle whose index is not in `skip`.
bool has_full_set(const HandleConfig& cfg, const std::vector<int>& skip = {}, int skip_label = 0);

struct RewriteTrace {
  HandleConfig initial;
  std::vector<RewriteStep> steps;
  HandleConfig final_config;
  long handles_added = 0;

  friend bool operator==(const RewriteTrace&, const RewriteTrace&) = default;
};

struct TraceVerdict {
  bool accepted = false;
  std::optional<std::size_t> failed_step;  // unset for a final-state or count mismatch
  std::string rule;
  std::string reason;
};

TraceVerdict verify_trace(const RewriteTrace& trace);

}  // namespace hcalc
