#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "handlecalc/braid.hpp"

namespace hcalc {

// A 1-handle h(a, b): the cocore reads `cocore`, the orientation-reversed
// core loop reads `core`. The two words always commute.
class Handle {
 public:
  // Throws InvariantError when the words do not commute or degrees differ.
  Handle(BraidWord cocore, BraidWord core);

  static Handle empty(int degree);                       // h(e, e)
  static Handle loop(int degree, int label, int sign = 1);  // h(s_label^sign, e)
  static Handle crossing(int degree, int label, int other, int sign);  // h(s_label, s_other^sign)

  const BraidWord& cocore() const { return cocore_; }
  const BraidWord& core() const { return core_; }
  int degree() const { return cocore_.degree(); }

  bool is_spare() const { return cocore_.empty() && core_.empty(); }
  // Label i when the cocore is the single letter s_i^{+-1}.
  std::optional<int> cocore_label() const;
  // True when the cocore is exactly s_label (positive).
  bool has_cocore(int label) const;
  // Cocore is e, or a single letter s_i^{+-1} with every core letter k satisfying |k-i| > 1.
  bool crossing_only() const;

  std::string to_string() const;  // "h(s1, s3^-1)"

  friend bool operator==(const Handle&, const Handle&) = default;

 private:
  BraidWord cocore_;
  BraidWord core_;
};

// Free edges (the chart Gamma_0) plus an ordered sequence of handles attached
// to one disk.
struct HandleConfig {
  int degree = 1;
  std::vector<Handle> handles;
  std::map<int, int> free_edges;  // label -> count, zero counts are not stored

  // Throws InvariantError on degree mismatches or bad free-edge labels.
  void validate() const;
  bool all_crossing_only() const;
  std::string to_string() const;

  friend bool operator==(const HandleConfig&, const HandleConfig&) = default;
};

}  // namespace hcalc
