#pragma once

#include <vector>

#include "handlecalc/braid.hpp"

namespace hcalc {

// A simple (permutation) braid, stored as the positions -> strand array
// obtained by applying its positive letters to the identity arrangement.
// Strands and positions are 0-based here.
class SimpleBraid {
 public:
  explicit SimpleBraid(int degree);
  static SimpleBraid delta(int degree);

  int degree() const { return static_cast<int>(arrangement_.size()); }
  const std::vector<int>& arrangement() const { return arrangement_; }
  bool is_identity() const;
  bool is_delta() const;

  // sigma_i (1-based) can be appended while staying simple.
  bool can_append(int i) const { return arrangement_[i - 1] < arrangement_[i]; }
  // sigma_i (1-based) is a left divisor.
  bool starts_with(int i) const;
  void append(int i);
  // Remove the left divisor sigma_i; requires starts_with(i).
  void drop_prefix(int i);
  // Conjugation by the half twist: sigma_i -> sigma_{N-i}.
  SimpleBraid flipped() const;
  // delta * sigma_i^-1, the complement used to rewrite negative letters.
  static SimpleBraid delta_without(int degree, int i);

  friend bool operator==(const SimpleBraid&, const SimpleBraid&) = default;

 private:
  std::vector<int> arrangement_;
};

// Delta^power * factors[0] * ... * factors[r-1], left-weighted, with no
// delta or identity among the factors.
struct LeftNormalForm {
  int degree = 1;
  long delta_power = 0;
  std::vector<SimpleBraid> factors;

  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  friend bool operator==(const LeftNormalForm&, const LeftNormalForm&) = default;
};

LeftNormalForm left_normal_form(const BraidWord& w);

}  // namespace hcalc
