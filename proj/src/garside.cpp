#include "handlecalc/garside.hpp"

#include <algorithm>
#include <numeric>

namespace hcalc {

SimpleBraid::SimpleBraid(int degree) : arrangement_(static_cast<std::size_t>(degree)) {
  std::iota(arrangement_.begin(), arrangement_.end(), 0);
}

SimpleBraid SimpleBraid::delta(int degree) {
  SimpleBraid d(degree);
  std::reverse(d.arrangement_.begin(), d.arrangement_.end());
  return d;
}

SimpleBraid SimpleBraid::delta_without(int degree, int i) {
  SimpleBraid d = delta(degree);
  std::swap(d.arrangement_[i - 1], d.arrangement_[i]);
  return d;
}

bool SimpleBraid::is_identity() const {
  for (std::size_t p = 0; p < arrangement_.size(); ++p)
    if (arrangement_[p] != static_cast<int>(p)) return false;
  return true;
}

bool SimpleBraid::is_delta() const {
  const int n = degree();
  for (int p = 0; p < n; ++p)
    if (arrangement_[p] != n - 1 - p) return false;
  return true;
}

bool SimpleBraid::starts_with(int i) const {
  // sigma_i is a left divisor iff strand i-1 ends up to the right of strand i.
  auto pos_lo = std::find(arrangement_.begin(), arrangement_.end(), i - 1);
  auto pos_hi = std::find(arrangement_.begin(), arrangement_.end(), i);
  return pos_lo > pos_hi;
}

void SimpleBraid::append(int i) { std::swap(arrangement_[i - 1], arrangement_[i]); }

void SimpleBraid::drop_prefix(int i) {
  for (int& v : arrangement_) {
    if (v == i - 1)
      v = i;
    else if (v == i)
      v = i - 1;
  }
}

SimpleBraid SimpleBraid::flipped() const {
  const int n = degree();
  SimpleBraid out(n);
  for (int p = 0; p < n; ++p) out.arrangement_[p] = n - 1 - arrangement_[n - 1 - p];
  return out;
}

namespace {

// Moves letters from `right` into `left` until the pair is left-weighted.
bool left_weight(SimpleBraid& left, SimpleBraid& right) {
  bool changed = false;
  const int n = left.degree();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (right.starts_with(i) && left.can_append(i)) {
        left.append(i);
        right.drop_prefix(i);
        moved = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

LeftNormalForm left_normal_form(const BraidWord& w) {
  const int n = w.degree();
  LeftNormalForm nf;
  nf.degree = n;
  if (n < 2) return nf;

  // w = Delta^{-m} * P_1 ... P_r where each negative letter s_i^-1 becomes
  // Delta^-1 * (Delta s_i^-1) and every earlier factor is conjugated by Delta
  // once per negative letter that follows it.
  const auto& letters = w.letters();
  std::vector<int> negatives_after(letters.size() + 1, 0);
  for (std::size_t t = letters.size(); t-- > 0;)
    negatives_after[t] = negatives_after[t + 1] + (letters[t].sign < 0 ? 1 : 0);

  std::vector<SimpleBraid> factors;
  factors.reserve(letters.size());
  for (std::size_t t = 0; t < letters.size(); ++t) {
    SimpleBraid f(n);
    if (letters[t].sign > 0)
      f.append(letters[t].index);
    else
      f = SimpleBraid::delta_without(n, letters[t].index);
    if (negatives_after[t + 1] % 2 == 1) f = f.flipped();
    factors.push_back(std::move(f));
  }
  nf.delta_power = -static_cast<long>(negatives_after[0]);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < factors.size(); ++t)
      changed = left_weight(factors[t], factors[t + 1]) || changed;
  }

  std::size_t leading_deltas = 0;
  while (leading_deltas < factors.size() && factors[leading_deltas].is_delta()) ++leading_deltas;
  nf.delta_power += static_cast<long>(leading_deltas);
  for (std::size_t t = leading_deltas; t < factors.size(); ++t)
    if (!factors[t].is_identity()) nf.factors.push_back(factors[t]);
  return nf;
}

}  // namespace hcalc
