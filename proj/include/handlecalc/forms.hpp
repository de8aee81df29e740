#pragma once

#include <optional>

#include "handlecalc/config.hpp"

namespace hcalc {

// Recognizers for the normal forms. They inspect the final configuration
// only and share no code with the strategies that produce it. Handle order
// is ignored.

// Every handle is h(e,e), h(s_i, e) or h(s_i, s_j^(+-1)) with |i-j| > 1.
bool is_weak_simplified(const HandleConfig& cfg);
// As above, and h(s_i, e) is present for every label i.
bool is_weak_simplified_fixed_disk(const HandleConfig& cfg);
// Every handle is h(e,e) or h(s_i, e).
bool is_simplified(const HandleConfig& cfg);
// h(s1, s3^E) + sum_{i>=2} h(s_i, e) + n h(e,e) with n >= 1; returns E.
// For N <= 3 the s1-handle is h(s1, e) and E = 0.
std::optional<int> strong_form_exponent(const HandleConfig& cfg);
// Strong form with exponent 0 (even crossing count) or 1 (odd).
std::optional<int> parity_form_exponent(const HandleConfig& cfg);
// Full set h(s_i, e), copies of h(s1, s3^epsilon) and copies of h(e,e).
bool is_epsilon_uniform(const HandleConfig& cfg, int epsilon);

}  // namespace hcalc
