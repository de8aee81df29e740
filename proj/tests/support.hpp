#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "handlecalc/chart.hpp"
#include "handlecalc/rewrite.hpp"

namespace hcalc::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive

// Random freely reduced word of length exactly `len` (when N >= 2).
BraidWord random_word(Rng& rng, int degree, int len);

// The defining relators of B_N: braid relators s_i s_{i+1} s_i s_{i+1}^-1
// s_i^-1 s_{i+1}^-1 and far-commutation relators s_i s_j s_i^-1 s_j^-1.
std::vector<std::vector<Letter>> defining_relators(int degree);

// Inserts `count` random relators (or their inverses, or x x^-1) at random
// positions, then reduces.
BraidWord pad_with_relators(Rng& rng, const BraidWord& w, int count);

// Every freely reduced trivial word of length <= max_len reachable from e by
// inserting cyclic rotations of relators (and their inverses) while never
// exceeding max_len letters. Words are encoded as strings.
std::set<std::string> bfs_trivial_words(int degree, int max_len);
std::string encode(const BraidWord& w);

// All freely reduced words of length <= len.
std::vector<BraidWord> all_reduced_words(int degree, int len);

// Random crossing-only handle: cocore e or s_i^(+-1), core letters far
// from the cocore label.
Handle random_crossing_only_handle(Rng& rng, int degree, int max_core);
HandleConfig random_crossing_only_config(Rng& rng, int degree, int max_handles, int max_core);

// Random admissible census: black edges in out/in pairs joined by white
// paths, extra white pairs, random crossings and loops.
ChartStats random_valid_census(Rng& rng, int max_degree, long max_w, long max_b, long max_c);

// Picks a random rule with random operands that applies to `cfg`. Returns
// false when no attempt succeeded.
bool random_applicable_step(Rng& rng, const HandleConfig& cfg, Applied& out, int attempts = 200);

long census_s(const HandleConfig& cfg);
long census_c(const HandleConfig& cfg);

}  // namespace hcalc::testing
