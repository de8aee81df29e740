#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "handlecalc/error.hpp"

namespace hcalc {

// One Artin generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Element of S_N in one-line notation over {1..N}.
class Permutation {
 public:
  explicit Permutation(int degree);
  Permutation(int degree, std::vector<int> image);

  int degree() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  // Right-multiply by the transposition (i i+1).
  void apply_transposition(int i);
  std::string to_string() const;  // cycle notation, "id" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// A freely reduced word in the Artin generators of B_N. Immutable after
// construction; every constructor reduces its input.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree);
  BraidWord(int degree, std::span<const Letter> letters);
  BraidWord(int degree, std::initializer_list<Letter> letters);

  // Parses the word grammar: "e" | LETTER (SP LETTER)*, LETTER = s<i>[^[-]<k>].
  static BraidWord parse(std::string_view text, int degree);
  static BraidWord generator(int degree, int index, int sign = 1);

  int degree() const { return degree_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  BraidWord inverse() const;
  // Word with the letter at `pos` removed (then re-reduced).
  BraidWord erase(std::size_t pos) const;
  // Word with `l` inserted before position `pos` (then re-reduced).
  BraidWord insert(std::size_t pos, Letter l) const;
  int exponent_sum() const;
  // If the word is a single letter, returns it.
  bool is_single_letter() const { return letters_.size() == 1; }

  // Display form with power grouping, e.g. "s1^2 s3^-1"; "e" when empty.
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_and_reduce();

  int degree_ = 1;
  std::vector<Letter> letters_;
};

// Free functions mirroring the operation names used across the project.
BraidWord make_word(std::string_view text, int degree);
BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
Permutation underlying_permutation(const BraidWord& w);

// Exact decision procedure for the word problem (Garside left normal form).
bool is_trivial(const BraidWord& w);
// True iff a*b*a^-1*b^-1 is trivial.
bool commutes(const BraidWord& a, const BraidWord& b);
// True iff a and b represent the same braid.
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Reduces an arbitrary letter sequence by cancelling adjacent inverse pairs.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

}  // namespace hcalc
