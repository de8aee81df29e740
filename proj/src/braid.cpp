#include "handlecalc/braid.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <numeric>

#include "handlecalc/garside.hpp"

namespace hcalc {

namespace {

// Upper bound on the number of letters a parsed word may expand to.
constexpr long kMaxParsedLetters = 1'000'000;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

long parse_positive(std::string_view digits, std::string_view token) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(fmt::format("malformed token '{}'", token));
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError(fmt::format("malformed token '{}'", token));
  if (value == 0) throw ParseError(fmt::format("zero is not allowed in token '{}'", token));
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int degree) : image_(static_cast<std::size_t>(degree)) {
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(int degree, std::vector<int> image) : image_(std::move(image)) {
  if (static_cast<int>(image_.size()) != degree)
    throw Error("permutation image has wrong length");
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > degree || seen[v]) throw Error("permutation image is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p)
    if (image_[p] != static_cast<int>(p) + 1) return false;
  return true;
}

void Permutation::apply_transposition(int i) { std::swap(image_[i - 1], image_[i]); }

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(image_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start] || image_[start - 1] == start) continue;
    out += "(";
    int p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += " ";
      out += std::to_string(p);
      first = false;
      p = image_[p - 1];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------
// BraidWord

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

BraidWord::BraidWord(int degree) : degree_(degree) {
  if (degree < 1) throw Error(fmt::format("braid degree must be >= 1, got {}", degree));
}

BraidWord::BraidWord(int degree, std::span<const Letter> letters)
    : degree_(degree), letters_(letters.begin(), letters.end()) {
  check_and_reduce();
}

BraidWord::BraidWord(int degree, std::initializer_list<Letter> letters)
    : degree_(degree), letters_(letters) {
  check_and_reduce();
}

void BraidWord::check_and_reduce() {
  if (degree_ < 1) throw Error(fmt::format("braid degree must be >= 1, got {}", degree_));
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index > degree_ - 1)
      throw Error(fmt::format("generator index {} out of range 1..{}", l.index, degree_ - 1));
    if (l.sign != 1 && l.sign != -1) throw Error(fmt::format("letter sign must be +1 or -1"));
  }
  letters_ = free_reduce(letters_);
}

BraidWord BraidWord::generator(int degree, int index, int sign) {
  return BraidWord(degree, {Letter{index, sign}});
}

BraidWord BraidWord::parse(std::string_view text, int degree) {
  if (degree < 1) throw ParseError(fmt::format("braid degree must be >= 1, got {}", degree));
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.empty()) throw ParseError("empty word (use \"e\" for the identity)");
  if (tokens.size() == 1 && tokens[0] == "e") return BraidWord(degree);

  std::vector<Letter> letters;
  for (std::string_view tok : tokens) {
    if (tok == "e") throw ParseError("\"e\" must stand alone");
    if (tok.size() < 2 || tok[0] != 's') throw ParseError(fmt::format("malformed token '{}'", tok));
    std::string_view rest = tok.substr(1);
    std::size_t caret = rest.find('^');
    long index = parse_positive(rest.substr(0, caret), tok);
    long power = 1;
    if (caret != std::string_view::npos) {
      std::string_view exp = rest.substr(caret + 1);
      bool negative = !exp.empty() && exp[0] == '-';
      power = parse_positive(negative ? exp.substr(1) : exp, tok);
      if (negative) power = -power;
    }
    if (index > degree - 1)
      throw ParseError(fmt::format("generator index {} out of range 1..{} in '{}'", index,
                                   degree - 1, tok));
    if (static_cast<long>(letters.size()) + std::abs(power) > kMaxParsedLetters)
      throw ParseError(fmt::format("word expands to more than {} letters", kMaxParsedLetters));
    Letter l{static_cast<int>(index), power > 0 ? 1 : -1};
    for (long k = 0; k < std::abs(power); ++k) letters.push_back(l);
  }
  return BraidWord(degree, letters);
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(degree_, out);
}

BraidWord BraidWord::erase(std::size_t pos) const {
  if (pos >= letters_.size()) throw Error("letter position out of range");
  std::vector<Letter> out = letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return BraidWord(degree_, out);
}

BraidWord BraidWord::insert(std::size_t pos, Letter l) const {
  if (pos > letters_.size()) throw Error("letter position out of range");
  std::vector<Letter> out = letters_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), l);
  return BraidWord(degree_, out);
}

int BraidWord::exponent_sum() const {
  int sum = 0;
  for (const Letter& l : letters_) sum += l.sign;
  return sum;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long power = static_cast<long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += fmt::format("s{}", letters_[i].index);
    if (power != 1) out += fmt::format("^{}", power);
    i = j;
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.degree_ != b.degree_)
    throw DegreeMismatch(fmt::format("degree mismatch: {} vs {}", a.degree_, b.degree_));
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.degree_, joined);
}

// ---------------------------------------------------------------------------
// Free functions

BraidWord make_word(std::string_view text, int degree) { return BraidWord::parse(text, degree); }

BraidWord invert(const BraidWord& w) { return w.inverse(); }

BraidWord concat(const BraidWord& a, const BraidWord& b) { return a * b; }

Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.degree());
  for (const Letter& l : w.letters()) p.apply_transposition(l.index);
  return p;
}

bool is_trivial(const BraidWord& w) {
  if (w.empty()) return true;
  if (w.exponent_sum() != 0) return false;
  if (!underlying_permutation(w).is_identity()) return false;
  return left_normal_form(w).is_identity();
}

bool commutes(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(fmt::format("degree mismatch: {} vs {}", a.degree(), b.degree()));
  if (a.empty() || b.empty() || a == b) return true;
  // Letters pairwise far apart commute by the defining relations.
  bool far = true;
  for (const Letter& x : a.letters()) {
    for (const Letter& y : b.letters()) {
      if (std::abs(x.index - y.index) <= 1) {
        far = false;
        break;
      }
    }
    if (!far) break;
  }
  if (far) return true;
  return is_trivial(a * b * a.inverse() * b.inverse());
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a == b) return true;
  return is_trivial(a * b.inverse());
}

}  // namespace hcalc
