#include "handlecalc/forms.hpp"

#include <cstdlib>
#include <vector>

namespace hcalc {

namespace {

enum class Shape { Spare, Loop, Crossing, Other };

struct Classified {
  Shape shape = Shape::Other;
  int label = 0;
  int other = 0;
  int sign = 0;
};

Classified classify(const Handle& h) {
  Classified c;
  if (h.cocore().empty()) {
    if (h.core().empty()) c.shape = Shape::Spare;
    return c;
  }
  if (h.cocore().size() != 1 || h.cocore()[0].sign != 1) return c;
  c.label = h.cocore()[0].index;
  if (h.core().empty()) {
    c.shape = Shape::Loop;
  } else if (h.core().size() == 1 && std::abs(h.core()[0].index - c.label) > 1) {
    c.shape = Shape::Crossing;
    c.other = h.core()[0].index;
    c.sign = h.core()[0].sign;
  }
  return c;
}

std::vector<int> loop_counts(const HandleConfig& cfg) {
  std::vector<int> counts(static_cast<std::size_t>(cfg.degree), 0);
  for (const Handle& h : cfg.handles) {
    Classified c = classify(h);
    if (c.shape == Shape::Loop) ++counts[static_cast<std::size_t>(c.label)];
  }
  return counts;
}

}  // namespace

bool is_weak_simplified(const HandleConfig& cfg) {
  for (const Handle& h : cfg.handles)
    if (classify(h).shape == Shape::Other) return false;
  return true;
}

bool is_weak_simplified_fixed_disk(const HandleConfig& cfg) {
  if (!is_weak_simplified(cfg)) return false;
  auto counts = loop_counts(cfg);
  for (int i = 1; i < cfg.degree; ++i)
    if (counts[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

bool is_simplified(const HandleConfig& cfg) {
  for (const Handle& h : cfg.handles) {
    Shape s = classify(h).shape;
    if (s != Shape::Spare && s != Shape::Loop) return false;
  }
  return true;
}

std::optional<int> strong_form_exponent(const HandleConfig& cfg) {
  const int n = cfg.degree;
  int spares = 0;
  std::vector<int> loops(static_cast<std::size_t>(n), 0);
  int s1_handles = 0;
  int exponent = 0;
  for (const Handle& h : cfg.handles) {
    if (h.is_spare()) {
      ++spares;
      continue;
    }
    if (h.cocore().size() != 1 || h.cocore()[0].sign != 1) return std::nullopt;
    const int label = h.cocore()[0].index;
    if (label == 1 && n >= 4) {
      // Core must be a power of s3.
      for (const Letter& l : h.core().letters())
        if (l.index != 3) return std::nullopt;
      exponent = h.core().exponent_sum();
      ++s1_handles;
      continue;
    }
    if (!h.core().empty()) return std::nullopt;
    ++loops[static_cast<std::size_t>(label)];
  }
  if (spares < 1) return std::nullopt;
  for (int i = (n >= 4 ? 2 : 1); i < n; ++i)
    if (loops[static_cast<std::size_t>(i)] != 1) return std::nullopt;
  if (n >= 4 && s1_handles != 1) return std::nullopt;
  return exponent;
}

std::optional<int> parity_form_exponent(const HandleConfig& cfg) {
  auto e = strong_form_exponent(cfg);
  if (!e || (*e != 0 && *e != 1)) return std::nullopt;
  return e;
}

bool is_epsilon_uniform(const HandleConfig& cfg, int epsilon) {
  std::vector<int> loops(static_cast<std::size_t>(cfg.degree), 0);
  for (const Handle& h : cfg.handles) {
    Classified c = classify(h);
    switch (c.shape) {
      case Shape::Spare: break;
      case Shape::Loop: ++loops[static_cast<std::size_t>(c.label)]; break;
      case Shape::Crossing:
        if (c.label != 1 || c.other != 3 || c.sign != epsilon) return false;
        break;
      case Shape::Other: return false;
    }
  }
  for (int i = 1; i < cfg.degree; ++i)
    if (loops[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

}  // namespace hcalc
