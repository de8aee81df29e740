#include "handlecalc/config.hpp"

#include <fmt/format.h>

#include <cstdlib>

namespace hcalc {

Handle::Handle(BraidWord cocore, BraidWord core) : cocore_(std::move(cocore)), core_(std::move(core)) {
  if (cocore_.degree() != core_.degree())
    throw InvariantError(fmt::format("handle words have different degrees ({} vs {})",
                                     cocore_.degree(), core_.degree()));
  if (!commutes(cocore_, core_))
    throw InvariantError(fmt::format("handle h({}, {}) is not well defined: cocore and core do not commute",
                                     cocore_.to_string(), core_.to_string()));
}

Handle Handle::empty(int degree) { return Handle(BraidWord(degree), BraidWord(degree)); }

Handle Handle::loop(int degree, int label, int sign) {
  return Handle(BraidWord::generator(degree, label, sign), BraidWord(degree));
}

Handle Handle::crossing(int degree, int label, int other, int sign) {
  return Handle(BraidWord::generator(degree, label), BraidWord::generator(degree, other, sign));
}

std::optional<int> Handle::cocore_label() const {
  if (!cocore_.is_single_letter()) return std::nullopt;
  return cocore_[0].index;
}

bool Handle::has_cocore(int label) const {
  return cocore_.is_single_letter() && cocore_[0] == Letter{label, 1};
}

bool Handle::crossing_only() const {
  if (cocore_.empty()) return true;
  auto label = cocore_label();
  if (!label) return false;
  for (const Letter& l : core_.letters())
    if (std::abs(l.index - *label) <= 1) return false;
  return true;
}

std::string Handle::to_string() const {
  return fmt::format("h({}, {})", cocore_.to_string(), core_.to_string());
}

void HandleConfig::validate() const {
  if (degree < 1) throw InvariantError(fmt::format("degree must be >= 1, got {}", degree));
  for (std::size_t i = 0; i < handles.size(); ++i)
    if (handles[i].degree() != degree)
      throw InvariantError(fmt::format("handle {} has degree {}, configuration has degree {}", i,
                                       handles[i].degree(), degree));
  for (const auto& [label, count] : free_edges) {
    if (label < 1 || label > degree - 1)
      throw InvariantError(fmt::format("free edge label {} out of range 1..{}", label, degree - 1));
    if (count <= 0) throw InvariantError(fmt::format("free edge count for label {} must be positive", label));
  }
}

bool HandleConfig::all_crossing_only() const {
  for (const Handle& h : handles)
    if (!h.crossing_only()) return false;
  return true;
}

std::string HandleConfig::to_string() const {
  std::string out;
  for (const auto& [label, count] : free_edges) out += fmt::format("{}x free({}) + ", count, label);
  if (handles.empty()) return out.empty() ? "(no handles)" : out.substr(0, out.size() - 3);
  for (std::size_t i = 0; i < handles.size(); ++i) {
    if (i) out += " + ";
    out += handles[i].to_string();
  }
  return out;
}

}  // namespace hcalc
