#include "handlecalc/chart.hpp"

#include <fmt/format.h>

#include <cstdlib>

namespace hcalc {

std::string to_string(EdgeDir d) { return d == EdgeDir::In ? "in" : "out"; }

int crossing_sign(int i, int j) { return i < j ? 1 : -1; }

namespace {

bool label_ok(int label, int degree) { return label >= 1 && label <= degree - 1; }

long count_of(const std::map<std::pair<int, EdgeDir>, long>& m, int label, EdgeDir d) {
  auto it = m.find({label, d});
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::vector<Violation> range_violations(const ChartStats& ch) {
  std::vector<Violation> out;
  const int n = ch.degree;
  if (n < 1) out.push_back({"degree", fmt::format("degree must be >= 1, got {}", n)});
  if (ch.black < 0) out.push_back({"count", "black count is negative"});
  for (const auto& [key, count] : ch.black_edge_labels) {
    if (!label_ok(key.first, n))
      out.push_back({"label_range", fmt::format("black edge label {} outside 1..{}", key.first, n - 1)});
    if (count < 0) out.push_back({"count", fmt::format("negative black edge count for label {}", key.first)});
  }
  for (const auto& [key, count] : ch.white) {
    auto [i, j] = key;
    if (!label_ok(i, n) || !label_ok(j, n))
      out.push_back({"label_range", fmt::format("white vertex w_{{{},{}}} has a label outside 1..{}", i, j, n - 1)});
    else if (std::abs(i - j) != 1)
      out.push_back({"white_type", fmt::format("white vertex w_{{{},{}}} needs |i-j| = 1", i, j)});
    if (count < 0) out.push_back({"count", fmt::format("negative count for w_{{{},{}}}", i, j)});
  }
  for (const auto& [key, count] : ch.crossings) {
    auto [i, j] = key;
    if (!label_ok(i, n) || !label_ok(j, n))
      out.push_back({"label_range", fmt::format("crossing c_{{{},{}}} has a label outside 1..{}", i, j, n - 1)});
    else if (std::abs(i - j) <= 1)
      out.push_back({"crossing_type", fmt::format("crossing c_{{{},{}}} needs |i-j| > 1", i, j)});
    if (count < 0) out.push_back({"count", fmt::format("negative count for c_{{{},{}}}", i, j)});
  }
  for (const auto& [label, count] : ch.free_edges) {
    if (!label_ok(label, n))
      out.push_back({"label_range", fmt::format("free edge label {} outside 1..{}", label, n - 1)});
    if (count < 0) out.push_back({"count", fmt::format("negative free edge count for label {}", label)});
  }
  for (const auto& [label, count] : ch.loops) {
    if (!label_ok(label, n))
      out.push_back({"label_range", fmt::format("loop label {} outside 1..{}", label, n - 1)});
    if (count < 0) out.push_back({"count", fmt::format("negative loop count for label {}", label)});
  }
  return out;
}

std::vector<Violation> validate_chart(const ChartStats& ch) {
  std::vector<Violation> out = range_violations(ch);
  if (!out.empty()) return out;
  const int n = ch.degree;

  long edges = 0, in = 0, outgoing = 0;
  for (const auto& [key, count] : ch.black_edge_labels) {
    edges += count;
    (key.second == EdgeDir::In ? in : outgoing) += count;
  }
  if (edges != ch.black)
    out.push_back({"black_count",
                   fmt::format("black = {} but {} edges meet black vertices", ch.black, edges)});
  if (in != outgoing)
    out.push_back({"black_balance",
                   fmt::format("{} edges point into black vertices, {} point out", in, outgoing)});
  for (const auto& [label, count] : ch.free_edges) {
    if (count_of(ch.black_edge_labels, label, EdgeDir::In) < count ||
        count_of(ch.black_edge_labels, label, EdgeDir::Out) < count)
      out.push_back({"free_edges",
                     fmt::format("{} free edges of label {} need that many black ends in each direction",
                                 count, label)});
  }

  auto white_count = [&](int i, int j) {
    auto it = ch.white.find({i, j});
    return it == ch.white.end() ? 0L : it->second;
  };
  if (ch.black == 0) {
    for (int i = 1; i + 1 <= n - 1; ++i)
      if (white_count(i, i + 1) != white_count(i + 1, i))
        out.push_back({"white_pairing",
                       fmt::format("w_{{{0},{1}}} occurs {2} times but w_{{{1},{0}}} occurs {3} times", i,
                                   i + 1, white_count(i, i + 1), white_count(i + 1, i))});
  } else {
    // Head and tail ends of the label-i edges must match:
    // W(i,.) - W(.,i) = out_i - in_i.
    for (int i = 1; i <= n - 1; ++i) {
      long lhs = white_count(i, i - 1) + white_count(i, i + 1) - white_count(i - 1, i) - white_count(i + 1, i);
      long rhs = count_of(ch.black_edge_labels, i, EdgeDir::Out) - count_of(ch.black_edge_labels, i, EdgeDir::In);
      if (lhs != rhs)
        out.push_back({"label_balance",
                       fmt::format("label {}: white surplus {} does not match black out-in difference {}", i,
                                   lhs, rhs)});
    }
  }
  return out;
}

ChartTotals stats_of_chart(const ChartStats& ch) {
  auto bad = range_violations(ch);
  if (!bad.empty()) throw PreconditionError("stats_of_chart", bad.front().detail);
  ChartTotals t;
  t.b = ch.black;
  for (const auto& [key, count] : ch.white) t.w += count;
  for (const auto& [key, count] : ch.crossings) {
    t.c += count;
    t.s += crossing_sign(key.first, key.second) * count;
  }
  for (const auto& [key, count] : ch.crossings) {
    auto [i, j] = key;
    if (i > j) continue;
    auto rev = ch.crossings.find({j, i});
    t.c_alg += std::labs(count - (rev == ch.crossings.end() ? 0 : rev->second));
  }
  for (const auto& [key, count] : ch.crossings) {
    auto [i, j] = key;
    if (i > j && !ch.crossings.contains({j, i})) t.c_alg += count;
  }
  return t;
}

ChartStats handle_chart_stats(const HandleConfig& cfg) {
  ChartStats ch;
  ch.degree = cfg.degree;
  for (const auto& [label, count] : cfg.free_edges) {
    ch.free_edges[label] += count;
    ch.black += 2L * count;
    ch.black_edge_labels[{label, EdgeDir::In}] += count;
    ch.black_edge_labels[{label, EdgeDir::Out}] += count;
  }
  for (std::size_t idx = 0; idx < cfg.handles.size(); ++idx) {
    const Handle& h = cfg.handles[idx];
    if (!h.crossing_only())
      throw PreconditionError("handle_chart_stats",
                              fmt::format("handle {} = {} is not crossing-only", idx, h.to_string()));
    if (h.cocore().empty()) {
      for (const Letter& l : h.core().letters()) ch.loops[l.index] += 1;
      continue;
    }
    const int i = h.cocore()[0].index;
    const int delta = h.cocore()[0].sign;
    if (h.core().empty()) {
      ch.loops[i] += 1;
      continue;
    }
    for (const Letter& l : h.core().letters()) {
      if (delta * l.sign > 0)
        ch.crossings[{l.index, i}] += 1;
      else
        ch.crossings[{i, l.index}] += 1;
    }
  }
  return ch;
}

}  // namespace hcalc
