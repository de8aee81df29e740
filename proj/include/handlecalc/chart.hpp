#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "handlecalc/config.hpp"

namespace hcalc {

// Orientation of a chart edge at its black vertex: "in" points toward the
// vertex, "out" points away from it.
enum class EdgeDir { In, Out };

std::string to_string(EdgeDir d);

// Census of a chart: type multisets only, no embedding.
struct ChartStats {
  int degree = 1;
  long black = 0;
  std::map<std::pair<int, EdgeDir>, long> black_edge_labels;
  std::map<std::pair<int, int>, long> white;      // w_{i,j}
  std::map<std::pair<int, int>, long> crossings;  // c_{i,j}
  std::map<int, long> free_edges;
  std::map<int, long> loops;

  friend bool operator==(const ChartStats&, const ChartStats&) = default;
};

struct Violation {
  std::string kind;    // label_range, white_type, crossing_type, ...
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ChartTotals {
  long b = 0;
  long w = 0;
  long c = 0;
  long s = 0;
  long c_alg = 0;

  friend bool operator==(const ChartTotals&, const ChartTotals&) = default;
};

// Range checks only (labels, white and crossing types, counts).
std::vector<Violation> range_violations(const ChartStats& ch);
// All local constraints. Empty iff the census is admissible.
std::vector<Violation> validate_chart(const ChartStats& ch);

// Throws PreconditionError when range checks fail.
ChartTotals stats_of_chart(const ChartStats& ch);

// s-contribution of a single crossing type.
int crossing_sign(int i, int j);

// Census of a configuration whose handles are all crossing-only.
ChartStats handle_chart_stats(const HandleConfig& cfg);

}  // namespace hcalc
