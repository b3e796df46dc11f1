#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracton {

inline std::vector<double> linspace(double min, double max, int count) {
  if (count < 1) throw std::invalid_argument("grid count must be positive");
  if (count == 1) {
    if (min != max) throw std::invalid_argument("single-point grid requires min == max");
    return {min};
  }
  if (!(min < max)) throw std::invalid_argument("grid requires min < max");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] =
        min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  grid.back() = max;
  return grid;
}

inline std::vector<double> logspace(double min, double max, int count) {
  if (!(min > 0.0)) throw std::invalid_argument("log grid requires min > 0");
  if (count == 1) {
    if (min != max) throw std::invalid_argument("single-point grid requires min == max");
    return {min};
  }
  auto grid = linspace(std::log(min), std::log(max), count);
  for (double& x : grid) x = std::exp(x);
  grid.front() = min;
  grid.back() = max;
  return grid;
}

/// 17 significant digits: enough for doubles to round-trip through text.
inline std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace fracton
