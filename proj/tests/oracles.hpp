#pragma once

// Reference implementations used only by tests. Each one takes the most
// direct route to the answer and shares no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct Line {
  long double slope;
  long double intercept;
};

// Solve [n  Sx; Sx Sxx] [b; m] = [Sy; Sxy] by Cramer's rule in long double.
inline Line normal_equations(const std::vector<double>& x, const std::vector<double>& y) {
  long double n = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double xi = x[i], yi = y[i];
    n += 1;
    sx += xi;
    sxx += xi * xi;
    sy += yi;
    sxy += xi * yi;
  }
  const long double det = n * sxx - sx * sx;
  return {(n * sxy - sx * sy) / det, (sxx * sy - sx * sxy) / det};
}

inline std::vector<std::size_t> change_points(const std::vector<double>& v, double z) {
  const std::size_t n = v.size();
  std::vector<long double> d;
  for (std::size_t i = 1; i < n; ++i) d.push_back(std::fabs(static_cast<long double>(v[i]) - v[i - 1]));
  long double mean = 0;
  for (auto x : d) mean += x;
  mean /= d.size();
  long double var = 0;
  for (auto x : d) var += (x - mean) * (x - mean);
  const long double sd = std::sqrt(var / d.size());
  std::vector<std::size_t> out{0};
  if (sd > 1e-9L * mean)
    for (std::size_t i = 0; i < d.size(); ++i)
      if ((d[i] - mean) / sd > z && i + 1 != n - 1) out.push_back(i + 1);
  out.push_back(n - 1);
  return out;
}

inline std::vector<double> trailing_median(const std::vector<double>& v, std::size_t width) {
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t lo = i + 1 >= width ? i + 1 - width : 0;
    std::vector<double> w(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(i) + 1);
    std::sort(w.begin(), w.end());
    const std::size_t k = w.size();
    out.push_back(k % 2 ? w[k / 2] : (w[k / 2 - 1] + w[k / 2]) / 2);
  }
  return out;
}

}  // namespace oracle
