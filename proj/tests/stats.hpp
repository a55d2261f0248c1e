#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace rydephase::test {

// Kolmogorov-Smirnov statistic D_n of a sample against a continuous CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

// 5% critical value of the KS statistic for large n.
inline double ks_critical_5pct(std::size_t n) { return 1.358 / std::sqrt(static_cast<double>(n)); }
// 1% critical value.
inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

// Pearson χ² over `bins` equiprobable bins defined by the inverse of `cdf`
// (cells assigned through cdf(x) directly).
inline double chi_square_equiprobable(const std::vector<double>& sample, const std::function<double(double)>& cdf,
                                      int bins) {
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (double x : sample) {
    int k = static_cast<int>(cdf(x) * bins);
    counts[static_cast<std::size_t>(std::clamp(k, 0, bins - 1))] += 1.0;
  }
  const double expected = static_cast<double>(sample.size()) / bins;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  return chi2;
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

inline Moments moments(const std::vector<double>& x) {
  Moments m;
  for (double v : x) m.mean += v;
  m.mean /= static_cast<double>(x.size());
  for (double v : x) m.variance += (v - m.mean) * (v - m.mean);
  m.variance /= static_cast<double>(x.size() - 1);
  return m;
}

}  // namespace rydephase::test
