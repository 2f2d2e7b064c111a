#include "stablegraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stablegraph::stats {

MeanSE mean_se(const std::vector<double>& xs) {
  MeanSE out;
  out.n = (long)xs.size();
  if (out.n == 0) return out;
  double s = 0;
  for (double x : xs) s += x;
  out.mean = s / double(out.n);
  if (out.n < 2) return out;
  double v = 0;
  for (double x : xs) v += (x - out.mean) * (x - out.mean);
  v /= double(out.n - 1);
  out.se = std::sqrt(v / double(out.n));
  return out;
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  size_t m = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + m, xs.end());
  double hi = xs[m];
  if (xs.size() % 2) return hi;
  double lo = *std::max_element(xs.begin(), xs.begin() + m);
  return 0.5 * (lo + hi);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i; else ++j;
    d = std::max(d, std::fabs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

double dispersion_index(const std::vector<long>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("dispersion: need >= 2 bins");
  double m = 0;
  for (long c : counts) m += double(c);
  m /= double(counts.size());
  if (m == 0) throw std::invalid_argument("dispersion: zero mean");
  double v = 0;
  for (long c : counts) v += (double(c) - m) * (double(c) - m);
  v /= double(counts.size()) - 1.0;
  return v / m;
}

double hill_tail_index(std::vector<double> xs, int k) {
  if (k < 1 || (size_t)k >= xs.size())
    throw std::invalid_argument("hill: bad order-statistic count");
  std::sort(xs.begin(), xs.end(), std::greater<double>());
  if (xs[k] <= 0) throw std::invalid_argument("hill: nonpositive threshold");
  double g = 0;
  for (int i = 0; i < k; ++i) g += std::log(xs[i] / xs[k]);
  g /= double(k);
  return 1.0 / g;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope: need matched samples, >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  double n = double(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace stablegraph::stats
