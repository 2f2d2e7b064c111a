#pragma once
#include <vector>

namespace stablegraph::stats {

struct MeanSE {
  double mean = 0;
  double se = 0;
  long n = 0;
};

MeanSE mean_se(const std::vector<double>& xs);
double median(std::vector<double> xs);

// two-sample Kolmogorov-Smirnov statistic sup|F_a - F_b|
double ks_statistic(std::vector<double> a, std::vector<double> b);

// index of dispersion var/mean for count data
double dispersion_index(const std::vector<long>& counts);

// Hill estimate of the tail exponent (P(X>x) ~ x^-idx) from the k largest
// order statistics
double hill_tail_index(std::vector<double> xs, int k);

// least-squares slope of log(y) against log(x)
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace stablegraph::stats
