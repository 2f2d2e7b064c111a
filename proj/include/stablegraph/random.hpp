#pragma once
#include <cstdint>
#include <cmath>

namespace stablegraph {

// Splittable counter-free stream: splitmix64 core. split(i) derives an
// independent stream deterministically, so replica i of a run always sees
// the same randomness regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(uint64_t seed = 0) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  RngStream split(uint64_t idx) const {
    // hash (state, idx) into a fresh seed; does not disturb this stream
    uint64_t z = state_ ^ (0x7f4a7c15ull + idx * 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return RngStream(z ^ (z >> 31));
  }

  // uniform on (0,1), never returns 0 or 1
  double u01() { return (double(next_u64() >> 11) + 0.5) * 0x1p-53; }

  // uniform integer in [0, n)
  uint64_t below(uint64_t n) {
    // multiply-shift; bias < 2^-64, irrelevant here
    return (uint64_t)(((__uint128_t)next_u64() * n) >> 64);
  }

  double exponential(double rate) { return -std::log(u01()) / rate; }

  double normal() {
    if (have_spare_) { have_spare_ = false; return spare_; }
    double u = u01(), v = u01();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925287 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // plain multiplication method; means used here are O(1)
  long poisson(double mean) {
    long total = 0;
    while (mean > 30.0) {
      // additivity keeps the product from underflowing
      total += poisson_small(30.0);
      mean -= 30.0;
    }
    return total + poisson_small(mean);
  }

  // spectrally positive strictly stable increment, alpha in (1,2):
  // E exp(-lambda X) = exp(coef * lambda^alpha), zero mean.
  // Chambers-Mallows-Stuck with beta=1, rescaled.
  double spectrally_positive_stable(double alpha, double coef) {
    double tb = std::tan(1.5707963267948966 * alpha);
    double B = std::atan(tb) / alpha;          // tb < 0 for 1<alpha<2
    double S = std::pow(1.0 + tb * tb, 0.5 / alpha);
    double V = 3.141592653589793 * (u01() - 0.5);
    double W = exponential(1.0);
    double x = S * std::sin(alpha * (V + B)) / std::pow(std::cos(V), 1.0 / alpha) *
               std::pow(std::cos(V - alpha * (V + B)) / W, (1.0 - alpha) / alpha);
    double scale = std::pow(coef * std::fabs(std::cos(1.5707963267948966 * alpha)),
                            1.0 / alpha);
    return scale * x;
  }

 private:
  long poisson_small(double mean) {
    double lim = std::exp(-mean), prod = u01();
    long k = 0;
    while (prod > lim) { prod *= u01(); ++k; }
    return k;
  }

  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace stablegraph
