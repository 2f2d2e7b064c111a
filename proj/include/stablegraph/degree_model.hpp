#pragma once
#include <map>
#include <optional>
#include <vector>

#include "stablegraph/random.hpp"
#include "stablegraph/stats.hpp"

namespace stablegraph::degree_model {

// Power tail: mass A * k^{-exponent} for k >= k0. For a degree law with
// stable index a in (1,2) the exponent is a+2.
struct PowerTail {
  double exponent = 0;
  int k0 = 0;
  double A = 0;
};

struct DegreeLaw {
  std::map<int, double> atoms;  // finite head part
  std::optional<PowerTail> tail;

  double pmf(int k) const;
  double total_mass() const;
  double mean() const;                  // mu = E[D]
  double factorial2() const;            // E[D(D-1)]
  double factorial3() const;            // E[D(D-1)(D-2)]; +inf if tail too heavy
  double theta() const;                 // E[D(D-1)] / E[D]
  bool finite_support() const { return !tail.has_value(); }
  int max_atom() const;
  // stable index: exponent-2 for a heavy tail, 2.0 for finite support
  double alpha_index() const;

  // throws std::invalid_argument on: mass at 0, masses not summing to 1,
  // all mass at 2, negative masses
  void validate() const;
};

// Hurwitz zeta(s, a) = sum_{k>=0} (a+k)^{-s}, s > 1 (Euler-Maclaurin)
double hurwitz_zeta(double s, double a);

DegreeLaw make_finite(const std::map<int, double>& atoms);

// Two atoms (at 1 and 2) plus a power tail A k^{-(alpha+2)}, k >= k0, with
// the atom at 1 solved by bisection so that theta = 1 to ~1e-12. The split
// of the non-atom-1 mass between the atom at 2 and the tail is fixed at 1:1.
// Throws if no critical member of the family exists for (alpha, k0).
DegreeLaw make_critical_power_law(double alpha, int k0);

// Inverse-transform sampler on the exact cumulative pmf. The cumulative
// table is extended until the untabulated tail mass is < 1e-12; the
// remainder falls back to the analytic continuous inverse of the tail.
class DegreeSampler {
 public:
  explicit DegreeSampler(const DegreeLaw& law);
  int draw(RngStream& rng) const;

 private:
  std::vector<double> cum_;   // cumulative mass for values_[i]
  std::vector<int> values_;
  double tail_exponent_ = 0;
  int tail_from_ = 0;         // first untabulated tail value
};

// n i.i.d. draws; if the total is odd the last degree is increased by 1
std::vector<int> sample_degrees(const DegreeLaw& law, long n, RngStream& rng);

// Sequential size-biased order: position i is picked with probability
// proportional to its degree among the not-yet-picked (exponential races).
// Returns the permutation (indices into `degrees`).
std::vector<long> size_biased_order(const std::vector<int>& degrees, RngStream& rng);
std::vector<int> size_biased_reorder(const std::vector<int>& degrees, RngStream& rng);

// law of Z with P(Z=k) = k nu_k / mu
DegreeLaw size_biased_law(const DegreeLaw& law);

// Change-of-measure weight phi for the first m entries of the size-biased
// reorder of n i.i.d. degrees:
//   phi(k_1..k_m) = E[ prod_{i=1..m} (n-i+1) mu / (S_i + Xi) ],
//   S_i = k_i + ... + k_m, Xi = sum of (n-m) fresh i.i.d. degrees.
// Exact mode convolves the law (finite support only, n-m <= cap).
double phi_weight_exact(const DegreeLaw& law, long n, const std::vector<int>& prefix,
                        int conv_cap = 12);
stats::MeanSE phi_weight_mc(const DegreeLaw& law, long n, const std::vector<int>& prefix,
                            long draws, RngStream& rng);

// P(first m size-biased entries equal `prefix`) = prod(k_i nu_{k_i}/mu) * phi
double prefix_probability_exact(const DegreeLaw& law, long n,
                                const std::vector<int>& prefix, int conv_cap = 12);

}  // namespace stablegraph::degree_model
