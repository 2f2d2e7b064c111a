#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "stablegraph/degree_model.hpp"

using namespace stablegraph;
using namespace stablegraph::degree_model;

namespace {

DegreeLaw binary() { return make_finite({{1, 0.75}, {3, 0.25}}); }

// independent enumeration oracle for the law of a size-biased prefix:
// sum over all iid degree tuples of P(tuple) * P(sequential picks = prefix)
double enum_prefix_prob(const DegreeLaw& law, long n, const std::vector<int>& prefix) {
  std::vector<int> supp;
  for (auto& [k, p] : law.atoms)
    if (p > 0) supp.push_back(k);
  std::vector<size_t> odo(size_t(n), 0);
  double total = 0;
  for (;;) {
    double pt = 1;
    std::map<int, long> counts;
    long sum = 0;
    for (long i = 0; i < n; ++i) {
      int d = supp[odo[size_t(i)]];
      pt *= law.pmf(d);
      counts[d]++;
      sum += d;
    }
    // sequential size-biased picks from the multiset
    double pick = 1;
    long rem = sum;
    bool ok = true;
    auto c = counts;
    for (int k : prefix) {
      if (c[k] == 0) { ok = false; break; }
      pick *= double(k) * double(c[k]) / double(rem);
      c[k]--;
      rem -= k;
    }
    if (ok) total += pt * pick;
    // odometer
    long i = 0;
    while (i < n && ++odo[size_t(i)] == supp.size()) odo[size_t(i++)] = 0;
    if (i == n) break;
  }
  return total;
}

}  // namespace

TEST_CASE("critical binary law moments") {
  auto law = binary();
  CHECK(law.mean() == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(law.theta() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(law.factorial2() == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(law.factorial3() == doctest::Approx(1.5).epsilon(1e-14));
  auto z = size_biased_law(law);
  CHECK(z.pmf(1) == doctest::Approx(0.5));
  CHECK(z.pmf(3) == doctest::Approx(0.5));
  CHECK(z.mean() == doctest::Approx(2.0));
}

TEST_CASE("hurwitz zeta against direct summation") {
  for (double s : {2.5, 3.5, 4.0}) {
    double direct = 0;
    for (long k = 0; k < 2000000; ++k) direct += std::pow(3.0 + double(k), -s);
    CHECK(hurwitz_zeta(s, 3.0) == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("critical power-law family") {
  for (double a : {1.2, 1.5, 1.8}) {
    auto law = make_critical_power_law(a, 3);
    CHECK(law.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(law.theta() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(law.alpha_index() == doctest::Approx(a));
    CHECK(law.factorial3() > 1e300);  // third moment diverges for alpha < 2
  }
}

TEST_CASE("sampler matches the pmf") {
  auto law = make_critical_power_law(1.5, 3);
  DegreeSampler s(law);
  RngStream rng(42);
  long N = 200000;
  std::map<int, long> hist;
  for (long i = 0; i < N; ++i) hist[s.draw(rng)]++;
  for (int k : {1, 2, 3, 5, 10}) {
    double p = law.pmf(k);
    double emp = double(hist[k]) / double(N);
    CHECK(std::fabs(emp - p) < 5 * std::sqrt(p * (1 - p) / double(N)) + 1e-4);
  }
  // tail exponent of the sampler: P(D > K) ~ A K^-(alpha+1) / (alpha+1)
  long big = 0;
  for (auto& [k, c] : hist)
    if (k > 50) big += c;
  double pred = law.tail->A * std::pow(50.0, -2.5) / 2.5;
  CHECK(double(big) / double(N) == doctest::Approx(pred).epsilon(0.25));
}

TEST_CASE("parity fix keeps the half-edge total even") {
  auto law = binary();
  RngStream rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    auto d = sample_degrees(law, 11, rng);
    long s = 0;
    for (int x : d) s += x;
    CHECK(s % 2 == 0);
  }
}

TEST_CASE("prefix law equals product-times-phi (enumeration oracle)") {
  auto law = binary();
  double mu = law.mean();
  for (long n = 2; n <= 4; ++n) {
    for (long m = 1; m <= n; ++m) {
      // all prefixes over the support
      std::vector<int> prefix(size_t(m), 1);
      std::vector<size_t> odo(size_t(m), 0);
      const int supp[2] = {1, 3};
      for (;;) {
        for (long i = 0; i < m; ++i) prefix[size_t(i)] = supp[odo[size_t(i)]];
        double lhs = enum_prefix_prob(law, n, prefix);
        double rhs = prefix_probability_exact(law, n, prefix);
        CHECK(std::fabs(lhs - rhs) < 1e-12);
        long i = 0;
        while (i < m && ++odo[size_t(i)] == 2) odo[size_t(i++)] = 0;
        if (i == m) break;
      }
    }
  }
  // worked values at n=2: P(Dhat_1 = 1) = 21/32, phi(1) = 21/16
  CHECK(std::fabs(prefix_probability_exact(law, 2, {1}) - 21.0 / 32.0) < 1e-13);
  CHECK(std::fabs(phi_weight_exact(law, 2, {1}) - 21.0 / 16.0) < 1e-13);
  CHECK(mu == doctest::Approx(1.5));
}

TEST_CASE("prefix probabilities sum to one") {
  auto law = binary();
  for (long n = 2; n <= 4; ++n) {
    for (long m = 1; m <= n; ++m) {
      double total = 0;
      std::vector<size_t> odo(size_t(m), 0);
      const int supp[2] = {1, 3};
      for (;;) {
        std::vector<int> prefix;
        for (long i = 0; i < m; ++i) prefix.push_back(supp[odo[size_t(i)]]);
        total += prefix_probability_exact(law, n, prefix);
        long i = 0;
        while (i < m && ++odo[size_t(i)] == 2) odo[size_t(i++)] = 0;
        if (i == m) break;
      }
      CHECK(std::fabs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("monte carlo phi agrees with the exact convolution") {
  auto law = binary();
  RngStream rng(5);
  std::vector<int> prefix = {3, 1, 1};
  double exact = phi_weight_exact(law, 8, prefix);
  auto mc = phi_weight_mc(law, 8, prefix, 40000, rng);
  CHECK(std::fabs(mc.mean - exact) < 4 * mc.se + 1e-9);
}

TEST_CASE("size-biased order picks proportionally to degree") {
  std::vector<int> degrees = {1, 3, 3};
  RngStream rng(11);
  long N = 40000, first3 = 0;
  for (long i = 0; i < N; ++i) {
    auto ord = size_biased_order(degrees, rng);
    if (degrees[size_t(ord[0])] == 3) ++first3;
  }
  double emp = double(first3) / double(N), p = 6.0 / 7.0;
  CHECK(std::fabs(emp - p) < 4 * std::sqrt(p * (1 - p) / double(N)));
}

TEST_CASE("law validation") {
  CHECK_THROWS(make_finite({{2, 1.0}}));          // all mass at 2
  CHECK_THROWS(make_finite({{1, 0.5}, {3, 0.4}}));  // mass deficit
}
