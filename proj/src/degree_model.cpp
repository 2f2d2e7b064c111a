#include "stablegraph/degree_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stablegraph::degree_model {

double hurwitz_zeta(double s, double a) {
  if (s <= 1.0 || a <= 0.0) throw std::invalid_argument("hurwitz_zeta: need s>1, a>0");
  const int N = 16;
  double sum = 0;
  for (int k = 0; k < N; ++k) sum += std::pow(a + k, -s);
  double b = a + N;
  sum += std::pow(b, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(b, -s);
  // Euler-Maclaurin corrections, B2/2!, B4/4!, B6/6!
  double s1 = s, s2 = s * (s + 1) * (s + 2), s3 = s2 * (s + 3) * (s + 4);
  sum += s1 / 12.0 * std::pow(b, -s - 1.0);
  sum -= s2 / 720.0 * std::pow(b, -s - 3.0);
  sum += s3 / 30240.0 * std::pow(b, -s - 5.0);
  return sum;
}

namespace {
double tail_moment(const PowerTail& t, int shift) {
  // sum_{k>=k0} k^shift * A k^{-exponent}
  double s = t.exponent - shift;
  if (s <= 1.0) return std::numeric_limits<double>::infinity();
  return t.A * hurwitz_zeta(s, t.k0);
}
}  // namespace

double DegreeLaw::pmf(int k) const {
  double p = 0;
  auto it = atoms.find(k);
  if (it != atoms.end()) p += it->second;
  if (tail && k >= tail->k0) p += tail->A * std::pow(double(k), -tail->exponent);
  return p;
}

double DegreeLaw::total_mass() const {
  double s = 0;
  for (auto& [k, p] : atoms) s += p;
  if (tail) s += tail_moment(*tail, 0);
  return s;
}

double DegreeLaw::mean() const {
  double s = 0;
  for (auto& [k, p] : atoms) s += double(k) * p;
  if (tail) s += tail_moment(*tail, 1);
  return s;
}

double DegreeLaw::factorial2() const {
  double s = 0;
  for (auto& [k, p] : atoms) s += double(k) * double(k - 1) * p;
  if (tail) s += tail_moment(*tail, 2) - tail_moment(*tail, 1);
  return s;
}

double DegreeLaw::factorial3() const {
  double s = 0;
  for (auto& [k, p] : atoms) s += double(k) * double(k - 1) * double(k - 2) * p;
  if (tail) {
    double m3 = tail_moment(*tail, 3);
    if (std::isinf(m3)) return m3;
    s += m3 - 3.0 * tail_moment(*tail, 2) + 2.0 * tail_moment(*tail, 1);
  }
  return s;
}

double DegreeLaw::theta() const { return factorial2() / mean(); }

int DegreeLaw::max_atom() const {
  if (atoms.empty()) throw std::logic_error("law with no atoms");
  return atoms.rbegin()->first;
}

double DegreeLaw::alpha_index() const { return tail ? tail->exponent - 2.0 : 2.0; }

void DegreeLaw::validate() const {
  for (auto& [k, p] : atoms) {
    if (p < 0) throw std::invalid_argument("negative mass");
    if (k <= 0 && p > 0) throw std::invalid_argument("mass on degree <= 0");
  }
  if (tail && (tail->A < 0 || tail->k0 <= 0))
    throw std::invalid_argument("bad tail");
  if (std::fabs(total_mass() - 1.0) > 1e-9)
    throw std::invalid_argument("masses do not sum to 1");
  auto it = atoms.find(2);
  if (it != atoms.end() && it->second > 1.0 - 1e-12 && !tail)
    throw std::invalid_argument("all mass on degree 2");
}

DegreeLaw make_finite(const std::map<int, double>& atoms) {
  DegreeLaw law;
  law.atoms = atoms;
  law.validate();
  return law;
}

DegreeLaw make_critical_power_law(double alpha, int k0) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::invalid_argument("alpha must be in (1,2)");
  if (k0 < 3) throw std::invalid_argument("k0 must be >= 3");
  double e = alpha + 2.0;
  double z_mass = hurwitz_zeta(e, k0);
  auto family = [&](double a1) {
    DegreeLaw law;
    double rest = 1.0 - a1;
    law.atoms[1] = a1;
    law.atoms[2] = 0.5 * rest;
    law.tail = PowerTail{e, k0, 0.5 * rest / z_mass};
    return law;
  };
  auto gap = [&](double a1) { return family(a1).theta() - 1.0; };
  double lo = 1e-12, hi = 1.0 - 1e-12;
  if (gap(lo) < 0 || gap(hi) > 0)
    throw std::invalid_argument("no critical law in this family for (alpha, k0)");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (gap(mid) > 0 ? lo : hi) = mid;
  }
  DegreeLaw law = family(0.5 * (lo + hi));
  law.validate();
  if (std::fabs(law.theta() - 1.0) > 1e-10)
    throw std::runtime_error("criticality root-finding failed");
  return law;
}

DegreeSampler::DegreeSampler(const DegreeLaw& law) {
  law.validate();
  double acc = 0;
  for (auto& [k, p] : law.atoms) {
    if (law.tail && k >= law.tail->k0) break;  // folded into the tail loop below
    acc += p;
    values_.push_back(k);
    cum_.push_back(acc);
  }
  if (law.tail) {
    tail_exponent_ = law.tail->exponent;
    int k = law.tail->k0;
    // cap the table; the analytic fallback covers the remaining mass
    while (1.0 - acc > 1e-12 && values_.size() < (1u << 21)) {
      acc += law.pmf(k);
      values_.push_back(k);
      cum_.push_back(acc);
      ++k;
    }
    tail_from_ = k;
    if (1.0 - acc > 1e-12) return;  // leave cum_ short of 1: fallback kicks in
  }
  cum_.back() = std::max(cum_.back(), 1.0);  // guard against rounding
}

int DegreeSampler::draw(RngStream& rng) const {
  double u = rng.u01();
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it != cum_.end()) return values_[size_t(it - cum_.begin())];
  // untabulated remainder (mass < 1e-12): analytic power-law inverse
  double x = (tail_from_ - 0.5) * std::pow(rng.u01(), -1.0 / (tail_exponent_ - 1.0));
  return int(std::floor(x + 0.5));
}

std::vector<int> sample_degrees(const DegreeLaw& law, long n, RngStream& rng) {
  if (n <= 0) throw std::invalid_argument("need n >= 1");
  DegreeSampler s(law);
  std::vector<int> d((size_t)n);
  long long total = 0;
  for (auto& x : d) { x = s.draw(rng); total += x; }
  if (total % 2) d.back() += 1;
  return d;
}

std::vector<long> size_biased_order(const std::vector<int>& degrees, RngStream& rng) {
  // exponential races: index i finishes at Exp(1)/d_i; sorting finish times
  // reproduces sequential degree-proportional sampling without replacement
  std::vector<double> key(degrees.size());
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] <= 0) throw std::invalid_argument("degree <= 0");
    key[i] = rng.exponential(double(degrees[i]));
  }
  std::vector<long> idx(degrees.size());
  std::iota(idx.begin(), idx.end(), 0L);
  std::sort(idx.begin(), idx.end(), [&](long a, long b) { return key[a] < key[b]; });
  return idx;
}

std::vector<int> size_biased_reorder(const std::vector<int>& degrees, RngStream& rng) {
  auto idx = size_biased_order(degrees, rng);
  std::vector<int> out(degrees.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = degrees[size_t(idx[i])];
  return out;
}

DegreeLaw size_biased_law(const DegreeLaw& law) {
  double mu = law.mean();
  DegreeLaw out;
  for (auto& [k, p] : law.atoms) out.atoms[k] = double(k) * p / mu;
  if (law.tail)
    out.tail = PowerTail{law.tail->exponent - 1.0, law.tail->k0, law.tail->A / mu};
  return out;
}

namespace {
std::vector<double> convolved_pmf(const DegreeLaw& law, long copies) {
  if (!law.finite_support())
    throw std::invalid_argument("exact mode needs finite support");
  int kmax = law.max_atom();
  std::vector<double> base((size_t)kmax + 1, 0.0);
  for (auto& [k, p] : law.atoms) base[size_t(k)] = p;
  std::vector<double> dist{1.0};
  for (long c = 0; c < copies; ++c) {
    std::vector<double> nxt(dist.size() + size_t(kmax), 0.0);
    for (size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] == 0) continue;
      for (int k = 1; k <= kmax; ++k)
        if (base[size_t(k)] > 0) nxt[i + size_t(k)] += dist[i] * base[size_t(k)];
    }
    dist.swap(nxt);
  }
  return dist;
}

void check_prefix(long n, const std::vector<int>& prefix) {
  if ((long)prefix.size() > n) throw std::invalid_argument("prefix longer than sequence");
  for (int k : prefix)
    if (k < 1) throw std::invalid_argument("prefix entries must be >= 1");
}
}  // namespace

double phi_weight_exact(const DegreeLaw& law, long n, const std::vector<int>& prefix,
                        int conv_cap) {
  check_prefix(n, prefix);
  long m = (long)prefix.size();
  if (n - m > conv_cap) throw std::invalid_argument("n-m above exact-convolution cap");
  double mu = law.mean();
  std::vector<double> suffix(prefix.size() + 1, 0.0);
  for (long i = m - 1; i >= 0; --i) suffix[size_t(i)] = suffix[size_t(i) + 1] + prefix[size_t(i)];
  auto xi = convolved_pmf(law, n - m);
  double phi = 0;
  for (size_t x = 0; x < xi.size(); ++x) {
    if (xi[x] == 0) continue;
    double prod = 1;
    for (long i = 0; i < m; ++i)
      prod *= double(n - i) * mu / (suffix[size_t(i)] + double(x));
    phi += xi[x] * prod;
  }
  return phi;
}

stats::MeanSE phi_weight_mc(const DegreeLaw& law, long n, const std::vector<int>& prefix,
                            long draws, RngStream& rng) {
  check_prefix(n, prefix);
  long m = (long)prefix.size();
  double mu = law.mean();
  std::vector<double> suffix(prefix.size() + 1, 0.0);
  for (long i = m - 1; i >= 0; --i) suffix[size_t(i)] = suffix[size_t(i) + 1] + prefix[size_t(i)];
  DegreeSampler s(law);
  std::vector<double> vals((size_t)draws);
  for (auto& v : vals) {
    long long xi = 0;
    for (long j = 0; j < n - m; ++j) xi += s.draw(rng);
    double prod = 1;
    for (long i = 0; i < m; ++i)
      prod *= double(n - i) * mu / (suffix[size_t(i)] + double(xi));
    v = prod;
  }
  return stats::mean_se(vals);
}

double prefix_probability_exact(const DegreeLaw& law, long n,
                                const std::vector<int>& prefix, int conv_cap) {
  double mu = law.mean();
  double p = phi_weight_exact(law, n, prefix, conv_cap);
  for (int k : prefix) p *= double(k) * law.pmf(k) / mu;
  return p;
}

}  // namespace stablegraph::degree_model
