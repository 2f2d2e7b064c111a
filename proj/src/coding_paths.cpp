#include "stablegraph/coding_paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stablegraph::coding_paths {

std::vector<long> height_from_walk(const std::vector<long>& S) {
  if (S.empty()) throw std::invalid_argument("empty walk");
  size_t n = S.size() - 1;
  std::vector<long> G(n);
  std::vector<size_t> anc;  // indices j with S(j) = min_{j..current}
  for (size_t k = 0; k < n; ++k) {
    while (!anc.empty() && S[anc.back()] > S[k]) anc.pop_back();
    G[k] = long(anc.size());
    anc.push_back(k);
  }
  return G;
}

std::vector<Excursion> excursions_above_min(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("empty path");
  std::vector<Excursion> out;
  double run_min = v[0];
  size_t start = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] < run_min) {           // strict record closes an excursion
      out.push_back({start, i - start, true});
      run_min = v[i];
      start = i;
    }
  }
  if (start < v.size() - 1) out.push_back({start, v.size() - start, false});
  return out;
}

std::vector<size_t> ord_desc(const std::vector<Excursion>& ex) {
  std::vector<size_t> idx(ex.size());
  std::iota(idx.begin(), idx.end(), size_t(0));
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return ex[a].length > ex[b].length; });
  return idx;
}

double excursion_area(const std::vector<double>& v, const Excursion& e, double dt) {
  double base = v[e.start], a = 0;
  for (size_t i = 0; i < e.length; ++i) a += v[e.start + i] - base;
  return a * dt;
}

std::vector<double> excursion_values(const std::vector<double>& v, const Excursion& e) {
  std::vector<double> out(e.length);
  for (size_t i = 0; i < e.length; ++i) out[i] = v[e.start + i] - v[e.start];
  return out;
}

size_t close_time(const std::vector<double>& e, size_t s, double level) {
  for (size_t t = s; t < e.size(); ++t)
    if (e[t] <= level) return t;
  return e.size();
}

std::vector<double> rescale_values(const std::vector<long>& v, double scale) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = scale * double(v[i]);
  return out;
}

std::vector<SbppPoint> sbpp_sample(const std::vector<double>& lengths, RngStream& rng) {
  std::vector<SbppPoint> pts(lengths.size());
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] <= 0) throw std::invalid_argument("lengths must be positive");
    pts[i] = {i, lengths[i], rng.exponential(lengths[i]), 0.0};
  }
  std::sort(pts.begin(), pts.end(),
            [](const SbppPoint& a, const SbppPoint& b) { return a.clock < b.clock; });
  double acc = 0;
  for (auto& p : pts) { p.sigma = acc; acc += p.length; }
  return pts;
}

}  // namespace stablegraph::coding_paths
