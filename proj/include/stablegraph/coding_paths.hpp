#pragma once
#include <cstddef>
#include <vector>

#include "stablegraph/random.hpp"

namespace stablegraph::coding_paths {

// regular grid path: value v[i] at time i*dt
struct GridPath {
  double dt = 1.0;
  std::vector<double> v;
  double t(size_t i) const { return dt * double(i); }
  size_t size() const { return v.size(); }
};

// Height sequence of the forest coded by a skip-free-left walk S (length
// n+1): G(k) = #{j < k : S(j) = min_{j<=l<=k} S(l)}, one value per vertex.
// Linear-time ancestor stack.
std::vector<long> height_from_walk(const std::vector<long>& S);

// Excursions above the running minimum: the path is segmented at strict
// running-minimum records; excursion i covers indices [start, start+length),
// values v[start+t] - v[start]. The final segment is reported with
// complete=false if the path does not end on a record.
struct Excursion {
  size_t start = 0;
  size_t length = 0;
  bool complete = true;
};
std::vector<Excursion> excursions_above_min(const std::vector<double>& v);

// indices of excursions sorted by length descending (stable on ties)
std::vector<size_t> ord_desc(const std::vector<Excursion>& ex);

// left-Riemann integral of the excursion values above their starting level
double excursion_area(const std::vector<double>& v, const Excursion& e, double dt);

// values of excursion e shifted to start at 0
std::vector<double> excursion_values(const std::vector<double>& v, const Excursion& e);

// first index t >= s with e[t] <= level; e.size() if none
size_t close_time(const std::vector<double>& e, size_t s, double level);

// multiply values, keep times implicit
std::vector<double> rescale_values(const std::vector<long>& v, double scale);

// Exponential-race discovery of lengths: item g gets clock Exp(length_g);
// sigma_g = total length discovered strictly before g. Returned in
// discovery order. Lengths must be > 0.
struct SbppPoint {
  size_t index = 0;   // into the input vector
  double length = 0;
  double clock = 0;
  double sigma = 0;
};
std::vector<SbppPoint> sbpp_sample(const std::vector<double>& lengths, RngStream& rng);

}  // namespace stablegraph::coding_paths
