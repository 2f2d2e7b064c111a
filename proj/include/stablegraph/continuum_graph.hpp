#pragma once
#include <string>
#include <utility>
#include <vector>

#include "stablegraph/coding_paths.hpp"
#include "stablegraph/degree_model.hpp"
#include "stablegraph/levy_sim.hpp"
#include "stablegraph/random.hpp"

namespace stablegraph::continuum_graph {

struct FiniteMMS {
  std::vector<std::vector<double>> d;  // symmetric pseudo-metric, zero diagonal
  std::vector<double> mass;

  size_t size() const { return mass.size(); }
  double total_mass() const;
  double diameter() const;
  // metric axioms on random triples (all triples if k small); throws on violation
  void audit(RngStream& rng, int triples = 200, double tol = 1e-9) const;
};

void write_mms(const FiniteMMS& s, const std::string& path);
FiniteMMS read_mms(const std::string& path);

// Tree pseudo-metric from an excursion sampled on a regular grid:
//   d(x,y) = h(x) + h(y) - 2 min_{[x,y]} h          (continuum grids)
//   d(i,j) = h(i) + h(j) - 2 (min_{i<k<=j} h(k) - 1) (lattice height sequences)
// sample_idx are indices into h; masses are the Lebesgue cells of the
// sampled times on [0, len*dt).
FiniteMMS rtree_from_excursion(const std::vector<double>& h, double dt,
                               const std::vector<size_t>& sample_idx,
                               bool lattice = false);

// quotient by gluing the given index pairs: shortest-path metric through the
// identifications, glued points merged with masses summed
FiniteMMS identify_pairs(const FiniteMMS& space,
                         const std::vector<std::pair<size_t, size_t>>& pairs);

// 2 max{ sup over common domain |h-g|, sup of overhangs, |zeta_h - zeta_g|/2 }
double ghp_upper_bound_trees(const std::vector<double>& h, double dt_h,
                             const std::vector<double>& g, double dt_g);

// Correspondence/coupling upper estimate of the measured Gromov-Hausdorff-
// Prokhorov distance: objective max( distortion/2, unmatched mass under the
// best coupling supported on the correspondence ). Exact enumeration when
// both spaces have <= 6 points, greedy profile matching plus local search
// otherwise (budget = objective evaluations).
double ghp_estimate(const FiniteMMS& a, const FiniteMMS& b, long budget = 200,
                    RngStream* rng = nullptr);

// BFS metric on a connected multigraph component with the limit-theorem
// scalings: distances * n^{-(alpha-1)/(alpha+1)}, unit masses * n^{-alpha/(alpha+1)}.
// Subsamples uniformly to max_points, re-aggregating masses to the nearest
// retained vertex.
FiniteMMS graph_component_to_mms(long num_vertices,
                                 const std::vector<std::pair<long, long>>& edges,
                                 double n, double alpha, size_t max_points,
                                 RngStream& rng);

// One limit component of mass x with m surplus edges, via a conditioned-walk
// proxy of size proxy_n, tilted by (int_0^1 e)^m over a proposal batch, with
// m marks closed against the excursion and glued. Distances come out scaled
// by x^{(alpha-1)/alpha}, masses total x.
struct LimitComponent {
  FiniteMMS space;
  double area = 0;       // integral of the chosen normalized excursion
  double ess = 0;        // effective sample size of the tilt weights
  long proxy_n = 0;
  std::vector<std::pair<size_t, size_t>> mark_cells;  // (open, close) walk cells
  std::vector<double> excursion;  // normalized excursion of the chosen draw
  std::vector<double> height;     // normalized height process
};
struct LimitOptions {
  long proxy_n = 400;
  long batch = 512;
  size_t max_points = 256;
  double min_ess = 10.0;
};
LimitComponent sample_limit_component(const degree_model::DegreeLaw& law, double x,
                                      long m, RngStream& rng,
                                      const LimitOptions& opts = {});

}  // namespace stablegraph::continuum_graph
