#pragma once
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablegraph/config_explorer.hpp"
#include "stablegraph/continuum_graph.hpp"
#include "stablegraph/degree_model.hpp"
#include "stablegraph/levy_sim.hpp"
#include "stablegraph/stats.hpp"

namespace stablegraph::experiments {

struct Metric {
  std::string name;
  double value = 0;
  double se = 0;
  double tol = 0;
  bool pass = true;
};

struct ExperimentReport {
  std::vector<Metric> metrics;
  bool all_pass() const;
};
void write_report(const ExperimentReport& r, const std::string& path);

// simple deterministic replica runner: worker threads when available,
// results always aggregated in replica order
void parallel_replicas(long count, const std::function<void(long)>& body);

struct Config {
  std::map<std::string, std::string> kv;
  double get(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  std::string get_str(const std::string& key, const std::string& fallback) const;
};

// ---- computational cores -------------------------------------------------

// largest-component size/diameter scaling across n levels
struct ScalingLevel {
  double n = 0;
  double median_size = 0;
  double median_diam = 0;
};
struct ScalingResult {
  std::vector<ScalingLevel> levels;
  double slope_size = 0;
  double slope_diam = 0;
  // per replica rows (n, size, surplus, diameter) for CSV output
  std::vector<std::array<double, 4>> rows;
};
ScalingResult scaling_exponents(const degree_model::DegreeLaw& law,
                                const std::vector<long>& levels, long replicas,
                                uint64_t seed);

// back-edge count against its exploration compensator
struct CoxResult {
  double ratio = 0;   // sum N / sum compensator
  double se = 0;      // delta-method standard error of the ratio
  double dispersion = 0;  // index of dispersion of counts in compensator bins
  long replicas = 0;
};
CoxResult cox_check(const degree_model::DegreeLaw& law, long n, double horizon,
                    long replicas, uint64_t seed);

// simple-graph acceptance rate
struct SimpleProbResult {
  double rate = 0, se = 0, predicted = 0;
  long attempts = 0;
};
SimpleProbResult simple_prob(const degree_model::DegreeLaw& law, long n, long attempts,
                             uint64_t seed);

// Monte Carlo Laplace exponent of the unconditioned process
struct LaplaceResult {
  double lambda = 0, estimate = 0, se = 0, predicted = 0;
};
std::vector<LaplaceResult> laplace_check(const levy_sim::LevyParams& p,
                                         const std::vector<double>& lambdas, double t,
                                         long paths, uint64_t seed);

// E[Phi(t)] (should be 1)
stats::MeanSE weight_mean_one(const levy_sim::LevyParams& p, double t, long paths,
                              size_t cells, uint64_t seed);

// mean relative gap of the stopped-weight identity at two grid resolutions
struct RefinementResult {
  double gap_coarse = 0, gap_fine = 0;
  long used = 0;
};
RefinementResult stopped_refinement(const levy_sim::LevyParams& p, double ell, double T,
                                    size_t cells_coarse, long paths, uint64_t seed);

// phi weights of size-biased prefixes at scale, against continuum Phi samples
struct WeightConvergence {
  long n = 0;
  stats::MeanSE phi_mean;       // should be ~1
  double ks_to_continuum = 0;
};
std::vector<WeightConvergence> weight_convergence(const degree_model::DegreeLaw& law,
                                                  const std::vector<long>& levels,
                                                  double horizon, long replicas,
                                                  long inner_draws, size_t cells,
                                                  uint64_t seed);

// discrete largest components vs matched limit components under the
// correspondence estimate
struct GhpLevel {
  double n = 0;
  double median_ghp = 0;
  double median_diam_discrete = 0;
  double median_diam_limit = 0;
  long failures = 0;  // resampling-quality errors
};
std::vector<GhpLevel> ghp_compare(const degree_model::DegreeLaw& law,
                                  const std::vector<long>& levels, long replicas,
                                  size_t max_points, long budget, uint64_t seed);

// conditioned single component: mean rescaled excursion area of components
// conditioned to a size window, against the exponentially tilted proxy mean
struct ConditionedResult {
  double discrete_mean = 0, discrete_se = 0;
  double proxy_mean = 0, proxy_se = 0;
  long accepted = 0;
};
ConditionedResult conditioned_component(const degree_model::DegreeLaw& law, long n,
                                        long target, double window, long want,
                                        long proxy_batch, uint64_t seed);

// exact conditional mean area of the first forest-walk excursion given its
// length, by enumeration over prefixes weighted with the exact
// change-of-measure prefix probabilities (finite-support laws, small sizes)
double conditioned_area_exact(const degree_model::DegreeLaw& law, long n, long length);

// ---- CLI runners ---------------------------------------------------------
ExperimentReport run_sizes(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_weights(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_cox(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_ghp(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_conditioned(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_simple_prob(const Config& c, uint64_t seed, const std::string& out);
ExperimentReport run_levy_check(const Config& c, uint64_t seed, const std::string& out);

// shared: diameter of a multigraph component by iterated double-sweep BFS
long double_sweep_diameter(long num_vertices,
                           const std::vector<std::pair<long, long>>& edges,
                           RngStream& rng, int restarts = 4);

// law presets for configs: "binary" (3/4 at 1, 1/4 at 3) or
// "power:alpha,k0"
degree_model::DegreeLaw law_from_spec(const std::string& spec);

}  // namespace stablegraph::experiments
