#pragma once
#include <utility>
#include <vector>

#include "stablegraph/random.hpp"

namespace stablegraph::config_explorer {

struct Multigraph {
  long n = 0;
  std::vector<std::pair<long, long>> edges;  // may contain loops / repeats
};

// uniform pairing of the half-edges; throws if the degree total is odd
Multigraph pair_half_edges(const std::vector<int>& degrees, RngStream& rng);

bool is_simple(const Multigraph& g);

struct SimpleSample {
  Multigraph graph;
  long attempts = 0;
};
// repeated pairing until simple; throws std::runtime_error when the attempt
// budget is exhausted (e.g. degree sequence [2] is never simple)
SimpleSample sample_simple_graph(const std::vector<int>& degrees, RngStream& rng,
                                 long max_attempts = 1000000);

struct ComponentRecord {
  long start_step = 0;  // first walk step of the component
  long num_steps = 0;   // zeta: steps spent in the component
  long size = 0;        // distinct vertices (= num_steps - 2*surplus)
  long surplus = 0;     // back-edges inside the component
};

struct ExploreOptions {
  long max_steps = -1;   // stop after this many steps (-1: run out the graph)
  bool record_edges = false;
  bool record_components = true;
  bool track_anomalous = false;  // count self-loops/parallel edges as found
};

// Depth-first exploration of the configuration multigraph, emitting the
// forest walk of the back-edge-pruned forest together with the back-edge
// bookkeeping. Vertex ids in all outputs are discovery ranks (positions in
// the size-biased order).
struct ExploreResult {
  std::vector<long> X;            // walk; X[0]=0, one extra value per step
  std::vector<long> tau;          // vertices seen by step k (size = steps+1)
  std::vector<long> N;            // back-edges opened by step k
  std::vector<long> marks;        // |M(k)|
  std::vector<long> stack_sizes;  // R(k): open half-edges on the stack
  std::vector<int> dhat;          // consumed degrees, size-biased order
  std::vector<double> compensator;  // cumulative back-edge-open intensity
  std::vector<long> open_steps;     // k at which a back-edge opened
  std::vector<long> open_levels;    // chosen mark level per open
  std::vector<long> close_steps;
  std::vector<std::pair<long, long>> back_edges;      // (rank, rank)
  std::vector<std::pair<long, long>> edges;           // all edges, if recorded
  std::vector<ComponentRecord> components;
  std::vector<long> anomalous_cum;  // cumulative count, if tracked
  bool completed = true;

  // forest walk of the pruned forest restricted to consumed vertices:
  // Stilde(i) = sum_{j<=i} (dhat_j - 2), Stilde(0)=0
  std::vector<long> forest_walk() const;
};

ExploreResult explore(const std::vector<int>& degrees, RngStream& rng,
                      const ExploreOptions& opts = {});

}  // namespace stablegraph::config_explorer
