#include "stablegraph/config_explorer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace stablegraph::config_explorer {

Multigraph pair_half_edges(const std::vector<int>& degrees, RngStream& rng) {
  std::vector<long> half;
  for (size_t v = 0; v < degrees.size(); ++v) {
    if (degrees[v] < 1) throw std::invalid_argument("degree < 1");
    for (int j = 0; j < degrees[v]; ++j) half.push_back(long(v));
  }
  if (half.size() % 2) throw std::invalid_argument("odd number of half-edges");
  for (size_t i = half.size(); i > 1; --i)
    std::swap(half[i - 1], half[rng.below(i)]);
  Multigraph g;
  g.n = long(degrees.size());
  g.edges.reserve(half.size() / 2);
  for (size_t i = 0; i < half.size(); i += 2) g.edges.emplace_back(half[i], half[i + 1]);
  return g;
}

bool is_simple(const Multigraph& g) {
  std::unordered_set<long long> seen;
  for (auto& [a, b] : g.edges) {
    if (a == b) return false;
    long lo = std::min(a, b), hi = std::max(a, b);
    if (!seen.insert(lo * (g.n + 1) + hi).second) return false;
  }
  return true;
}

SimpleSample sample_simple_graph(const std::vector<int>& degrees, RngStream& rng,
                                 long max_attempts) {
  for (long a = 1; a <= max_attempts; ++a) {
    Multigraph g = pair_half_edges(degrees, rng);
    if (is_simple(g)) return {std::move(g), a};
  }
  throw std::runtime_error("simple-graph attempt budget exhausted");
}

std::vector<long> ExploreResult::forest_walk() const {
  std::vector<long> S(dhat.size() + 1, 0);
  for (size_t i = 0; i < dhat.size(); ++i) S[i + 1] = S[i] + dhat[i] - 2;
  return S;
}

ExploreResult explore(const std::vector<int>& degrees, RngStream& rng,
                      const ExploreOptions& opts) {
  const long n = long(degrees.size());
  long long total = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degree < 1");
    total += d;
  }
  if (total % 2) throw std::invalid_argument("odd number of half-edges");

  // size-biased order via exponential races; only the prefix that can be
  // consumed under max_steps needs sorting
  std::vector<double> key((size_t)n);
  for (long i = 0; i < n; ++i) key[size_t(i)] = rng.exponential(double(degrees[size_t(i)]));
  std::vector<long> order((size_t)n);
  std::iota(order.begin(), order.end(), 0L);
  auto cmp = [&](long a, long b) { return key[size_t(a)] < key[size_t(b)]; };
  long cap = n;
  if (opts.max_steps >= 0) cap = std::min<long>(n, opts.max_steps + 1);
  if (cap < n) {
    std::nth_element(order.begin(), order.begin() + cap, order.end(), cmp);
    std::sort(order.begin(), order.begin() + cap, cmp);
  } else {
    std::sort(order.begin(), order.end(), cmp);
  }

  struct Entry {
    long rank;
    bool marked;
  };
  std::vector<Entry> stack;
  std::unordered_set<long long> comp_edges;  // for parallel-edge detection
  auto edge_key = [n](long a, long b) {
    long lo = std::min(a, b), hi = std::max(a, b);
    return (long long)lo * (n + 1) + hi;
  };

  ExploreResult res;
  res.X = {0};
  res.tau = {0};
  res.N = {0};
  res.marks = {0};
  res.stack_sizes = {0};
  res.compensator = {0.0};
  if (opts.track_anomalous) res.anomalous_cum = {0};

  long X = 0, tau = 0, N = 0, mcount = 0, anomalous = 0;
  long long rem = total;
  long comp_base = 0, comp_start = 0, comp_n0 = 0;
  double comp_intensity = 0;
  long steps = 0;

  auto consume_vertex = [&]() {
    long rank = tau;
    int d = degrees[size_t(order[size_t(tau)])];
    res.dhat.push_back(d);
    ++tau;
    rem -= d;
    return std::pair<long, int>(rank, d);
  };
  auto note_edge = [&](long a, long b, bool back) {
    if (opts.record_edges) res.edges.emplace_back(a, b);
    if (back) res.back_edges.emplace_back(a, b);
    if (opts.track_anomalous) {
      if (a == b) ++anomalous;
      else if (!comp_edges.insert(edge_key(a, b)).second) ++anomalous;
    }
  };

  while ((!stack.empty() || tau < n) &&
         (opts.max_steps < 0 || steps < opts.max_steps)) {
    long k = steps;
    if (stack.empty()) {
      // new component
      comp_base = X;
      comp_start = k;
      comp_n0 = N;
      if (opts.track_anomalous) comp_edges.clear();
      auto [rank, d] = consume_vertex();
      stack.insert(stack.end(), size_t(d), Entry{rank, false});
      X += d - 1;
    } else if (stack.back().marked) {
      // close a back-edge
      stack.pop_back();
      --mcount;
      X -= 1;
      res.close_steps.push_back(k);
    } else {
      long avail = long(stack.size()) - 1 - mcount;
      double p = double(avail) / (double(avail) + double(rem));
      comp_intensity += p;
      if (rng.u01() < p) {
        // open a back-edge: uniform unmarked entry strictly below the top
        long r = long(rng.below(uint64_t(avail)));
        long ti = -1;
        for (size_t i = 0; i + 1 < stack.size(); ++i) {
          if (!stack[i].marked && r-- == 0) { ti = long(i); break; }
        }
        note_edge(stack.back().rank, stack[size_t(ti)].rank, true);
        res.open_steps.push_back(k);
        res.open_levels.push_back(comp_base + ti);
        stack[size_t(ti)].marked = true;
        ++mcount;
        stack.pop_back();
        X -= 1;
        ++N;
      } else {
        auto [rank, d] = consume_vertex();
        note_edge(stack.back().rank, rank, false);
        stack.pop_back();
        stack.insert(stack.end(), size_t(d) - 1, Entry{rank, false});
        X += d - 2;
      }
    }
    ++steps;
    res.X.push_back(X);
    res.tau.push_back(tau);
    res.N.push_back(N);
    res.marks.push_back(mcount);
    res.stack_sizes.push_back(long(stack.size()));
    res.compensator.push_back(comp_intensity);
    if (opts.track_anomalous) res.anomalous_cum.push_back(anomalous);
    if (stack.empty() && opts.record_components) {
      ComponentRecord c;
      c.start_step = comp_start;
      c.num_steps = steps - comp_start;
      c.surplus = N - comp_n0;
      c.size = c.num_steps - 2 * c.surplus;
      res.components.push_back(c);
    }
  }
  res.completed = stack.empty() && tau == n;
  return res;
}

}  // namespace stablegraph::config_explorer
