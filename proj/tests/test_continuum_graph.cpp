#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "doctest.h"
#include "stablegraph/coding_paths.hpp"
#include "stablegraph/continuum_graph.hpp"

using namespace stablegraph;
using namespace stablegraph::continuum_graph;

namespace {

// graph-distance oracle on the tree coded by an offspring sequence
std::vector<std::vector<long>> tree_distances(const std::vector<int>& c) {
  size_t n = c.size();
  std::vector<long> parent(n, -1);
  std::vector<std::pair<size_t, int>> st;
  for (size_t v = 0; v < n; ++v) {
    while (!st.empty() && st.back().second == 0) st.pop_back();
    if (!st.empty()) {
      parent[v] = long(st.back().first);
      st.back().second--;
    }
    st.push_back({v, c[v]});
  }
  std::vector<std::vector<size_t>> adj(n);
  for (size_t v = 0; v < n; ++v)
    if (parent[v] >= 0) {
      adj[v].push_back(size_t(parent[v]));
      adj[size_t(parent[v])].push_back(v);
    }
  std::vector<std::vector<long>> d(n, std::vector<long>(n, -1));
  for (size_t s = 0; s < n; ++s) {
    std::queue<size_t> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      size_t u = q.front();
      q.pop();
      for (size_t w : adj[u])
        if (d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

// all-pairs shortest paths through glued pairs, independent of the library
std::vector<std::vector<double>> apsp_oracle(
    const FiniteMMS& s, const std::vector<std::pair<size_t, size_t>>& pairs) {
  size_t n = s.size();
  auto d = s.d;
  for (auto& [a, b] : pairs) d[a][b] = d[b][a] = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

FiniteMMS random_space(RngStream& rng, size_t n) {
  // metric from random points on a line (always a valid pseudo-metric)
  std::vector<double> x(n);
  for (auto& v : x) v = rng.u01() * 4.0;
  FiniteMMS s;
  s.d.assign(n, std::vector<double>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s.d[i][j] = std::fabs(x[i] - x[j]);
  s.mass.assign(n, 1.0 / double(n));
  return s;
}

}  // namespace

TEST_CASE("continuum tree metric from a hand excursion") {
  std::vector<double> h = {0, 1, 2, 1, 2, 0};
  std::vector<size_t> idx = {1, 2, 4};
  auto s = rtree_from_excursion(h, 0.5, idx, false);
  // d(x,y) = h(x) + h(y) - 2 min between them
  CHECK(s.d[0][1] == doctest::Approx(1.0));   // 1 + 2 - 2*1
  CHECK(s.d[1][2] == doctest::Approx(2.0));   // 2 + 2 - 2*1
  CHECK(s.d[0][2] == doctest::Approx(1.0));
  // sampled points carve the whole excursion interval into cells
  CHECK(s.total_mass() == doctest::Approx(6.0 * 0.5));
  RngStream rng(1);
  s.audit(rng);
}

TEST_CASE("lattice tree metric matches graph distance on coded trees") {
  RngStream rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    // random single tree: offspring sequence of a walk stopped at -1
    std::vector<int> c;
    long S = 0;
    for (int i = 0; i < 40; ++i) {
      int k = int(rng.below(4));
      if (i == 40 - 1 || S + k - 1 < 0) k = 0;
      c.push_back(k);
      S += k - 1;
      if (S < 0) break;
    }
    while (S >= 0) {
      c.push_back(0);
      S -= 1;
    }
    auto dist = tree_distances(c);
    std::vector<long> walk = {0};
    for (int k : c) walk.push_back(walk.back() + k - 1);
    auto G = coding_paths::height_from_walk(walk);
    std::vector<double> h(G.begin(), G.end());
    std::vector<size_t> idx(c.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto s = rtree_from_excursion(h, 1.0, idx, true);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < c.size(); ++j)
        CHECK(s.d[i][j] == doctest::Approx(double(dist[i][j])).epsilon(1e-12));
  }
}

TEST_CASE("gluing pairs matches the shortest-path oracle") {
  RngStream rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    size_t n = 3 + rng.below(8);
    auto s = random_space(rng, n);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t k = 0; k < 1 + rng.below(2); ++k) {
      size_t a = rng.below(n), b = rng.below(n);
      if (a != b) pairs.push_back({a, b});
    }
    auto oracle = apsp_oracle(s, pairs);
    auto glued = identify_pairs(s, pairs);
    // compare via distances between the surviving representatives: total
    // mass is conserved and every oracle distance appears
    CHECK(glued.total_mass() == doctest::Approx(s.total_mass()));
    // output indexing contract: one point per glued class, ordered by the
    // class roots of the pair unions
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t(0));
    std::function<size_t(size_t)> find = [&](size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto& [a, b] : pairs) parent[find(a)] = find(b);
    std::vector<long> rep_of(n, -1);
    long next = 0;
    for (size_t i = 0; i < n; ++i)
      if (find(i) == i) rep_of[i] = next++;
    for (size_t i = 0; i < n; ++i) rep_of[i] = rep_of[find(i)];
    REQUIRE(glued.size() == size_t(next));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        CHECK(glued.d[size_t(rep_of[i])][size_t(rep_of[j])] ==
              doctest::Approx(oracle[i][j]).epsilon(1e-9));
  }
}

TEST_CASE("distance estimate basics") {
  RngStream rng(4);
  auto a = random_space(rng, 5);
  CHECK(ghp_estimate(a, a, 200, &rng) == doctest::Approx(0.0));
  // two single points with different masses: unmatched mass
  FiniteMMS p1, p2;
  p1.d = {{0}};
  p1.mass = {1.0};
  p2.d = {{0}};
  p2.mass = {0.4};
  CHECK(ghp_estimate(p1, p2, 10, &rng) == doctest::Approx(0.6));
  // same two-point shape, one metric scaled: half the distortion
  FiniteMMS q1, q2;
  q1.d = {{0, 1}, {1, 0}};
  q1.mass = {0.5, 0.5};
  q2.d = {{0, 3}, {3, 0}};
  q2.mass = {0.5, 0.5};
  CHECK(ghp_estimate(q1, q2, 10, &rng) == doctest::Approx(1.0));
}

TEST_CASE("graph components to rescaled spaces") {
  RngStream rng(5);
  // path on four vertices
  auto s = graph_component_to_mms(4, {{0, 1}, {1, 2}, {2, 3}}, 16.0, 1.5, 16, rng);
  REQUIRE(s.size() == 4);
  double dscale = std::pow(16.0, -0.2), mscale = std::pow(16.0, -0.6);
  CHECK(s.diameter() == doctest::Approx(3.0 * dscale));
  CHECK(s.total_mass() == doctest::Approx(4.0 * mscale));
  s.audit(rng);
}

TEST_CASE("file round trip") {
  RngStream rng(6);
  auto s = random_space(rng, 6);
  write_mms(s, "/tmp/sg_space.csv");
  auto t = read_mms("/tmp/sg_space.csv");
  REQUIRE(t.size() == s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    CHECK(t.mass[i] == doctest::Approx(s.mass[i]).epsilon(1e-10));
    for (size_t j = 0; j < s.size(); ++j)
      CHECK(t.d[i][j] == doctest::Approx(s.d[i][j]).epsilon(1e-10));
  }
}

TEST_CASE("limit component sampling") {
  auto law = degree_model::make_finite({{1, 0.75}, {3, 0.25}});
  RngStream rng(7);
  LimitOptions opts;
  opts.proxy_n = 201;
  opts.batch = 128;
  opts.max_points = 48;
  for (long m : {0L, 1L, 2L}) {
    auto lc = sample_limit_component(law, 1.3, m, rng, opts);
    CHECK(lc.space.total_mass() == doctest::Approx(1.3).epsilon(1e-6));
    CHECK(lc.area > 0);
    CHECK(lc.ess >= opts.min_ess);
    CHECK(lc.mark_cells.size() == size_t(m));
    CHECK(lc.space.diameter() > 0);
    lc.space.audit(rng);
  }
}
