#include "stablegraph/continuum_graph.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace stablegraph::continuum_graph {

double FiniteMMS::total_mass() const {
  double s = 0;
  for (double m : mass) s += m;
  return s;
}

double FiniteMMS::diameter() const {
  double m = 0;
  for (auto& row : d)
    for (double x : row) m = std::max(m, x);
  return m;
}

void FiniteMMS::audit(RngStream& rng, int triples, double tol) const {
  size_t k = size();
  if (k == 0) throw std::invalid_argument("empty space");
  for (size_t i = 0; i < k; ++i) {
    if (std::fabs(d[i][i]) > tol) throw std::runtime_error("nonzero diagonal");
    if (mass[i] < 0) throw std::runtime_error("negative mass");
    for (size_t j = 0; j < k; ++j)
      if (std::fabs(d[i][j] - d[j][i]) > tol || d[i][j] < -tol)
        throw std::runtime_error("asymmetric or negative distance");
  }
  auto check = [&](size_t a, size_t b, size_t c) {
    if (d[a][c] > d[a][b] + d[b][c] + tol)
      throw std::runtime_error("triangle inequality violated");
  };
  if (k <= 20) {
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b)
        for (size_t c = 0; c < k; ++c) check(a, b, c);
  } else {
    for (int t = 0; t < triples; ++t)
      check(rng.below(k), rng.below(k), rng.below(k));
  }
}

void write_mms(const FiniteMMS& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  out << "k=" << s.size() << "\n";
  for (double m : s.mass) {
    snprintf(buf, sizeof buf, "%.12g", m);
    out << buf << "\n";
  }
  for (auto& row : s.d) {
    for (size_t j = 0; j < row.size(); ++j) {
      snprintf(buf, sizeof buf, "%.12g", row[j]);
      out << buf << (j + 1 < row.size() ? "," : "\n");
    }
  }
}

FiniteMMS read_mms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("k=", 0) != 0)
    throw std::runtime_error("bad header in " + path);
  size_t k = std::stoul(line.substr(2));
  FiniteMMS s;
  s.mass.resize(k);
  s.d.assign(k, std::vector<double>(k));
  for (size_t i = 0; i < k; ++i) {
    std::getline(in, line);
    s.mass[i] = std::stod(line);
  }
  for (size_t i = 0; i < k; ++i) {
    std::getline(in, line);
    std::stringstream ss(line);
    std::string cell;
    for (size_t j = 0; j < k; ++j) {
      std::getline(ss, cell, ',');
      s.d[i][j] = std::stod(cell);
    }
  }
  return s;
}

namespace {

class SparseTableMin {
 public:
  explicit SparseTableMin(const std::vector<double>& v) {
    size_t n = v.size();
    int L = 1;
    while ((size_t(1) << L) <= n) ++L;
    t_.assign(size_t(L), v);
    for (int j = 1; j < L; ++j)
      for (size_t i = 0; i + (size_t(1) << j) <= n; ++i)
        t_[size_t(j)][i] =
            std::min(t_[size_t(j) - 1][i], t_[size_t(j) - 1][i + (size_t(1) << (j - 1))]);
  }
  // min over inclusive [a, b]
  double query(size_t a, size_t b) const {
    int j = 63 - __builtin_clzll(b - a + 1);
    return std::min(t_[size_t(j)][a], t_[size_t(j)][b - (size_t(1) << j) + 1]);
  }

 private:
  std::vector<std::vector<double>> t_;
};

// Voronoi masses of sorted sample positions on [0, total)
std::vector<double> cell_masses(const std::vector<double>& pos, double total) {
  size_t k = pos.size();
  std::vector<double> m(k);
  for (size_t i = 0; i < k; ++i) {
    double lo = i == 0 ? 0.0 : 0.5 * (pos[i - 1] + pos[i]);
    double hi = i + 1 == k ? total : 0.5 * (pos[i] + pos[i + 1]);
    m[i] = hi - lo;
  }
  return m;
}

}  // namespace

FiniteMMS rtree_from_excursion(const std::vector<double>& h, double dt,
                               const std::vector<size_t>& sample_idx, bool lattice) {
  if (h.empty()) throw std::invalid_argument("empty excursion");
  for (double x : h)
    if (x < -1e-12) throw std::invalid_argument("negative excursion sample");
  std::vector<size_t> idx = sample_idx;
  std::sort(idx.begin(), idx.end());
  for (size_t i : idx)
    if (i >= h.size()) throw std::invalid_argument("sample index out of range");
  SparseTableMin rmq(h);
  size_t k = idx.size();
  FiniteMMS out;
  out.d.assign(k, std::vector<double>(k, 0.0));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b) {
      size_t i = idx[a], j = idx[b];
      double dd;
      if (i == j) dd = 0;
      else if (lattice) dd = h[i] + h[j] - 2.0 * (rmq.query(i + 1, j) - 1.0);
      else dd = h[i] + h[j] - 2.0 * rmq.query(i, j);
      out.d[a][b] = out.d[b][a] = std::max(0.0, dd);
    }
  std::vector<double> pos(k);
  for (size_t a = 0; a < k; ++a) pos[a] = double(idx[a]) * dt;
  out.mass = cell_masses(pos, double(h.size()) * dt);
  return out;
}

FiniteMMS identify_pairs(const FiniteMMS& space,
                         const std::vector<std::pair<size_t, size_t>>& pairs) {
  size_t k = space.size();
  std::vector<size_t> parent(k);
  std::iota(parent.begin(), parent.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto d = space.d;
  for (auto& [a, b] : pairs) {
    if (a >= k || b >= k) throw std::invalid_argument("index out of range");
    d[a][b] = d[b][a] = 0.0;
    parent[find(a)] = find(b);
  }
  // all-pairs shortest paths through the glued graph
  for (size_t m = 0; m < k; ++m)
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  // merge the identified classes
  std::vector<long> rep(k, -1);
  std::vector<size_t> keep;
  for (size_t i = 0; i < k; ++i)
    if (find(i) == i) { rep[i] = long(keep.size()); keep.push_back(i); }
  FiniteMMS out;
  out.d.assign(keep.size(), std::vector<double>(keep.size(), 0.0));
  out.mass.assign(keep.size(), 0.0);
  for (size_t i = 0; i < k; ++i) out.mass[size_t(rep[find(i)])] += space.mass[i];
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b) out.d[a][b] = d[keep[a]][keep[b]];
  return out;
}

namespace {
double interp(const std::vector<double>& v, double dt, double t) {
  double u = t / dt;
  size_t i = size_t(std::min(double(v.size() - 1), std::max(0.0, std::floor(u))));
  if (i + 1 >= v.size()) return v.back();
  double f = u - double(i);
  return v[i] * (1 - f) + v[i + 1] * f;
}
}  // namespace

double ghp_upper_bound_trees(const std::vector<double>& h, double dt_h,
                             const std::vector<double>& g, double dt_g) {
  if (h.empty() || g.empty()) throw std::invalid_argument("empty excursion");
  double zh = double(h.size() - 1) * dt_h, zg = double(g.size() - 1) * dt_g;
  double zmin = std::min(zh, zg);
  double fine = std::min(dt_h, dt_g);
  double sup_common = 0;
  for (double t = 0; t <= zmin; t += fine)
    sup_common = std::max(sup_common, std::fabs(interp(h, dt_h, t) - interp(g, dt_g, t)));
  double overhang = 0;
  const std::vector<double>& tallpath = zh > zg ? h : g;
  double tall_dt = zh > zg ? dt_h : dt_g, ztall = std::max(zh, zg);
  for (double t = zmin; t <= ztall; t += fine)
    overhang = std::max(overhang, interp(tallpath, tall_dt, t));
  return 2.0 * std::max({sup_common, overhang, std::fabs(zh - zg) / 2.0});
}

namespace {

struct Corr {
  std::vector<std::pair<size_t, size_t>> pairs;
};

double distortion(const FiniteMMS& A, const FiniteMMS& B, const Corr& c) {
  double dis = 0;
  for (size_t p = 0; p < c.pairs.size(); ++p)
    for (size_t q = p; q < c.pairs.size(); ++q) {
      auto [a1, b1] = c.pairs[p];
      auto [a2, b2] = c.pairs[q];
      dis = std::max(dis, std::fabs(A.d[a1][a2] - B.d[b1][b2]));
    }
  return dis;
}

// max matched mass of a transportation problem supported on the pairs;
// Edmonds-Karp on the tiny bipartite network
double max_match(const FiniteMMS& A, const FiniteMMS& B,
                 const std::vector<std::pair<size_t, size_t>>& pairs) {
  size_t na = A.size(), nb = B.size();
  size_t S = na + nb, T = na + nb + 1, V = na + nb + 2;
  std::vector<std::vector<double>> cap(V, std::vector<double>(V, 0.0));
  for (size_t i = 0; i < na; ++i) cap[S][i] = A.mass[i];
  for (size_t j = 0; j < nb; ++j) cap[na + j][T] = B.mass[j];
  for (auto& [a, b] : pairs) cap[a][na + b] = 1e30;
  double flow = 0;
  for (;;) {
    std::vector<long> prev(V, -1);
    prev[S] = long(S);
    std::queue<size_t> q;
    q.push(S);
    while (!q.empty() && prev[T] < 0) {
      size_t u = q.front();
      q.pop();
      for (size_t v = 0; v < V; ++v)
        if (prev[v] < 0 && cap[u][v] > 1e-12) { prev[v] = long(u); q.push(v); }
    }
    if (prev[T] < 0) break;
    double push = 1e30;
    for (size_t v = T; v != S; v = size_t(prev[v])) push = std::min(push, cap[size_t(prev[v])][v]);
    for (size_t v = T; v != S; v = size_t(prev[v])) {
      cap[size_t(prev[v])][v] -= push;
      cap[v][size_t(prev[v])] += push;
    }
    flow += push;
  }
  return flow;
}

double objective(const FiniteMMS& A, const FiniteMMS& B, const Corr& c, bool exact_flow) {
  double dis = distortion(A, B, c);
  double matched;
  if (exact_flow) {
    matched = max_match(A, B, c.pairs);
  } else {
    // greedy lower bound on the match (upper bound on the objective)
    std::vector<double> ra = A.mass, rb = B.mass;
    matched = 0;
    for (auto& [a, b] : c.pairs) {
      double f = std::min(ra[a], rb[b]);
      ra[a] -= f;
      rb[b] -= f;
      matched += f;
    }
  }
  double disc = A.total_mass() + B.total_mass() - 2.0 * matched;
  return std::max(0.5 * dis, disc);
}

bool covers(const Corr& c, size_t na, size_t nb) {
  std::vector<char> ca(na, 0), cb(nb, 0);
  for (auto& [a, b] : c.pairs) { ca[a] = 1; cb[b] = 1; }
  return std::find(ca.begin(), ca.end(), 0) == ca.end() &&
         std::find(cb.begin(), cb.end(), 0) == cb.end();
}

// exact search: each point of A gets a nonempty subset of B, DFS with
// distortion pruning against the best value found so far
void exact_dfs(const FiniteMMS& A, const FiniteMMS& B, size_t ai, Corr& cur,
               double dis_cur, double& best) {
  if (0.5 * dis_cur >= best) return;
  size_t na = A.size(), nb = B.size();
  if (ai == na) {
    if (!covers(cur, na, nb)) return;
    double v = std::max(0.5 * dis_cur,
                        A.total_mass() + B.total_mass() - 2.0 * max_match(A, B, cur.pairs));
    best = std::min(best, v);
    return;
  }
  for (unsigned mask = 1; mask < (1u << nb); ++mask) {
    size_t added = 0;
    double dis = dis_cur;
    for (size_t b = 0; b < nb && 0.5 * dis < best; ++b) {
      if (!(mask >> b & 1)) continue;
      cur.pairs.emplace_back(ai, b);
      ++added;
      for (size_t p = 0; p + 1 < cur.pairs.size(); ++p) {
        auto [a2, b2] = cur.pairs[p];
        dis = std::max(dis, std::fabs(A.d[ai][a2] - B.d[b][b2]));
      }
    }
    if (0.5 * dis < best) exact_dfs(A, B, ai + 1, cur, dis, best);
    cur.pairs.resize(cur.pairs.size() - added);
  }
}

Corr profile_match(const FiniteMMS& A, const FiniteMMS& B) {
  auto profile = [](const FiniteMMS& X, size_t i) {
    std::vector<double> p = X.d[i];
    std::sort(p.begin(), p.end());
    return p;
  };
  auto cost = [](const std::vector<double>& p, const std::vector<double>& q) {
    double c = 0;
    size_t n = std::max(p.size(), q.size());
    for (size_t i = 0; i < n; ++i) {
      double a = i < p.size() ? p[i] : p.back();
      double b = i < q.size() ? q[i] : q.back();
      c += std::fabs(a - b);
    }
    return c;
  };
  std::vector<std::vector<double>> pa, pb;
  for (size_t i = 0; i < A.size(); ++i) pa.push_back(profile(A, i));
  for (size_t j = 0; j < B.size(); ++j) pb.push_back(profile(B, j));
  Corr c;
  for (size_t j = 0; j < B.size(); ++j) {
    size_t bi = 0;
    double bc = 1e300;
    for (size_t i = 0; i < A.size(); ++i) {
      double cc = cost(pa[i], pb[j]);
      if (cc < bc) { bc = cc; bi = i; }
    }
    c.pairs.emplace_back(bi, j);
  }
  std::vector<char> ca(A.size(), 0);
  for (auto& [a, b] : c.pairs) ca[a] = 1;
  for (size_t i = 0; i < A.size(); ++i) {
    if (ca[i]) continue;
    size_t bj = 0;
    double bc = 1e300;
    for (size_t j = 0; j < B.size(); ++j) {
      double cc = cost(pa[i], pb[j]);
      if (cc < bc) { bc = cc; bj = j; }
    }
    c.pairs.emplace_back(i, bj);
  }
  return c;
}

}  // namespace

double ghp_estimate(const FiniteMMS& a, const FiniteMMS& b, long budget, RngStream* rng) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("empty space");
  const FiniteMMS& A = a.size() <= b.size() ? a : b;
  const FiniteMMS& B = a.size() <= b.size() ? b : a;
  Corr init = profile_match(A, B);
  double best = objective(A, B, init, true);
  if (A.size() == B.size()) {
    Corr ident;
    for (size_t i = 0; i < A.size(); ++i) ident.pairs.emplace_back(i, i);
    best = std::min(best, objective(A, B, ident, true));
  }
  if (B.size() <= 6) {
    Corr cur;
    exact_dfs(A, B, 0, cur, 0.0, best);
    return best;
  }
  RngStream local(12345);
  RngStream& r = rng ? *rng : local;
  Corr c = init;
  double cur_v = best;
  for (long it = 0; it < budget; ++it) {
    Corr trial = c;
    size_t p = r.below(trial.pairs.size());
    if (r.u01() < 0.5) {
      trial.pairs[p].first = r.below(A.size());
    } else {
      trial.pairs[p].second = r.below(B.size());
    }
    if (!covers(trial, A.size(), B.size())) continue;
    double v = objective(A, B, trial, false);
    if (v <= cur_v) { c = trial; cur_v = v; best = std::min(best, v); }
  }
  return best;
}

FiniteMMS graph_component_to_mms(long num_vertices,
                                 const std::vector<std::pair<long, long>>& edges,
                                 double n, double alpha, size_t max_points,
                                 RngStream& rng) {
  if (num_vertices <= 0) throw std::invalid_argument("empty component");
  size_t k = size_t(num_vertices);
  std::vector<std::vector<long>> adj(k);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) continue;  // loops are metrically irrelevant
    adj[size_t(u)].push_back(v);
    adj[size_t(v)].push_back(u);
  }
  auto bfs = [&](const std::vector<long>& sources, std::vector<long>& dist,
                 std::vector<long>& owner) {
    dist.assign(k, -1);
    owner.assign(k, -1);
    std::queue<long> q;
    for (long s : sources) { dist[size_t(s)] = 0; owner[size_t(s)] = s; q.push(s); }
    while (!q.empty()) {
      long u = q.front();
      q.pop();
      for (long v : adj[size_t(u)])
        if (dist[size_t(v)] < 0) {
          dist[size_t(v)] = dist[size_t(u)] + 1;
          owner[size_t(v)] = owner[size_t(u)];
          q.push(v);
        }
    }
  };
  std::vector<long> dist, owner;
  bfs({0}, dist, owner);
  for (size_t i = 0; i < k; ++i)
    if (dist[i] < 0) throw std::invalid_argument("component not connected");

  std::vector<long> retained(k);
  std::iota(retained.begin(), retained.end(), 0L);
  if (k > max_points) {
    for (size_t i = k; i > 1; --i) std::swap(retained[i - 1], retained[rng.below(i)]);
    retained.resize(max_points);
    std::sort(retained.begin(), retained.end());
  }
  size_t r = retained.size();
  // nearest-retained aggregation of the unit masses
  bfs(retained, dist, owner);
  std::vector<long> where(k, -1);
  for (size_t i = 0; i < r; ++i) where[size_t(retained[i])] = long(i);
  double dscale = std::pow(n, -(alpha - 1.0) / (alpha + 1.0));
  double mscale = std::pow(n, -alpha / (alpha + 1.0));
  FiniteMMS out;
  out.d.assign(r, std::vector<double>(r, 0.0));
  out.mass.assign(r, 0.0);
  for (size_t v = 0; v < k; ++v) out.mass[size_t(where[size_t(owner[v])])] += mscale;
  std::vector<long> d1, o1;
  for (size_t i = 0; i < r; ++i) {
    bfs({retained[i]}, d1, o1);
    for (size_t j = 0; j < r; ++j) out.d[i][j] = dscale * double(d1[size_t(retained[j])]);
  }
  // symmetrize exactly (BFS distances already symmetric)
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) out.d[j][i] = out.d[i][j];
  return out;
}

LimitComponent sample_limit_component(const degree_model::DegreeLaw& law, double x,
                                      long m, RngStream& rng, const LimitOptions& opts) {
  if (x <= 0 || m < 0) throw std::invalid_argument("need x > 0, m >= 0");
  double alpha = law.alpha_index();
  long n = opts.proxy_n;
  degree_model::DegreeSampler zs(degree_model::size_biased_law(law));

  struct Draw {
    std::vector<long> walk;  // length n+1, first-passage excursion to -1
    double area = 0;         // of the normalized excursion
  };
  std::vector<Draw> batch((size_t)opts.batch);
  std::vector<double> w((size_t)opts.batch);
  double vscale = std::pow(double(n), -1.0 / alpha);
  for (auto& dr : batch) {
    std::vector<int> y((size_t)n);
    for (long attempt = 0;; ++attempt) {
      if (attempt > 20000)
        throw std::runtime_error("conditioned-walk proxy: progeny condition unreachable "
                                 "(check proxy_n parity against the offspring support)");
      long long tot = 0;
      for (auto& yy : y) { yy = zs.draw(rng) - 1; tot += yy; }
      if (tot == n - 1) break;
    }
    // cycle shift to the unique rotation staying >= 0 until the final step
    std::vector<long> S((size_t)n + 1, 0);
    long minv = 0;
    size_t minpos = 0;
    for (long i = 0; i < n; ++i) {
      S[size_t(i) + 1] = S[size_t(i)] + y[size_t(i)] - 1;
      if (S[size_t(i) + 1] < minv) { minv = S[size_t(i) + 1]; minpos = size_t(i) + 1; }
    }
    std::vector<long> W((size_t)n + 1, 0);
    for (long i = 0; i < n; ++i) {
      long step = y[(minpos + size_t(i)) % size_t(n)] - 1;
      W[size_t(i) + 1] = W[size_t(i)] + step;
    }
    double area = 0;
    for (long i = 0; i < n; ++i) {
      if (W[size_t(i)] < 0) throw std::logic_error("cycle shift failed");
      area += double(W[size_t(i)]);
    }
    dr.walk = std::move(W);
    dr.area = area * vscale / double(n);
  }
  double sw = 0, sw2 = 0;
  for (size_t i = 0; i < batch.size(); ++i) {
    w[i] = std::pow(batch[i].area, double(m));
    sw += w[i];
    sw2 += w[i] * w[i];
  }
  double ess = sw * sw / sw2;
  if (ess < opts.min_ess)
    throw std::runtime_error("tilt weight degeneracy: effective sample size " +
                             std::to_string(ess) + " < " + std::to_string(opts.min_ess));
  double u = rng.u01() * sw, acc = 0;
  size_t chosen = batch.size() - 1;
  for (size_t i = 0; i < batch.size(); ++i) {
    acc += w[i];
    if (u <= acc) { chosen = i; break; }
  }
  const auto& walk = batch[chosen].walk;

  LimitComponent out;
  out.proxy_n = n;
  out.ess = ess;
  out.area = batch[chosen].area;
  std::vector<double> e((size_t)n);
  for (long i = 0; i < n; ++i) e[size_t(i)] = vscale * double(walk[size_t(i)]);
  auto G = coding_paths::height_from_walk(walk);
  double hscale = std::pow(double(n), -(alpha - 1.0) / alpha);
  std::vector<double> h((size_t)n);
  for (long i = 0; i < n; ++i) h[size_t(i)] = hscale * double(G[size_t(i)]);

  // marks: cell with probability proportional to e, uniform height, closed
  // one lattice unit below
  std::vector<std::pair<size_t, size_t>> marks;
  double earea = 0;
  for (double v : e) earea += v;
  for (long j = 0; j < m; ++j) {
    double pick = rng.u01() * earea, run = 0;
    size_t s = e.size() - 1;
    for (size_t i = 0; i < e.size(); ++i) {
      run += e[i];
      if (pick <= run) { s = i; break; }
    }
    double height = rng.u01() * e[s];
    size_t t = coding_paths::close_time(e, s, height - vscale);
    if (t >= e.size()) t = e.size() - 1;
    marks.emplace_back(s, t);
  }

  // sample times: even grid plus the mark endpoints
  std::vector<size_t> times;
  size_t want = opts.max_points > 2 * size_t(m) + 2 ? opts.max_points - 2 * size_t(m) : 2;
  for (size_t i = 0; i < want; ++i) times.push_back(i * size_t(n) / want);
  for (auto& [s, t] : marks) { times.push_back(s); times.push_back(t); }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  FiniteMMS tree = rtree_from_excursion(h, 1.0 / double(n), times, false);
  std::vector<std::pair<size_t, size_t>> glue;
  for (auto& [s, t] : marks) {
    size_t is = size_t(std::lower_bound(times.begin(), times.end(), s) - times.begin());
    size_t it = size_t(std::lower_bound(times.begin(), times.end(), t) - times.begin());
    glue.emplace_back(is, it);
    out.mark_cells.emplace_back(s, t);
  }
  out.space = identify_pairs(tree, glue);
  double dscale = std::pow(x, (alpha - 1.0) / alpha);
  for (auto& row : out.space.d)
    for (auto& v : row) v *= dscale;
  for (auto& v : out.space.mass) v *= x;
  out.excursion = std::move(e);
  out.height = std::move(h);
  return out;
}

}  // namespace stablegraph::continuum_graph
