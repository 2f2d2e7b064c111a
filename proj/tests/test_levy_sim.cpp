#include <cmath>
#include <vector>

#include "doctest.h"
#include "stablegraph/levy_sim.hpp"
#include "stablegraph/stats.hpp"

using namespace stablegraph;
using namespace stablegraph::levy_sim;
using coding_paths::GridPath;

namespace {

LevyParams stable_params() {
  LevyParams p;
  p.alpha = 1.5;
  p.mu = 1.5;
  p.c = 1.0;
  return p;
}

LevyParams brownian_params() {
  LevyParams p;
  p.alpha = 2.0;
  p.mu = 1.5;
  p.beta = 1.5;
  return p;
}

GridPath linear_path(double T, size_t cells) {
  GridPath g;
  g.dt = T / double(cells);
  for (size_t i = 0; i <= cells; ++i) g.v.push_back(-g.t(i));
  return g;
}

}  // namespace

TEST_CASE("tail constant from the gamma function") {
  auto p = stable_params();
  // c * Gamma(2-alpha) / (alpha (alpha-1)) at alpha=3/2 is 4 sqrt(pi) / 3
  CHECK(p.C() == doctest::Approx(2.363271801207355).epsilon(1e-12));
  CHECK(levy_exponent(p, 1.0) == doctest::Approx(p.C() / p.mu).epsilon(1e-12));
  auto b = brownian_params();
  CHECK(b.C() == doctest::Approx(0.75));
  CHECK(levy_exponent(b, 2.0) == doctest::Approx(0.75 * 4.0 / 1.5));
}

TEST_CASE("general exponent reduces to the quadratic case") {
  CHECK(levy_exponent_general(0, 3.0, {}, 1.7) ==
        doctest::Approx(1.5 * 1.7 * 1.7));
  // single jump atom: m (e^{-l x} - 1 + l x)
  double got = levy_exponent_general(0, 0, {{2.0, 0.5}}, 1.0);
  CHECK(got == doctest::Approx(0.5 * (std::exp(-2.0) - 1.0 + 2.0)));
}

TEST_CASE("brownian endpoint moments") {
  auto p = brownian_params();
  RngStream rng(5);
  std::vector<double> xs;
  for (int i = 0; i < 40000; ++i) xs.push_back(simulate_L(p, 2.0, 8, rng).v.back());
  auto ms = stats::mean_se(xs);
  CHECK(std::fabs(ms.mean) < 4 * ms.se);
  double var = 0;
  for (double x : xs) var += x * x;
  var /= double(xs.size());
  // Var = (beta/mu) t
  CHECK(var == doctest::Approx(2.0 * 1.5 / 1.5).epsilon(0.05));
}

TEST_CASE("stable endpoint laplace transform") {
  auto p = stable_params();
  RngStream rng(6);
  std::vector<double> e1, e2;
  for (int i = 0; i < 40000; ++i) {
    double x = simulate_L(p, 1.0, 4, rng).v.back();
    e1.push_back(std::exp(-0.5 * x));
    e2.push_back(std::exp(-1.0 * x));
  }
  auto m1 = stats::mean_se(e1), m2 = stats::mean_se(e2);
  CHECK(std::fabs(m1.mean - std::exp(levy_exponent(p, 0.5))) < 4 * m1.se);
  CHECK(std::fabs(m2.mean - std::exp(levy_exponent(p, 1.0))) < 4 * m2.se);
}

TEST_CASE("weight along a deterministic drift path") {
  for (auto p : {stable_params(), brownian_params()}) {
    auto L = linear_path(1.0, 1000);
    // int_0^1 s dL = -1/2, so the weight is exp(1/(2mu) - C/((a+1) mu^{a+1}))
    double want = std::exp(0.5 / p.mu - p.C() / ((p.alpha + 1.0) *
                                                  std::pow(p.mu, p.alpha + 1.0)));
    CHECK(rn_weight(p, L, L.size() - 1) == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("inverse local time on a drift path") {
  auto L = linear_path(1.0, 100);  // minimum passes -l at t ~ l
  CHECK(inverse_local_time(L, 0.5) == 51);
  CHECK(inverse_local_time(L, 2.0) == L.size());
}

TEST_CASE("stopped weight identity on a drift path") {
  auto p = stable_params();
  auto L = linear_path(2.0, 4000);
  auto sw = stopped_weight(p, L, 0.7);
  CHECK(sw.sigma == doctest::Approx(0.7).epsilon(0.01));
  CHECK(sw.lhs == doctest::Approx(sw.rhs).epsilon(0.01));
  CHECK_THROWS(stopped_weight(p, L, 5.0));
}

TEST_CASE("tilted process agrees with weighting the plain process") {
  RngStream rng(7);
  for (auto p : {stable_params(), brownian_params()}) {
    double t = 0.6, lam = 1.0;
    std::vector<double> direct, weighted;
    for (int i = 0; i < 6000; ++i) {
      auto Lt = simulate_tilted(p, t, 128, rng);
      direct.push_back(std::exp(-lam * Lt.v.back()));
      auto L = simulate_L(p, t, 128, rng);
      weighted.push_back(rn_weight(p, L, L.size() - 1) *
                         std::exp(-lam * L.v.back()));
    }
    auto a = stats::mean_se(direct), b = stats::mean_se(weighted);
    CHECK(std::fabs(a.mean - b.mean) < 5 * std::sqrt(a.se * a.se + b.se * b.se));
  }
}

TEST_CASE("reflection above the running minimum") {
  GridPath g;
  g.dt = 1;
  g.v = {0, 1, -1, 2, -3};
  auto r = reflect_above_min(g);
  CHECK(r == std::vector<double>{0, 1, 0, 3, 0});
}

TEST_CASE("marks arrive at rate reflected value over mu") {
  GridPath g;  // starts at its minimum, so the reflected value is 2 throughout
  g.dt = 0.01;
  g.v.assign(1001, 2.0);
  g.v[0] = 0.0;
  RngStream rng(9);
  double mu = 1.5;
  std::vector<double> counts, heights;
  for (int i = 0; i < 3000; ++i) {
    auto mk = cox_marks(g, mu, rng);
    counts.push_back(double(mk.size()));
    for (auto& m : mk) heights.push_back(m.height);
  }
  auto mc = stats::mean_se(counts);
  double want = 2.0 * 10.0 / mu;  // value * horizon / mu
  CHECK(std::fabs(mc.mean - want) < 4 * mc.se + 2.0 * g.dt / mu);
  auto mh = stats::mean_se(heights);
  CHECK(std::fabs(mh.mean - 1.0) < 5 * mh.se);  // uniform on [0, 2]
}

TEST_CASE("passage times have the subordinator tail index") {
  auto p = stable_params();
  RngStream rng(13);
  std::vector<double> sigmas;
  double ell = 0.02;
  // the horizon must dwarf the passage-time scale or the top order
  // statistics pile up at the censoring point
  for (int i = 0; i < 2500; ++i) {
    auto L = simulate_L(p, 40.0, 4096, rng);
    size_t s = inverse_local_time(L, ell);
    if (s < L.size()) sigmas.push_back(L.t(s));
  }
  REQUIRE(sigmas.size() > 2400);
  double idx = stats::hill_tail_index(sigmas, 200);
  CHECK(std::fabs(idx - 1.0 / p.alpha) < 0.15);
}
