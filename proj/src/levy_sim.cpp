#include "stablegraph/levy_sim.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace stablegraph::levy_sim {

double LevyParams::C() const {
  if (alpha >= 2.0) return beta / 2.0;
  return c * std::tgamma(2.0 - alpha) / (alpha * (alpha - 1.0));
}

LevyParams LevyParams::from_law(const degree_model::DegreeLaw& law) {
  LevyParams p;
  p.mu = law.mean();
  if (law.tail) {
    p.alpha = law.tail->exponent - 2.0;
    if (!(p.alpha > 1.0 && p.alpha < 2.0))
      throw std::invalid_argument("tail index outside (1,2)");
    p.c = law.tail->A;
  } else {
    p.alpha = 2.0;
    p.beta = law.factorial3();
  }
  return p;
}

double levy_exponent(const LevyParams& p, double lambda) {
  return p.C() * std::pow(lambda, p.alpha) / p.mu;
}

double levy_exponent_general(double gamma, double del2,
                             const std::vector<JumpAtom>& atoms, double lambda) {
  double s = gamma * lambda + 0.5 * del2 * lambda * lambda;
  for (auto& a : atoms)
    s += a.mass * (std::exp(-lambda * a.x) - 1.0 + lambda * a.x);
  return s;
}

double drift_A(const LevyParams& p, double t) {
  return -p.C() * std::pow(t, p.alpha) / std::pow(p.mu, p.alpha);
}

GridPath simulate_L(const LevyParams& p, double T, size_t cells, RngStream& rng) {
  if (cells == 0 || T <= 0) throw std::invalid_argument("bad horizon");
  GridPath out;
  out.dt = T / double(cells);
  out.v.resize(cells + 1);
  out.v[0] = 0;
  if (p.alpha >= 2.0) {
    double sd = std::sqrt(p.beta / p.mu * out.dt);
    for (size_t i = 0; i < cells; ++i) out.v[i + 1] = out.v[i] + sd * rng.normal();
  } else {
    double coef = p.C() / p.mu * out.dt;  // E exp(-l dX) = exp(coef l^alpha)
    for (size_t i = 0; i < cells; ++i)
      out.v[i + 1] = out.v[i] + rng.spectrally_positive_stable(p.alpha, coef);
  }
  return out;
}

namespace {
// J(t) = int_eps^inf x^{-alpha-1} e^{-x t/mu} dx
double big_jump_J(double alpha, double mu, double eps, double t) {
  if (t <= 0) return std::pow(eps, -alpha) / alpha;
  double z = eps * t / mu;
  // Gamma(-alpha, z) by recurrence from Gamma(2-alpha, z)
  double g2 = boost::math::tgamma(2.0 - alpha, z);
  double g1 = (g2 - std::pow(z, 1.0 - alpha) * std::exp(-z)) / (1.0 - alpha);
  double g0 = (g1 - std::pow(z, -alpha) * std::exp(-z)) / (-alpha);
  return std::pow(t / mu, alpha) * g0;
}

// inner small-jump second moment: int_0^eps x^{1-alpha} e^{-x s/mu} dx
double small_jump_inner(double alpha, double mu, double eps, double s) {
  if (s <= 0) return std::pow(eps, 2.0 - alpha) / (2.0 - alpha);
  double z = eps * s / mu;
  return std::pow(s / mu, alpha - 2.0) * boost::math::tgamma_lower(2.0 - alpha, z);
}
}  // namespace

GridPath simulate_tilted(const LevyParams& p, double T, size_t cells, RngStream& rng,
                         double eps_cut) {
  if (cells == 0 || T <= 0) throw std::invalid_argument("bad horizon");
  GridPath out;
  out.dt = T / double(cells);
  out.v.resize(cells + 1);
  out.v[0] = 0;
  double dt = out.dt;
  if (p.alpha >= 2.0) {
    double sd = std::sqrt(p.beta / p.mu * dt);
    double d = p.beta / (2.0 * p.mu * p.mu);
    for (size_t i = 0; i < cells; ++i) {
      double t0 = dt * double(i), t1 = t0 + dt;
      out.v[i + 1] = out.v[i] + sd * rng.normal() - d * (t1 * t1 - t0 * t0);
    }
    return out;
  }
  double eps = eps_cut > 0 ? eps_cut : std::pow(dt, 1.0 / p.alpha);
  double rate = dt * (p.c / p.mu) * std::pow(eps, -p.alpha) / p.alpha;  // proposal
  // 4-point Gauss-Legendre on [0,1]
  static const double gx[4] = {0.069431844202974, 0.330009478207572,
                               0.669990521792428, 0.930568155797026};
  static const double gw[4] = {0.173927422568727, 0.326072577431273,
                               0.326072577431273, 0.173927422568727};
  for (size_t i = 0; i < cells; ++i) {
    double t0 = dt * double(i), t1 = t0 + dt;
    double inc = 0;
    long k = rng.poisson(rate);
    for (long j = 0; j < k; ++j) {
      double x = eps * std::pow(rng.u01(), -1.0 / p.alpha);
      double s = t0 + dt * rng.u01();
      if (rng.u01() < std::exp(-x * s / p.mu)) inc += x;
    }
    // compensate accepted-jump mean exactly
    inc -= p.c * (big_jump_J(p.alpha, p.mu, eps, t0) - big_jump_J(p.alpha, p.mu, eps, t1));
    // small jumps: Gaussian with the matching second moment
    double var = 0;
    for (int q = 0; q < 4; ++q)
      var += gw[q] * small_jump_inner(p.alpha, p.mu, eps, t0 + dt * gx[q]);
    var *= dt * p.c / p.mu;
    inc += std::sqrt(var) * rng.normal();
    inc += drift_A(p, t1) - drift_A(p, t0);
    out.v[i + 1] = out.v[i] + inc;
  }
  return out;
}

std::vector<double> reflect_above_min(const GridPath& path) {
  std::vector<double> out(path.v.size());
  double m = path.v.empty() ? 0 : path.v[0];
  for (size_t i = 0; i < path.v.size(); ++i) {
    m = std::min(m, path.v[i]);
    out[i] = path.v[i] - m;
  }
  return out;
}

double rn_weight(const LevyParams& p, const GridPath& L, size_t upto) {
  if (upto >= L.v.size()) throw std::invalid_argument("index beyond horizon");
  double t = L.t(upto);
  // int_0^t s dL_s = t L_t - int_0^t L_s ds; trapezoid on the second term
  // makes the discrete integral sum_i (t_i+t_{i+1})/2 dL_i, so the grid
  // bias of E[weight] is second order in dt
  double riem = 0;
  for (size_t i = 0; i < upto; ++i) riem += 0.5 * (L.v[i] + L.v[i + 1]);
  riem *= L.dt;
  double integral = t * L.v[upto] - riem;
  double det = p.C() * std::pow(t, p.alpha + 1.0) /
               ((p.alpha + 1.0) * std::pow(p.mu, p.alpha + 1.0));
  return std::exp(-integral / p.mu - det);
}

size_t inverse_local_time(const GridPath& L, double ell) {
  double m = 0;
  for (size_t i = 0; i < L.v.size(); ++i) {
    m = std::min(m, L.v[i]);
    if (m < -ell) return i;
  }
  return L.v.size();
}

std::vector<CoxMark> cox_marks(const GridPath& tilted, double mu, RngStream& rng) {
  auto R = reflect_above_min(tilted);
  std::vector<CoxMark> out;
  for (size_t i = 0; i + 1 < R.size(); ++i) {
    long k = rng.poisson(R[i] / mu * tilted.dt);
    for (long j = 0; j < k; ++j)
      out.push_back({tilted.t(i) + tilted.dt * rng.u01(), R[i] * rng.u01(), i});
  }
  return out;
}

StoppedWeight stopped_weight(const LevyParams& p, const GridPath& L, double ell) {
  size_t sidx = inverse_local_time(L, ell);
  if (sidx >= L.v.size()) throw std::runtime_error("level not reached before horizon");
  StoppedWeight out;
  out.sigma = L.t(sidx);
  out.lhs = rn_weight(p, L, sidx);

  // int_0^ell sigma_r dr: the inverse jumps to t_i when the minimum drops
  double integral = 0, prev_min = 0;
  for (size_t i = 1; i <= sidx; ++i) {
    if (L.v[i] < prev_min) {
      double a = std::min(ell, -prev_min), b = std::min(ell, -L.v[i]);
      if (b > a) integral += L.t(i) * (b - a);
      prev_min = L.v[i];
    }
  }
  // excursion areas of L - I on [0, sigma]
  std::vector<double> head(L.v.begin(), L.v.begin() + long(sidx) + 1);
  double areas = 0;
  for (auto& e : coding_paths::excursions_above_min(head))
    if (e.complete) areas += coding_paths::excursion_area(head, e, L.dt);
  double det = p.C() * std::pow(out.sigma, p.alpha + 1.0) /
               ((p.alpha + 1.0) * std::pow(p.mu, p.alpha + 1.0));
  out.rhs = std::exp(integral / p.mu + areas / p.mu - det);
  return out;
}

}  // namespace stablegraph::levy_sim
