#pragma once
#include <vector>

#include "stablegraph/coding_paths.hpp"
#include "stablegraph/degree_model.hpp"
#include "stablegraph/random.hpp"

namespace stablegraph::levy_sim {

using coding_paths::GridPath;

// Spectrally positive stable mechanism derived from a critical degree law:
// Psi(lambda) = C lambda^alpha / mu with C = c Gamma(2-alpha)/(alpha(alpha-1))
// for alpha in (1,2) (c the degree-tail amplitude), and C = beta/2 for the
// finite-variance case alpha = 2 (beta the third factorial moment).
struct LevyParams {
  double alpha = 2.0;
  double mu = 1.5;
  double c = 0;     // alpha < 2
  double beta = 0;  // alpha = 2

  double C() const;
  static LevyParams from_law(const degree_model::DegreeLaw& law);
};

double levy_exponent(const LevyParams& p, double lambda);

// general mechanism: gamma*l + del2*l^2/2 + sum_i m_i (e^{-l x_i} - 1 + l x_i)
struct JumpAtom {
  double x = 0;
  double mass = 0;
};
double levy_exponent_general(double gamma, double del2,
                             const std::vector<JumpAtom>& atoms, double lambda);

// unconditioned process: exact stable (or Gaussian) cell increments
GridPath simulate_L(const LevyParams& p, double T, size_t cells, RngStream& rng);

// time-inhomogeneous tilted process, built directly:
//   jumps with intensity (c/mu) x^{-alpha-1} e^{-x s / mu} ds dx (thinning
//   above eps_cut, Gaussian replacement below) plus drift -C t^alpha/mu^alpha.
// Brownian case is exact: sqrt(beta/mu) B_t - beta t^2 / (2 mu^2).
// eps_cut <= 0 selects the default dt^{1/alpha}.
GridPath simulate_tilted(const LevyParams& p, double T, size_t cells, RngStream& rng,
                         double eps_cut = 0);

double drift_A(const LevyParams& p, double t);

// L - I with I the running minimum
std::vector<double> reflect_above_min(const GridPath& path);

// Radon-Nikodym weight along an unconditioned path, up to grid index `upto`:
//   Phi(t) = exp(-(1/mu) int_0^t s dL_s - C t^{alpha+1}/((alpha+1) mu^{alpha+1}))
// with the stochastic integral evaluated by summation by parts.
double rn_weight(const LevyParams& p, const GridPath& L, size_t upto);

// first grid index where the running minimum goes below -ell; L.size() if never
size_t inverse_local_time(const GridPath& L, double ell);

// Poisson marks along a reflected path: intensity R_s/mu ds, height
// uniform on [0, R_s]
struct CoxMark {
  double time = 0;
  double height = 0;
  size_t cell = 0;
};
std::vector<CoxMark> cox_marks(const GridPath& tilted, double mu, RngStream& rng);

// Both sides of the stopped-weight identity at level ell:
//   lhs = Phi(sigma_ell)
//   rhs = exp((1/mu) int_0^ell sigma_r dr + (1/mu) * sum of excursion areas
//         of L - I before sigma_ell - C sigma_ell^{alpha+1}/((alpha+1) mu^{alpha+1}))
// Throws std::runtime_error if the path never reaches -ell.
struct StoppedWeight {
  double lhs = 0;
  double rhs = 0;
  double sigma = 0;
};
StoppedWeight stopped_weight(const LevyParams& p, const GridPath& L, double ell);

}  // namespace stablegraph::levy_sim
