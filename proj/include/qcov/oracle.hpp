// Brute-force references the estimators are tested against. These share
// no computation with the estimator module: sums are written directly
// from the defining formulas over raw value vectors.
#pragma once

#include <vector>

#include "qcov/simulate.hpp"
#include "qcov/timegrid.hpp"

namespace qcov::oracle {

// sum_k (A_{k+1} - A_k)(B_{k+1} - B_k) over a shared fine grid
double latent_qcv(const std::vector<double>& path_a,
                  const std::vector<double>& path_b);

// trapezoid integral of a fine-grid path
double trapezoid(const std::vector<double>& path, double dt);

// Fine-grid covariation truths for one simulated day, plus the integrals
// the closed-form limit needs.
struct LatentTruth {
  double qcv_ss = 0.0;
  double qcv_sl = 0.0;
  double qcv_ll = 0.0;
  double rho_true = 0.0;
  double beta_true = 0.0;
  double int_sigma = 0.0;   // integral of sigma ds
  double int_sigma2 = 0.0;  // integral of sigma^2 ds
};

LatentTruth latent_truth(const LatentPaths& paths, double dt);

// rho * gamma * nu * sqrt(xi) * integral of sigma_s ds : the limit of
// n^-1 [sigma^2, lambda_n]_T in the volatility-intensity model.
double closed_form_limit(const ModelParams& params,
                         const std::vector<double>& sigma_path, double dt);

// A pure-jump spot path given as point masses (time, jump size).
struct PointMass {
  double time = 0.0;
  double size = 0.0;
};

// Exact evaluation of the tent-weight representation
//   (1/K) sum_l sum_{i = l [2K]} (int f dtheta)(int f dlambda)
// for piecewise-constant spot paths. Equals rolling_qv of the exactly
// integrated series divided by (K delta)^2, to machine accuracy.
double f_representation_qv(const std::vector<PointMass>& theta_jumps,
                           const std::vector<PointMass>& lambda_jumps,
                           const BlockGrid& grid, int half_window);

// Exact integral at block boundaries of a piecewise-constant path with
// the given initial level and jumps:
//   Theta(t) = level0 * t + sum_{tau <= t} size * (t - tau)
std::vector<double> integrate_point_masses(const std::vector<PointMass>& jumps,
                                           const BlockGrid& grid,
                                           double level0);

// Nested-loop re-implementation of the rolling quadratic covariation,
// written independently of the estimator module.
double naive_qv(const std::vector<double>& values_a,
                const std::vector<double>& values_b, int half_window);

}  // namespace qcov::oracle
