// Joint simulation of the correlated volatility-intensity model:
// CIR spot volatility and CIR trade intensity driven by correlated
// Brownian motions, a price diffusion on the volatility, observation
// times from the intensity by time-change inversion, and additive
// Gaussian observation noise. Fully deterministic given a root seed.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qcov {

struct ModelParams {
  // volatility CIR: d sigma2 = kappa (alpha_cir - sigma2) dt + gamma_vol * sqrt(sigma2) dZ
  double kappa = 2.345;
  double alpha_cir = 2.172;
  double gamma_vol = 1.0;

  // intensity CIR at frequency n:
  //   d lambda = beta_n (xi_n - lambda) dt + nu_n sqrt(lambda) dB
  // with xi_n = n * xi, nu_n = sqrt(n) * nu, beta_n = n^beta_exponent * beta0
  double xi = 1.0;
  double beta0 = 0.169;
  double beta_exponent = 0.25;
  double nu = 1.0;

  double rho = 0.912;          // corr(Z, B)
  double rho_leverage = 0.0;   // corr(W, Z); 0 = no leverage effect
  long long n = 20000;         // frequency index
  double noise_sd = 0.0005;    // sd of additive observation noise
  double horizon = 1.0;        // T, one trading day = 1.0
  long long sim_steps = 1 << 20;

  double xi_n() const;
  double nu_n() const;
  double beta_n() const;

  // throws std::invalid_argument when a parameter is out of range or a
  // Feller condition (2*speed*mean >= diffusion^2) fails
  void validate() const;

  // paper-scale run: n = 40000, xi = 8.912 (~356k ticks/day)
  static ModelParams paper_preset();
  // desk-scale run: n = 20000, xi = 1.0 (~20k ticks/day)
  static ModelParams desk_preset();
};

// Fine-grid sample paths plus the driver increments that generated them
// (kept so oracles can recompute integrals from the same randomness).
struct LatentPaths {
  std::vector<double> times;     // s_0 .. s_M
  std::vector<double> sigma2;    // spot variance path, >= 0
  std::vector<double> lambda_n;  // intensity path, >= 0
  std::vector<double> price;     // efficient log-price X, X_0 = 0
  std::vector<double> z_inc;     // driver increments, length M
  std::vector<double> b_inc;
  std::vector<double> w_inc;
};

// Ordered noisy observations Y_t = X_t + eps.
struct TickSeries {
  std::vector<double> times;   // strictly increasing, in (0, T]
  std::vector<double> prices;  // same length as times

  std::size_t size() const { return times.size(); }
};

struct DriverIncrements {
  std::vector<double> z;  // N(0, dt) iid
  std::vector<double> b;  // rho * z + sqrt(1-rho^2) * independent
  std::vector<double> w;  // rho_leverage * z + sqrt(1-rho_leverage^2) * independent
};

DriverIncrements draw_drivers(double rho, long long steps, double dt,
                              std::uint64_t seed, double rho_leverage = 0.0);

// Full-truncation Euler scheme for a square-root (or linear) diffusion:
//   x_{k+1} = x_k + speed (mean - x_k^+) dt + diff(x_k^+) dB_k
// reported path is x^+ = max(x, 0).
std::vector<double> simulate_cir(double x0, double speed, double mean,
                                 double diffusion_coeff, bool sqrt_form,
                                 const std::vector<double>& driver_inc,
                                 double dt);

// sigma2_0 ~ Gamma(2 kappa alpha / gamma^2, rate 2 kappa / gamma^2),
// lambda_0 ~ Gamma(2 beta_n xi_n / nu_n^2, rate 2 beta_n / nu_n^2)
std::pair<double, double> draw_initial_states(const ModelParams& params,
                                              std::uint64_t seed);

// X_{k+1} = X_k + sqrt(sigma2_k) dW_k, X_0 = 0
std::vector<double> simulate_price(const std::vector<double>& sigma2,
                                   const std::vector<double>& w_inc,
                                   double dt);

// Observation times in (0, T] by time-change inversion: the intensity is
// cumulated by trapezoid into Lambda and unit-exponential partial sums are
// mapped through its piecewise-linear inverse.
std::vector<double> sample_times(const std::vector<double>& lambda_path,
                                 double dt, std::uint64_t seed);

// Y_i = X(t_i) + eps_i with X looked up at the nearest-left fine-grid
// point (cadlag convention) and eps iid N(0, noise_sd^2).
TickSeries add_noise(const std::vector<double>& price_path,
                     const std::vector<double>& times, double noise_sd,
                     double dt, std::uint64_t seed);

struct SimulatedDay {
  LatentPaths latent;
  TickSeries ticks;
};

// Latent paths only (no observation times, no noise). Cheaper when only
// path functionals are needed.
LatentPaths simulate_latent(const ModelParams& params, std::uint64_t seed);

// Full pipeline for one day.
SimulatedDay simulate_day(const ModelParams& params, std::uint64_t seed);

}  // namespace qcov
