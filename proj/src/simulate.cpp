#include "qcov/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qcov/rng.hpp"

namespace qcov {

double ModelParams::xi_n() const { return static_cast<double>(n) * xi; }

double ModelParams::nu_n() const {
  return std::sqrt(static_cast<double>(n)) * nu;
}

double ModelParams::beta_n() const {
  return std::pow(static_cast<double>(n), beta_exponent) * beta0;
}

void ModelParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  };
  positive(kappa, "kappa");
  positive(alpha_cir, "alpha_cir");
  positive(gamma_vol, "gamma_vol");
  positive(xi, "xi");
  positive(beta0, "beta0");
  positive(nu, "nu");
  positive(horizon, "T");
  if (n < 1) throw std::invalid_argument("frequency index n must be >= 1");
  if (sim_steps < 2) throw std::invalid_argument("sim_steps must be >= 2");
  if (std::abs(rho) > 1.0) throw std::invalid_argument("|rho| must be <= 1");
  if (std::abs(rho_leverage) > 1.0) {
    throw std::invalid_argument("|rho_leverage| must be <= 1");
  }
  if (noise_sd < 0.0) throw std::invalid_argument("noise_sd must be >= 0");
  if (beta_exponent < 0.0 || beta_exponent > 1.0) {
    throw std::invalid_argument("beta_exponent must lie in [0, 1]");
  }
  if (2.0 * kappa * alpha_cir < gamma_vol * gamma_vol) {
    throw std::invalid_argument(
        "volatility Feller condition violated: 2*kappa*alpha < gamma^2");
  }
  if (2.0 * beta_n() * xi_n() < nu_n() * nu_n()) {
    throw std::invalid_argument(
        "intensity Feller condition violated: 2*beta_n*xi_n < nu_n^2");
  }
}

ModelParams ModelParams::paper_preset() {
  ModelParams p;
  p.kappa = 2.345;
  p.alpha_cir = 2.172;
  p.gamma_vol = 1.0;
  p.xi = 8.912;
  p.beta0 = 0.169;
  p.beta_exponent = 0.25;
  p.nu = 1.0;
  p.rho = 0.912;
  p.n = 40000;
  p.noise_sd = 0.0005;
  p.horizon = 1.0;
  p.sim_steps = 1 << 20;
  return p;
}

ModelParams ModelParams::desk_preset() {
  ModelParams p = paper_preset();
  p.xi = 1.0;  // ~n ticks per day instead of ~9n
  p.n = 20000;
  return p;
}

DriverIncrements draw_drivers(double rho, long long steps, double dt,
                              std::uint64_t seed, double rho_leverage) {
  if (std::abs(rho) > 1.0) throw std::invalid_argument("|rho| must be <= 1");
  if (std::abs(rho_leverage) > 1.0) {
    throw std::invalid_argument("|rho_leverage| must be <= 1");
  }
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

  auto engine = make_engine(seed, Stream::kDrivers);
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));

  DriverIncrements inc;
  const std::size_t m = static_cast<std::size_t>(steps);
  inc.z.resize(m);
  inc.b.resize(m);
  inc.w.resize(m);
  const double rb = std::sqrt(1.0 - rho * rho);
  const double rw = std::sqrt(1.0 - rho_leverage * rho_leverage);
  for (std::size_t k = 0; k < m; ++k) {
    const double z = normal(engine);
    const double b_perp = normal(engine);
    const double w_perp = normal(engine);
    inc.z[k] = z;
    inc.b[k] = rho * z + rb * b_perp;
    inc.w[k] = rho_leverage * z + rw * w_perp;
  }
  return inc;
}

std::vector<double> simulate_cir(double x0, double speed, double mean,
                                 double diffusion_coeff, bool sqrt_form,
                                 const std::vector<double>& driver_inc,
                                 double dt) {
  if (!(speed > 0.0) || !(mean >= 0.0) || diffusion_coeff < 0.0) {
    throw std::invalid_argument("CIR parameters must be positive");
  }
  if (x0 < 0.0) throw std::invalid_argument("CIR initial value must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

  std::vector<double> path(driver_inc.size() + 1);
  double x = x0;  // untruncated state
  path[0] = std::max(x, 0.0);
  for (std::size_t k = 0; k < driver_inc.size(); ++k) {
    const double xp = std::max(x, 0.0);
    const double diff = sqrt_form ? diffusion_coeff * std::sqrt(xp)
                                  : diffusion_coeff * xp;
    x = x + speed * (mean - xp) * dt + diff * driver_inc[k];
    path[k + 1] = std::max(x, 0.0);
  }
  return path;
}

std::pair<double, double> draw_initial_states(const ModelParams& params,
                                              std::uint64_t seed) {
  params.validate();
  auto engine = make_engine(seed, Stream::kInitialStates);

  // std::gamma_distribution takes (shape, scale); scale = 1/rate
  const double g2 = params.gamma_vol * params.gamma_vol;
  std::gamma_distribution<double> sigma2_dist(
      2.0 * params.kappa * params.alpha_cir / g2, g2 / (2.0 * params.kappa));

  const double nu2 = params.nu_n() * params.nu_n();
  std::gamma_distribution<double> lambda_dist(
      2.0 * params.beta_n() * params.xi_n() / nu2,
      nu2 / (2.0 * params.beta_n()));

  const double sigma2_0 = sigma2_dist(engine);
  const double lambda_0 = lambda_dist(engine);
  return {sigma2_0, lambda_0};
}

std::vector<double> simulate_price(const std::vector<double>& sigma2,
                                   const std::vector<double>& w_inc,
                                   double dt) {
  if (sigma2.size() != w_inc.size() + 1) {
    throw std::invalid_argument(
        "price path needs len(sigma2) == len(w_inc) + 1");
  }
  (void)dt;  // increments already carry sqrt(dt) scaling
  std::vector<double> x(sigma2.size());
  x[0] = 0.0;
  for (std::size_t k = 0; k < w_inc.size(); ++k) {
    x[k + 1] = x[k] + std::sqrt(sigma2[k]) * w_inc[k];
  }
  return x;
}

std::vector<double> sample_times(const std::vector<double>& lambda_path,
                                 double dt, std::uint64_t seed) {
  if (lambda_path.empty()) return {};
  for (double v : lambda_path) {
    if (v < 0.0) throw std::invalid_argument("intensity path must be >= 0");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

  // cumulative intensity by trapezoid
  std::vector<double> big_lambda(lambda_path.size());
  big_lambda[0] = 0.0;
  for (std::size_t k = 0; k + 1 < lambda_path.size(); ++k) {
    big_lambda[k + 1] =
        big_lambda[k] + 0.5 * dt * (lambda_path[k] + lambda_path[k + 1]);
  }
  const double total = big_lambda.back();

  auto engine = make_engine(seed, Stream::kExponentials);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(total) + 16);
  double s = expo(engine);
  std::size_t k = 0;
  while (s <= total) {
    while (k + 1 < big_lambda.size() && big_lambda[k + 1] < s) ++k;
    // s in (big_lambda[k], big_lambda[k+1]]: invert the linear segment
    const double seg = big_lambda[k + 1] - big_lambda[k];
    double t;
    if (seg > 0.0) {
      t = (static_cast<double>(k) + (s - big_lambda[k]) / seg) * dt;
    } else {
      t = static_cast<double>(k + 1) * dt;
    }
    if (times.empty() || t > times.back()) {
      times.push_back(t);
    }
    s += expo(engine);
  }
  return times;
}

TickSeries add_noise(const std::vector<double>& price_path,
                     const std::vector<double>& times, double noise_sd,
                     double dt, std::uint64_t seed) {
  if (price_path.empty()) throw std::invalid_argument("empty price path");
  if (noise_sd < 0.0) throw std::invalid_argument("noise_sd must be >= 0");
  const double horizon = static_cast<double>(price_path.size() - 1) * dt;

  auto engine = make_engine(seed, Stream::kNoise);
  std::normal_distribution<double> normal(0.0, 1.0);

  TickSeries out;
  out.times = times;
  out.prices.resize(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    if (t < 0.0 || t > horizon * (1.0 + 1e-12)) {
      throw std::invalid_argument("tick time outside the simulated horizon");
    }
    std::size_t k = static_cast<std::size_t>(t / dt);  // nearest-left point
    if (k >= price_path.size()) k = price_path.size() - 1;
    const double eps = noise_sd > 0.0 ? noise_sd * normal(engine) : 0.0;
    out.prices[i] = price_path[k] + eps;
  }
  return out;
}

LatentPaths simulate_latent(const ModelParams& params, std::uint64_t seed) {
  params.validate();
  const long long m = params.sim_steps;
  const double dt = params.horizon / static_cast<double>(m);

  DriverIncrements drivers =
      draw_drivers(params.rho, m, dt, seed, params.rho_leverage);
  auto [sigma2_0, lambda_0] = draw_initial_states(params, seed);

  LatentPaths paths;
  paths.sigma2 = simulate_cir(sigma2_0, params.kappa, params.alpha_cir,
                              params.gamma_vol, true, drivers.z, dt);
  paths.lambda_n = simulate_cir(lambda_0, params.beta_n(), params.xi_n(),
                                params.nu_n(), true, drivers.b, dt);
  paths.price = simulate_price(paths.sigma2, drivers.w, dt);

  paths.times.resize(static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k < paths.times.size(); ++k) {
    paths.times[k] = static_cast<double>(k) * dt;
  }
  paths.z_inc = std::move(drivers.z);
  paths.b_inc = std::move(drivers.b);
  paths.w_inc = std::move(drivers.w);
  return paths;
}

SimulatedDay simulate_day(const ModelParams& params, std::uint64_t seed) {
  SimulatedDay day;
  day.latent = simulate_latent(params, seed);
  const double dt =
      params.horizon / static_cast<double>(params.sim_steps);
  std::vector<double> times = sample_times(day.latent.lambda_n, dt, seed);
  day.ticks = add_noise(day.latent.price, times, params.noise_sd, dt, seed);
  return day;
}

}  // namespace qcov
