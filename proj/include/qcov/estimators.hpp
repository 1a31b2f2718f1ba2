// The estimator suite: rolling second-difference quadratic variation,
// its scaled single-scale form, the two-scale (TSQC) combination, TSRV
// with pre-averaging, cumulative transaction counts, and the rho / beta /
// leverage transforms.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcov/simulate.hpp"
#include "qcov/timegrid.hpp"

namespace qcov {

// A cumulative (cadlag) process evaluated at the block boundaries
// t_0 .. t_B. Increments over (s, t] are value differences.
struct BlockSeries {
  BlockGrid grid;
  std::vector<double> values;  // length B + 1

  double at(int i) const { return values[static_cast<std::size_t>(i)]; }
};

BlockSeries make_block_series(const BlockGrid& grid,
                              std::vector<double> values);

// value(t_{i+K}) - 2 value(t_i) + value(t_{i-K});  requires K <= i <= B-K
double second_diff(const BlockSeries& series, int i, int half_window);

// (1/K) sum_{i=K}^{B-K} second_diff(A, i, K) * second_diff(B, i, K)
// Symmetric and bilinear; annihilates affine series.
double rolling_qv(const BlockSeries& a, const BlockSeries& b,
                  int half_window);

// 1.5 * rolling_qv / (K * delta)^2 ; delta must match the shared grid.
double qv_scaled(const BlockSeries& a, const BlockSeries& b, int half_window,
                 double delta);

// Two window scales K1 < K2 = gamma_ratio * K1, gamma_ratio >= 2 integer.
struct TsqcConfig {
  int k1 = 10;
  int gamma_ratio = 2;

  int k2() const { return k1 * gamma_ratio; }
};

// 1.5 * (QV_{K2} - QV_{K1}) / ((K2^2 - K1^2) delta^2)
double tsqc(const BlockSeries& a, const BlockSeries& b,
            const TsqcConfig& cfg, double delta);

// Non-overlapping blocks of m ticks replaced by their mean, stamped at the
// block's last tick; a trailing remainder shorter than m is dropped.
TickSeries preaverage(const TickSeries& ticks, int window);

// Two-scales realized volatility on a series of (pre-averaged) prices:
//   [Y,Y]^(K) = K^-1 sum_{i=1}^{N-K} (Y_{i+K} - Y_i)^2
//   TSRV = { (1 - (K-J+1/3)/N) (K-J) }^-1 { K [Y,Y]^(K) - J [Y,Y]^(J) }
// May be negative in finite samples; no clamping here.
double tsrv(const std::vector<double>& prices, int k_scale, int j_scale);

struct IntegratedVolSeries {
  BlockSeries series;
  long long sparse_blocks = 0;  // blocks whose averaged series had N <= K
};

// Additive integrated-volatility estimator: per block, pre-average the
// ticks inside the block and apply TSRV; cumulate block values at the
// boundaries. Sparse blocks contribute 0 and bump the warning counter.
IntegratedVolSeries integrated_vol_series(const TickSeries& ticks,
                                          const BlockGrid& grid, int preavg_m,
                                          int tsrv_k, int tsrv_j);

// value at t_i = scale * #{event times <= t_i}; times must be ascending.
BlockSeries cumulative_count(const std::vector<double>& times,
                             const BlockGrid& grid, double scale);

struct RhoEstimate {
  double value = 0.0;
  bool clamped = false;  // true when the raw ratio fell outside [-1, 1]
};

// Cross TSQC over the geometric mean of the diagonal TSQCs. Throws
// UndefinedEstimate (carrying both diagonals) when either diagonal is
// nonpositive; otherwise clamps into [-1, 1] and flags the clamp.
RhoEstimate rho_tsqc(const BlockSeries& a, const BlockSeries& b,
                     const TsqcConfig& cfg, double delta);

// tsqc(A, B) / tsqc(B, B); throws UndefinedEstimate when the denominator
// diagonal is nonpositive.
double beta_tsqc(const BlockSeries& a, const BlockSeries& b,
                 const TsqcConfig& cfg, double delta);

// (K delta)^-1 (1/K) sum_i second_diff(theta_hat, i, K) *
//                          (X(t_{i+K}) - X(t_{i-K}))
double leverage_qv(const BlockSeries& theta_hat, const BlockSeries& x_series,
                   int half_window, double delta);

// Named scalar estimates for one day plus the knobs that produced them.
struct EstimateReport {
  double qv_ss = 0.0;  // TSQC([sigma^2, sigma^2])
  double qv_sl = 0.0;  // TSQC([sigma^2, lambda])
  double qv_ll = 0.0;  // TSQC([lambda, lambda])
  double rho_hat = 0.0;
  double beta_hat = 0.0;
  bool rho_defined = false;
  bool beta_defined = false;
  bool rho_clamped = false;
  std::optional<double> leverage;

  // metadata
  int k1 = 0;
  int gamma_ratio = 0;
  int blocks = 0;
  int preavg_m = 0;
  double count_scale = 1.0;
  long long tick_count = 0;
  long long sparse_blocks = 0;
};

struct EstimateConfig {
  int blocks = 390;
  int k1 = 10;
  int gamma_ratio = 2;
  int preavg_m = 0;  // 0 = ceil(sqrt(average ticks per block))
  int tsrv_k = 2;
  int tsrv_j = 1;
  double count_scale = 1.0;
  bool log_prices = false;
  double horizon = 1.0;
};

// Builds Theta-hat (block TSRV) and Lambda-hat (counts) from one day of
// ticks and evaluates the TSQC targets. Undefined rho/beta are recorded
// in the report flags rather than thrown.
EstimateReport estimate_day(const TickSeries& ticks,
                            const EstimateConfig& cfg);

int auto_preavg_window(std::size_t tick_count, int blocks);

}  // namespace qcov
