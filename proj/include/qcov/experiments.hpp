// Monte Carlo harness: the deviance study over K1, the convergence-rate
// ladder, and the multi-day empirical driver. Replicates are independent
// work units with derived seeds; outputs are keyed and sorted so results
// do not depend on scheduling.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcov/estimators.hpp"
#include "qcov/simulate.hpp"

namespace qcov {

struct McConfig {
  ModelParams model = ModelParams::desk_preset();
  int reps = 100;
  std::vector<int> k1_list = {5, 10, 20, 40, 80};
  int gamma_ratio = 2;
  int blocks = 390;
  int preavg_m = 0;  // 0 = auto bandwidth
  int tsrv_k = 2;
  int tsrv_j = 1;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
};

struct DevianceRow {
  int k1 = 0;
  int rep = 0;
  std::string target;  // "qcv_sl", "rho" or "beta"
  double estimate = 0.0;
  double truth = 0.0;
  double deviance = 0.0;
  std::string flag;  // "ok", "clamped" or "undefined"
};

// One fresh simulated day per (K1, rep); emits rows for the three targets.
// Undefined rho/beta become flagged rows, never aborts.
std::vector<DevianceRow> run_mc_deviance(const McConfig& cfg);

// Mean deviance and Monte Carlo standard error for one (k1, target) cell,
// over rows whose flag is not "undefined".
struct DevianceSummary {
  int k1 = 0;
  std::string target;
  int defined = 0;
  double mean_deviance = 0.0;
  double mc_se = 0.0;
};

std::vector<DevianceSummary> summarize_deviance(
    const std::vector<DevianceRow>& rows);

void write_deviance_csv(const std::string& path,
                        const std::vector<DevianceRow>& rows);

struct RateConfig {
  ModelParams model = ModelParams::desk_preset();
  int reps = 200;
  int half_window = 256;            // K held fixed across the ladder
  std::vector<int> log2_kdelta = {-9, -8, -7, -6, -5, -4};
  long long fine_steps = 1 << 18;   // simulation grid for the latent pair
  std::uint64_t seed = 1;
  int threads = 0;
};

struct RatePoint {
  double log2_kdelta = 0.0;
  double log2_rmse = 0.0;
};

struct RateResult {
  std::vector<RatePoint> points;
  double slope = 0.0;  // least-squares slope of log2 RMSE on log2 KDelta
};

// Latent-path mode: Theta, Lambda are exact (trapezoid) integrals of the
// simulated spot paths; no estimation noise. RMSE of qv_scaled against
// the fine-grid covariation at each ladder point. Throws
// std::invalid_argument with fewer than 3 ladder points.
RateResult run_rate_experiment(const RateConfig& cfg);

void write_slopes_csv(const std::string& path, const RateResult& result);

struct DailyRow {
  std::string day;  // input file stem
  EstimateReport report;
  std::string error;  // nonempty when the day failed outright
};

// One EstimateReport per cleaned tick file; per-day failures are recorded
// and the run continues.
std::vector<DailyRow> run_empirical(const std::vector<std::string>& files,
                                    const EstimateConfig& cfg);

void write_daily_csv(const std::string& path,
                     const std::vector<DailyRow>& rows);

}  // namespace qcov
