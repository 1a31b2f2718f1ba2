// Block-grid construction, residue-class index arithmetic and the
// deterministic tent / sign weight functions used by the rolling
// second-difference estimators and their exact-representation oracle.
#pragma once

#include <vector>

namespace qcov {

// Equispaced partition of [0, T] into B blocks of length delta = T/B.
// Boundaries are computed as i * delta (never by cumulative addition) so
// the partition is exact.
struct BlockGrid {
  double horizon = 0.0;  // T
  int blocks = 0;        // B
  double delta = 0.0;    // T / B

  double boundary(int i) const { return static_cast<double>(i) * delta; }
  bool same_as(const BlockGrid& other) const;
};

// throws std::invalid_argument unless T > 0 and B >= 2
BlockGrid build_grid(double horizon, int blocks);

// Half-window size K in blocks, valid when 1 <= K <= B/2.
struct WindowSpec {
  int half_window = 1;
};

void validate_window(const WindowSpec& w, const BlockGrid& grid);

// Ascending indices i in [K, B-K] with i == 2K*j + l, i.e. the residue
// class i = l (mod 2K). Classes l = 1..2K partition {K, ..., B-K}.
std::vector<int> residue_members(int label, int half_window, int blocks);

// Tent weight f_s for residue class `label`: rises linearly on
// [t_{i-K}, t_i), falls on [t_i, t_{i+K}), for the unique class member i
// whose window contains s. Zero outside all windows; s == T gives 0.
double eval_f(double s, int label, int half_window, const BlockGrid& grid);

// Sign weight g_s: +1 on [t_i, t_{i+K}), -1 on [t_{i-K}, t_i), 0 outside.
double eval_g(double s, int label, int half_window, const BlockGrid& grid);

}  // namespace qcov
