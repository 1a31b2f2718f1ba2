#include "qcov/timegrid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcov {

namespace {

void check_window(int half_window, int blocks) {
  if (half_window < 1 || 2 * half_window > blocks) {
    throw std::invalid_argument("half-window K must satisfy 1 <= K <= B/2 (K=" +
                                std::to_string(half_window) +
                                ", B=" + std::to_string(blocks) + ")");
  }
}

void check_label(int label, int half_window) {
  if (label < 1 || label > 2 * half_window) {
    throw std::invalid_argument("residue class label must lie in 1..2K (l=" +
                                std::to_string(label) +
                                ", K=" + std::to_string(half_window) + ")");
  }
}

}  // namespace

bool BlockGrid::same_as(const BlockGrid& other) const {
  if (blocks != other.blocks) return false;
  const double scale = std::max(std::abs(horizon), std::abs(other.horizon));
  return std::abs(horizon - other.horizon) <= 1e-12 * scale;
}

BlockGrid build_grid(double horizon, int blocks) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("grid horizon must be positive and finite");
  }
  if (blocks < 2) {
    throw std::invalid_argument("grid needs at least 2 blocks, got " +
                                std::to_string(blocks));
  }
  BlockGrid g;
  g.horizon = horizon;
  g.blocks = blocks;
  g.delta = horizon / static_cast<double>(blocks);
  return g;
}

void validate_window(const WindowSpec& w, const BlockGrid& grid) {
  check_window(w.half_window, grid.blocks);
}

std::vector<int> residue_members(int label, int half_window, int blocks) {
  check_window(half_window, blocks);
  check_label(label, half_window);
  const int period = 2 * half_window;
  std::vector<int> members;
  // smallest i >= K with i = label (mod 2K)
  int first = label;
  while (first < half_window) first += period;
  for (int i = first; i <= blocks - half_window; i += period) {
    members.push_back(i);
  }
  return members;
}

namespace {

// The unique member i of the class with t_{i-K} <= s < t_{i+K}, or -1.
// Candidates live in [k-K+1, k+K] where k is the block of s; exactly one
// of those 2K consecutive integers matches the residue.
int window_member(double s, int label, int half_window, const BlockGrid& grid) {
  if (s < 0.0 || s >= grid.horizon) return -1;
  int k = static_cast<int>(std::floor(s / grid.delta));
  if (k >= grid.blocks) k = grid.blocks - 1;
  const int period = 2 * half_window;
  const int base = k - half_window + 1;
  int r = (label - base) % period;
  if (r < 0) r += period;
  const int i = base + r;
  if (i < half_window || i > grid.blocks - half_window) return -1;
  return i;
}

}  // namespace

double eval_f(double s, int label, int half_window, const BlockGrid& grid) {
  check_window(half_window, grid.blocks);
  check_label(label, half_window);
  const int i = window_member(s, label, half_window, grid);
  if (i < 0) return 0.0;
  const double t_i = grid.boundary(i);
  const double span = static_cast<double>(half_window) * grid.delta;
  if (s >= t_i) {
    return (grid.boundary(i + half_window) - s) / span;
  }
  return (s - grid.boundary(i - half_window)) / span;
}

double eval_g(double s, int label, int half_window, const BlockGrid& grid) {
  check_window(half_window, grid.blocks);
  check_label(label, half_window);
  const int i = window_member(s, label, half_window, grid);
  if (i < 0) return 0.0;
  return s >= grid.boundary(i) ? 1.0 : -1.0;
}

}  // namespace qcov
