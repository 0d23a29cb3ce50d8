#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/extremal.hpp"
#include "expsum/phase_sequence.hpp"

namespace expsum {

// Projected gradient ascent on |S|^2 over the admissible gap set for fixed
// (n, theta). Parametrized by (a1, gaps); a1 is a flat direction (global
// phase) and is pinned to 0 in reports.
struct SearchConfig {
  std::size_t n = 3;
  double theta = 0.25;
  // Exact fraction behind theta when the caller knows it (used only to let
  // the constructive seed recognize an odd/odd theta).
  std::optional<OddFraction> theta_fraction;
  int restarts = 32;
  int max_iters = 5000;
  double step_init = 0.1;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  bool construction_seed = true;
};

struct RestartSummary {
  int index = 0;
  double abs_sum = 0.0;
  int iterations = 0;
  bool seeded = false;     // the near-extremal construction start
  bool converged = false;  // step size underflowed tol
};

struct SearchResult {
  PhaseSequence best_sequence;
  double best_abs_sum = 0.0;
  double target = 0.0;         // cot(pi theta / 2)
  double gap_to_target = 0.0;  // target - best_abs_sum
  int iterations_used = 0;     // iterations of the winning restart
  int restarts_used = 0;
  bool converged = false;
  int best_restart = 0;
  std::vector<RestartSummary> restarts;
};

struct Objective {
  double value = 0.0;  // |S|^2
  double d_a1 = 0.0;
  std::vector<double> d_gaps;
};

// |S|^2 and its exact partials at phases a_k = a1 + sum_{j<k} gaps_j.
// d|S|^2/d a_k = -4 pi Im(conj(S) e^{2 pi i a_k}); gap partials are suffix
// sums of the phase partials.
Objective objective_and_gradient(double a1, std::span<const double> gaps);

// Euclidean projection onto {theta <= g_1 <= ... <= g_{n-1} <= 1 - theta}:
// pool-adjacent-violators followed by clamping, iterated to a fixed point.
std::vector<double> project_admissible(std::vector<double> gaps, double theta);

// Multi-start ascent. Deterministic for a fixed config: restarts draw from
// per-index seeded generators and merge by maximum with lowest-index
// tie-breaking, so the result does not depend on execution order.
SearchResult maximize(const SearchConfig& config);

}  // namespace expsum
