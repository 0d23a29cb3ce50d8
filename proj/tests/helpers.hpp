#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/grid.hpp"
#include "expsum/phase_sequence.hpp"

namespace testutil {

// Random admissible sequence with gaps on the dyadic grid, so that the
// recovered gap profile equals the drawn gaps bit for bit and admissibility
// holds with zero slack.
inline expsum::PhaseSequence random_admissible(std::size_t n, double theta,
                                               std::mt19937_64& rng,
                                               bool avoid_half = false) {
  std::vector<double> phases(n, 0.0);
  if (n < 2) return expsum::PhaseSequence(std::move(phases));

  const double h = expsum::grid_step(static_cast<double>(n) + 2.0);
  const double lo = expsum::ceil_to(h, theta);
  const double hi = expsum::floor_to(h, expsum::max_admissible_gap(theta));
  std::uniform_real_distribution<double> dist(lo, hi);

  std::vector<double> gaps(n - 1);
  for (auto& g : gaps) {
    g = std::clamp(expsum::round_to(h, dist(rng)), lo, hi);
    if (avoid_half && std::abs(g - 0.5) < 1e-8) {
      g = (g - h >= lo) ? g - h : g + h;
      g = std::clamp(g, lo, hi);
    }
  }
  std::sort(gaps.begin(), gaps.end());

  for (std::size_t k = 1; k < n; ++k) phases[k] = phases[k - 1] + gaps[k - 1];
  return expsum::PhaseSequence(std::move(phases));
}

inline double random_theta(std::mt19937_64& rng, double lo = 0.01,
                           double hi = 0.49) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

// Projection oracle: Dykstra's alternating projections onto the box
// [lo, hi]^m and the half-spaces {x_k <= x_{k+1}}.  Independent of the PAV
// route used by the library.
inline std::vector<double> dykstra_project(std::vector<double> x, double lo,
                                           double hi,
                                           std::size_t max_cycles = 20000) {
  const std::size_t m = x.size();
  if (m == 0) return x;
  const std::size_t sets = m;  // set 0 is the box, sets 1..m-1 order pairs
  std::vector<std::vector<double>> corr(sets, std::vector<double>(m, 0.0));

  for (std::size_t cycle = 0; cycle < max_cycles; ++cycle) {
    double moved = 0.0;
    for (std::size_t s = 0; s < sets; ++s) {
      std::vector<double> y = x;
      for (std::size_t k = 0; k < m; ++k) y[k] += corr[s][k];
      std::vector<double> p = y;
      if (s == 0) {
        for (auto& v : p) v = std::clamp(v, lo, hi);
      } else {
        const std::size_t k = s - 1;
        if (p[k] > p[k + 1]) {
          const double mean = 0.5 * (p[k] + p[k + 1]);
          p[k] = mean;
          p[k + 1] = mean;
        }
      }
      for (std::size_t k = 0; k < m; ++k) {
        corr[s][k] = y[k] - p[k];
        moved = std::max(moved, std::abs(p[k] - x[k]));
        x[k] = p[k];
      }
    }
    if (moved < 1e-13) break;
  }
  return x;
}

inline double l2_distance(const std::vector<double>& a,
                          const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace testutil
