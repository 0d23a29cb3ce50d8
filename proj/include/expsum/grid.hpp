#pragma once

#include <cmath>

// Power-of-two phase grids. With h = 2^(e-52) and all values kept below 2^e,
// every multiple of h is an exact double and sums of such multiples stay
// exact, so gap profiles built on the grid have zero floating wobble.

namespace expsum {

// Grid step for values bounded by `scale` in magnitude.
inline double grid_step(double scale) {
  int e = 1;
  double pow2 = 2.0;
  while (pow2 < scale) {
    pow2 *= 2.0;
    ++e;
  }
  return std::ldexp(1.0, e - 52);
}

// Smallest grid multiple >= x. Exact: x/h is a power-of-two scaling.
inline double ceil_to(double h, double x) { return std::ceil(x / h) * h; }

// Largest grid multiple <= x.
inline double floor_to(double h, double x) { return std::floor(x / h) * h; }

// Nearest grid multiple.
inline double round_to(double h, double x) {
  return std::nearbyint(x / h) * h;
}

}  // namespace expsum
