#pragma once

#include <complex>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/phase_sequence.hpp"

namespace expsum {

// The polygon of partial sums A_0 = 0, A_m = sum_{k<=m} e^{2 pi i a_k} and
// the circumcenter chain C_m of consecutive vertex triples, the objects of
// Kuzmin's proof. Points are complex numbers standing for plane points.
struct ChainGeometry {
  std::vector<std::complex<double>> partial_sums;  // A_0 ... A_n
  std::vector<std::complex<double>> midpoints;     // M_1 ... M_n
  std::vector<std::complex<double>> centers;       // C_1 ... C_{n-1}
  std::vector<double> gaps;                        // delta_1 ... delta_{n-1}
  std::vector<double> turn_angles;                 // 2 pi delta_m, radians
  std::vector<double> radii;                       // R_m = |A_m - C_m|
  double unit_step_residual = 0.0;        // max | |A_m - A_{m-1}| - 1 |
  double circumradius_agreement = 0.0;    // max pairwise radius mismatch
};

// Builds the chain. Circumcenters come from intersecting perpendicular
// bisectors, solved as a 2x2 linear system. Throws invalid_parameter for
// n < 2 and degenerate_geometry when a triple is collinear (|sin(pi delta)|
// < 1e-12) or the bisector system is singular (doubled-back step,
// delta = 1/2 makes A_{m+1} coincide with A_{m-1}).
ChainGeometry build_chain(const PhaseSequence& a);

// max over m of | R_m - (1/2) csc(theta_m / 2) |, theta_m/2 = pi delta_m.
double verify_radius_identity(const ChainGeometry& g);

// max over m = 1 ... n-2 of
// | |C_{m+1} - C_m| - (1/2)(cot(pi delta_m) - cot(pi delta_{m+1})) |.
// Meaningful for chains built from non-decreasing gaps.
double verify_center_spacing(const ChainGeometry& g);

// Residual of A_n - A_0 = (A_n - C_{n-1}) + sum_{m=2}^{n-1}(C_m - C_{m-1})
// + (C_1 - A_0). Exact telescoping; the residual is pure floating error.
// Requires n >= 3 (two centers).
double verify_telescoping(const ChainGeometry& g);

// The three lengths whose sum bounds |A_n| by the triangle inequality.
struct BoundTrace {
  double first_leg = 0.0;     // |C_1 - A_0|
  double center_path = 0.0;   // sum |C_m - C_{m-1}|
  double last_leg = 0.0;      // |A_n - C_{n-1}|
  double total = 0.0;
  double abs_sum = 0.0;       // |A_n|
};

// Requires the chain's sequence admissible for theta and n >= 3; throws
// not_admissible / invalid_parameter. For monotone gaps the total telescopes
// to (1 + cos(pi delta_1))/(2 sin(pi delta_1)) +
// (1 - cos(pi delta_{n-1}))/(2 sin(pi delta_{n-1})), the refined bound.
BoundTrace kuzmin_bound_trace(const ChainGeometry& g, double theta);

}  // namespace expsum
