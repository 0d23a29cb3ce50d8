#pragma once

#include <complex>
#include <vector>

#include "expsum/phase_sequence.hpp"

namespace expsum {

// Landau's three-group telescoping of S = sum e^{2 pi i a_k} under the
// change of variables b_k = pi (a_k - a_{k-1}):
//
//   S = e_1 i e^{-i b_2} / (2 sin b_2)
//       - (i/2) sum_{k=2}^{n-1} e_k (cot b_k - cot b_{k+1})
//       - e_n i e^{i b_n} / (2 sin b_n)
//
// with e_k = e^{2 pi i a_k}. The decomposition is algebraic: it holds for any
// strictly increasing phases with sin b_k != 0, admissible or not.
struct LandauDecomposition {
  std::vector<double> b;                       // b_2 ... b_n, radians
  std::complex<double> head;
  std::vector<std::complex<double>> middle;    // k = 2 ... n-1
  std::complex<double> tail;
  std::complex<double> reconstruction;         // head + sum middle + tail
  double residual = 0.0;                       // |reconstruction - exp_sum(a)|
};

// Throws invalid_parameter for n < 2, degenerate_geometry when some
// |sin b_k| < 1e-12.
LandauDecomposition landau_decompose(const PhaseSequence& a);

// max over k = 2..n of |e_k e^{-i b_k} - e_{k-1} e^{i b_k}|; the midpoint
// symmetry the proof's second line rests on. n >= 2 required.
double verify_shift_identity(const PhaseSequence& a);

// Residuals of the two half-turn identities used in the remark, in corrected
// form (the right-hand side of the first carries e^{-i b}):
//   1 + i e^{i b}/(2 sin b)   = i e^{-i b}/(2 sin b)
//   1/2 + i e^{i b}/(2 sin b) = -cos b/(2 i sin b)
struct HalfTurnResiduals {
  double first = 0.0;
  double second = 0.0;
};

HalfTurnResiduals verify_halfturn_identities(double b);

// (1 + cos b_2)/(2 sin b_2) + (1 - cos b_n)/(2 sin b_n), the per-sequence
// bound Landau's proof ends with. Requires n >= 2, gaps in (0, 1) and
// non-decreasing (throws non_monotone_gaps otherwise).
double refined_bound(const PhaseSequence& a);

}  // namespace expsum
