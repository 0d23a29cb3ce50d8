#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

// Numeric kernels shared by every module. The parallel entry points cut the
// input into fixed-size blocks and merge the per-block accumulators in block
// order, so results are bit-identical for any thread count (including 1).

namespace expsum {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Neumaier variant of compensated summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum);
    add(other.comp);
  }

  double value() const { return sum + comp; }
};

// e^{2 pi i x} for a phase x in cycles. The argument is reduced mod 1 to
// [-1/2, 1/2] before scaling; exact-integer phases map to exactly (1, 0).
inline std::complex<double> unit_phase(double cycles) {
  const double r = cycles - std::nearbyint(cycles);
  const double t = kTwoPi * r;
  return {std::cos(t), std::sin(t)};
}

// e^{i t} for t already in radians, no reduction.
inline std::complex<double> cis(double radians) {
  return {std::cos(radians), std::sin(radians)};
}

// Multiplication by i without going through complex arithmetic.
inline std::complex<double> times_i(std::complex<double> z) {
  return {-z.imag(), z.real()};
}

// Sum of e^{2 pi i a_k} over the whole span. Deterministic blocked parallel
// reduction with Neumaier accumulators per block.
std::complex<double> sum_unit_phases(std::span<const double> cycles);

// Same reduction over precomputed complex terms.
std::complex<double> sum_terms(std::span<const std::complex<double>> terms);

// Partial sums A_0 = 0, A_m = sum_{k<m} e^{2 pi i a_k}; returns n+1 entries.
std::vector<std::complex<double>> partial_sums(std::span<const double> cycles);

namespace ref {

// Serial long double references for the kernels above. Kept independent of
// the blocked code paths so tests can compare the two.
std::complex<double> sum_unit_phases(std::span<const double> cycles);
std::vector<std::complex<double>> partial_sums(std::span<const double> cycles);

}  // namespace ref

}  // namespace expsum
