#pragma once

#include <complex>
#include <cstddef>
#include <optional>

#include "expsum/phase_sequence.hpp"

namespace expsum {

// Result of checking the gap hypotheses "theta <= delta_1 <= ... <=
// delta_{n-1} <= 1-theta". theta_star is the largest theta the sequence is
// admissible for: min(delta_1, 1 - delta_{n-1}) clamped to [0, 1/2], 0 when
// the gaps are not monotone, and 1/2 when n = 1 (vacuous conditions).
// first_violation is the 1-based index of the first k with delta_k >
// delta_{k+1}, empty when monotone.
struct AdmissibilityReport {
  double theta = 0.0;
  bool monotone = false;
  double theta_star = 0.0;
  std::optional<std::size_t> first_violation;
  bool admissible = false;
};

// Thrown by operations whose precondition is an admissible sequence.
class not_admissible : public error {
 public:
  explicit not_admissible(AdmissibilityReport report);
  const AdmissibilityReport& report() const noexcept { return report_; }

 private:
  AdmissibilityReport report_;
};

// All comparisons are exact floating <=; gaps may sit exactly at theta or at
// 1-theta. Throws invalid_parameter unless 0 < theta <= 1/2.
AdmissibilityReport check_admissible(const PhaseSequence& a, double theta);

// Same check on a raw gap vector (used by the search, which iterates in gap
// coordinates).
AdmissibilityReport check_admissible_gaps(std::span<const double> gaps,
                                          double theta);

// Largest gap value g with theta <= 1 - g under double rounding, i.e. the
// top of the admissible window as the exact comparisons see it.
double max_admissible_gap(double theta);

// Sum of e^{2 pi i a_k}, compensated.
std::complex<double> exp_sum(const PhaseSequence& a);

// The five scalar bounds at theta: cot(pi theta/2), 2/sin(pi theta), 1/theta,
// 2/(pi theta) and the false claim 1/(pi theta) + 1.
struct BoundLadder {
  double landau = 0.0;
  double kuzmin = 0.0;
  double simple = 0.0;
  double two_over_pi_theta = 0.0;
  double false_claim = 0.0;
};

BoundLadder bound_ladder(double theta);

// cot(pi*theta/2), the sharp constant.
double sharp_bound(double theta);

struct BoundFlags {
  bool landau = false;
  bool kuzmin = false;
  bool simple = false;
  bool two_over_pi_theta = false;
  bool false_claim = false;
  bool refined = false;
};

struct BoundReport {
  std::size_t n = 0;
  double theta = 0.0;
  std::complex<double> sum;
  double abs_sum = 0.0;
  BoundLadder ladder;
  // Sequence-dependent refined bound; absent when n = 1 (no gaps).
  std::optional<double> refined;
  BoundFlags flags;
};

// Full report for an admissible sequence. Throws not_admissible otherwise.
// Flags test abs_sum <= bound + 1e-9.
BoundReport bound_report(const PhaseSequence& a, double theta);

}  // namespace expsum
