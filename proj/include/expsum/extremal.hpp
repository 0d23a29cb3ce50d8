#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/phase_sequence.hpp"

namespace expsum {

// A fraction (2M+1)/(2N+1) with both parts odd, stored in lowest terms.
struct OddFraction {
  std::int64_t num = 1;
  std::int64_t den = 3;

  // Validates both parts odd and positive and reduces; value in (0, 1/2)
  // is NOT enforced here (1/1 is a legal odd/odd fraction), callers that
  // need the extremal range check it.
  static OddFraction make(std::int64_t p, std::int64_t q);

  double value() const { return static_cast<double>(num) / den; }
  std::int64_t m() const { return (num - 1) / 2; }
  std::int64_t n_steps() const { return (den - 1) / 2; }
};

struct ExtremalWitness {
  double theta = 0.0;                       // the theta the witness answers
  std::optional<OddFraction> theta_prime;   // fraction actually constructed
  PhaseSequence sequence;
  double abs_sum = 0.0;
  double target = 0.0;                      // cot(pi theta / 2)
  bool attained = false;                    // |abs_sum - target| <= 1e-9
};

// The 2N+1 phases a_k = k theta (0 <= k <= N), N theta + (k-N)(1-theta)
// (N <= k <= 2N). Gap values land exactly on a dyadic grid so the profile
// has exactly two distinct values and admissibility holds with zero slack.
// Requires 0 < value < 1/2.
ExtremalWitness extremal_sequence(const OddFraction& f);

// The theta = 1/2 witness [0, 1/2, 1] with |S| = 1.
ExtremalWitness extremal_half();

// Smallest-odd-denominator odd/odd fraction strictly inside (lo, hi), ties
// by smallest numerator. Requires 0 < lo < hi <= 1/2.
OddFraction odd_fraction_in(double lo, double hi);

// Near-extremal witness: picks theta' = odd_fraction_in(theta, hi) with
// hi shrinking toward theta until cot(pi theta'/2) > cot(pi theta/2) - eps,
// then builds extremal_sequence(theta'). The result is admissible for the
// requested theta and clears the target minus eps. theta = 1/2 returns
// extremal_half().
ExtremalWitness near_extremal(double theta, double eps);

// True iff |exp_sum(a)| >= cot(pi theta/2) - 1e-9. Throws not_admissible.
bool attainment_check(const PhaseSequence& a, double theta);

struct FalseBoundReport {
  bool found = false;
  double theta = 0.0;                       // requested
  std::optional<OddFraction> theta_prime;   // witness fraction when found
  std::optional<PhaseSequence> witness;
  double abs_sum = 0.0;                     // recomputed from the phases
  double false_bound = 0.0;                 // 1/(pi t) + 1 at theta_prime
  double sharp = 0.0;                       // cot(pi t / 2) at theta_prime
  double margin = 0.0;                      // abs_sum - false_bound
  double crossing = 0.0;                    // where cot(pi t/2) = 1/(pi t)+1
};

// Counterexample to the claim |S| <= 1/(pi theta) + 1: searches odd/odd
// theta' <= theta whose extremal witness beats the claimed bound, with the
// margin recomputed from the raw phases. found = false when theta' does not
// exist below the crossing within the enumeration cap.
FalseBoundReport refute_false_bound(double theta);

struct BestConstantRow {
  std::int64_t j = 0;
  double theta = 0.0;   // 1/(2j+1)
  double value = 0.0;   // theta * |S| of the extremal witness
};

// theta_j * |S| for j = 1 ... j_max, increasing toward 2/pi.
std::vector<BestConstantRow> best_constant_scan(std::int64_t j_max);

}  // namespace expsum
