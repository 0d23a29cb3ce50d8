#pragma once

#include <span>
#include <vector>

#include "expsum/errors.hpp"

namespace expsum {

// A finite strictly increasing sequence of real phases a_1 < ... < a_n,
// measured in cycles (one cycle = one full turn). Phases are kept exactly as
// given; nothing is reduced mod 1. Immutable after construction.
class PhaseSequence {
 public:
  // Throws invalid_parameter if the vector is empty, contains a non-finite
  // value, or is not strictly increasing.
  explicit PhaseSequence(std::vector<double> phases);

  std::size_t size() const noexcept { return phases_.size(); }
  std::span<const double> phases() const noexcept { return phases_; }
  double operator[](std::size_t k) const noexcept { return phases_[k]; }
  double front() const noexcept { return phases_.front(); }
  double back() const noexcept { return phases_.back(); }

 private:
  std::vector<double> phases_;
};

// Consecutive gaps delta_k = a_{k+1} - a_k, size n-1 (empty for n = 1).
struct GapProfile {
  std::vector<double> gaps;
};

GapProfile gap_profile(const PhaseSequence& a);

}  // namespace expsum
