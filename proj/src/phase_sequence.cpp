#include "expsum/phase_sequence.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace expsum {

PhaseSequence::PhaseSequence(std::vector<double> phases)
    : phases_(std::move(phases)) {
  if (phases_.empty()) {
    throw invalid_parameter("phase sequence must contain at least one phase");
  }
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    if (!std::isfinite(phases_[k])) {
      throw invalid_parameter("phase " + std::to_string(k + 1) +
                              " is not finite");
    }
    if (k > 0 && !(phases_[k - 1] < phases_[k])) {
      throw invalid_parameter("phases must be strictly increasing (violated "
                              "at index " +
                              std::to_string(k + 1) + ")");
    }
  }
}

GapProfile gap_profile(const PhaseSequence& a) {
  GapProfile g;
  if (a.size() < 2) return g;
  g.gaps.resize(a.size() - 1);
  const std::span<const double> p = a.phases();
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    g.gaps[k] = p[k + 1] - p[k];
  }
  return g;
}

}  // namespace expsum
