#include "expsum/core.hpp"

#include <algorithm>
#include <cmath>

#include "expsum/kernels.hpp"
#include "expsum/landau_identity.hpp"

namespace expsum {

namespace {

constexpr double kFlagTol = 1e-9;

void require_theta(double theta) {
  if (!(theta > 0.0) || !(theta <= 0.5) || !std::isfinite(theta)) {
    throw invalid_parameter("theta must lie in (0, 1/2]");
  }
}

AdmissibilityReport check_gaps(std::span<const double> gaps, double theta) {
  require_theta(theta);
  AdmissibilityReport rep;
  rep.theta = theta;
  rep.monotone = true;
  if (gaps.empty()) {
    // n = 1: the gap conditions are vacuous and every valid theta works.
    rep.theta_star = 0.5;
    rep.admissible = true;
    return rep;
  }
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
    if (gaps[k] > gaps[k + 1]) {
      rep.monotone = false;
      rep.first_violation = k + 1;
      break;
    }
  }
  if (!rep.monotone) {
    rep.theta_star = 0.0;
    rep.admissible = false;
    return rep;
  }
  const double star = std::min(gaps.front(), 1.0 - gaps.back());
  rep.theta_star = std::clamp(star, 0.0, 0.5);
  rep.admissible = theta <= rep.theta_star;
  return rep;
}

}  // namespace

not_admissible::not_admissible(AdmissibilityReport report)
    : error("sequence not admissible for theta"), report_(std::move(report)) {}

AdmissibilityReport check_admissible(const PhaseSequence& a, double theta) {
  return check_gaps(gap_profile(a).gaps, theta);
}

AdmissibilityReport check_admissible_gaps(std::span<const double> gaps,
                                          double theta) {
  return check_gaps(gaps, theta);
}

double max_admissible_gap(double theta) {
  require_theta(theta);
  double g = 1.0 - theta;
  while (1.0 - g < theta) g = std::nextafter(g, 0.0);
  return g;
}

std::complex<double> exp_sum(const PhaseSequence& a) {
  return sum_unit_phases(a.phases());
}

double sharp_bound(double theta) {
  require_theta(theta);
  const double h = 0.5 * kPi * theta;
  return std::cos(h) / std::sin(h);
}

BoundLadder bound_ladder(double theta) {
  require_theta(theta);
  BoundLadder b;
  b.landau = sharp_bound(theta);
  b.kuzmin = 2.0 / std::sin(kPi * theta);
  b.simple = 1.0 / theta;
  b.two_over_pi_theta = 2.0 / (kPi * theta);
  b.false_claim = 1.0 / (kPi * theta) + 1.0;
  return b;
}

BoundReport bound_report(const PhaseSequence& a, double theta) {
  const AdmissibilityReport adm = check_admissible(a, theta);
  if (!adm.admissible) throw not_admissible(adm);

  BoundReport rep;
  rep.n = a.size();
  rep.theta = theta;
  rep.sum = exp_sum(a);
  rep.abs_sum = std::abs(rep.sum);
  rep.ladder = bound_ladder(theta);
  if (a.size() >= 2) rep.refined = refined_bound(a);

  const auto ok = [&](double bound) { return rep.abs_sum <= bound + kFlagTol; };
  rep.flags.landau = ok(rep.ladder.landau);
  rep.flags.kuzmin = ok(rep.ladder.kuzmin);
  rep.flags.simple = ok(rep.ladder.simple);
  rep.flags.two_over_pi_theta = ok(rep.ladder.two_over_pi_theta);
  rep.flags.false_claim = ok(rep.ladder.false_claim);
  rep.flags.refined = !rep.refined || ok(*rep.refined);
  return rep;
}

}  // namespace expsum
