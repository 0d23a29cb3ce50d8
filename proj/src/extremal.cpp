#include "expsum/extremal.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "expsum/grid.hpp"
#include "expsum/kernels.hpp"

namespace expsum {

namespace {

constexpr std::int64_t kMaxDenominator = 2'000'001;

double false_bound_at(double t) { return 1.0 / (kPi * t) + 1.0; }

}  // namespace

OddFraction OddFraction::make(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0 || p % 2 == 0 || q % 2 == 0) {
    throw invalid_parameter("odd/odd fraction needs positive odd numerator "
                            "and denominator");
  }
  const std::int64_t g = std::gcd(p, q);
  return OddFraction{p / g, q / g};
}

ExtremalWitness extremal_sequence(const OddFraction& f) {
  const double theta = f.value();
  if (!(theta > 0.0) || !(theta < 0.5)) {
    throw invalid_parameter("extremal construction needs 0 < value < 1/2");
  }
  if (f.den > kMaxDenominator) {
    throw invalid_parameter("denominator exceeds construction cap");
  }
  const std::int64_t n_steps = f.n_steps();
  const double h = grid_step(static_cast<double>(n_steps) + 2.0);
  const double g1 = ceil_to(h, theta);
  const double g2 = floor_to(h, max_admissible_gap(theta));

  std::vector<double> phases(static_cast<std::size_t>(2 * n_steps) + 1);
  phases[0] = 0.0;
  for (std::int64_t k = 1; k <= n_steps; ++k) {
    phases[k] = phases[k - 1] + g1;
  }
  for (std::int64_t k = n_steps + 1; k <= 2 * n_steps; ++k) {
    phases[k] = phases[k - 1] + g2;
  }

  PhaseSequence seq(std::move(phases));
  const double abs_sum = std::abs(exp_sum(seq));
  const double target = sharp_bound(theta);
  return ExtremalWitness{theta, f, std::move(seq), abs_sum, target,
                         std::abs(abs_sum - target) <= 1e-9};
}

ExtremalWitness extremal_half() {
  PhaseSequence seq(std::vector<double>{0.0, 0.5, 1.0});
  const double abs_sum = std::abs(exp_sum(seq));
  const double target = sharp_bound(0.5);
  return ExtremalWitness{0.5, std::nullopt, std::move(seq), abs_sum, target,
                         std::abs(abs_sum - target) <= 1e-9};
}

OddFraction odd_fraction_in(double lo, double hi) {
  if (!(lo > 0.0) || !(lo < hi) || !(hi <= 0.5)) {
    throw invalid_parameter("odd_fraction_in needs 0 < lo < hi <= 1/2");
  }
  for (std::int64_t q = 3; q <= kMaxDenominator; q += 2) {
    std::int64_t p =
        static_cast<std::int64_t>(std::floor(lo * static_cast<double>(q))) - 2;
    if (p < 1) p = 1;
    if (p % 2 == 0) ++p;
    while (static_cast<double>(p) / static_cast<double>(q) <= lo) p += 2;
    if (static_cast<double>(p) / static_cast<double>(q) < hi) {
      return OddFraction::make(p, q);
    }
  }
  throw invalid_parameter("no odd/odd fraction in the interval within the "
                          "denominator cap");
}

ExtremalWitness near_extremal(double theta, double eps) {
  if (!(eps > 0.0)) {
    throw invalid_parameter("epsilon must be positive");
  }
  if (!(theta > 0.0) || !(theta <= 0.5)) {
    throw invalid_parameter("theta must lie in (0, 1/2]");
  }
  if (theta == 0.5) return extremal_half();

  const double target = sharp_bound(theta);
  double hi = 0.5;
  for (int round = 0; round < 512; ++round) {
    const OddFraction f = odd_fraction_in(theta, hi);
    if (sharp_bound(f.value()) > target - eps) {
      ExtremalWitness w = extremal_sequence(f);
      if (w.abs_sum > target - eps) {
        w.theta = theta;
        w.target = target;
        w.attained = std::abs(w.abs_sum - target) <= 1e-9;
        return w;
      }
    }
    hi = theta + 0.5 * (hi - theta);
  }
  throw error("near_extremal could not localize a suitable fraction");
}

bool attainment_check(const PhaseSequence& a, double theta) {
  const AdmissibilityReport adm = check_admissible(a, theta);
  if (!adm.admissible) throw not_admissible(adm);
  return std::abs(exp_sum(a)) >= sharp_bound(theta) - 1e-9;
}

FalseBoundReport refute_false_bound(double theta) {
  if (!(theta > 0.0) || !(theta <= 0.5)) {
    throw invalid_parameter("theta must lie in (0, 1/2]");
  }
  FalseBoundReport r;
  r.theta = theta;

  // cot(pi t/2) - (1/(pi t) + 1) decreases on (0, 1/2); bisect its zero.
  double lo = 1e-3, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sharp_bound(mid) - false_bound_at(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  r.crossing = 0.5 * (lo + hi);

  for (std::int64_t q = 3; q <= 9999; q += 2) {
    std::int64_t p =
        static_cast<std::int64_t>(std::floor(theta * static_cast<double>(q))) +
        2;
    if (p % 2 == 0) --p;
    while (p >= 1 &&
           static_cast<double>(p) / static_cast<double>(q) > theta) {
      p -= 2;
    }
    if (p < 1) continue;
    const double t = static_cast<double>(p) / static_cast<double>(q);
    if (sharp_bound(t) <= false_bound_at(t)) continue;

    const OddFraction f = OddFraction::make(p, q);
    ExtremalWitness w = extremal_sequence(f);
    const double abs_sum = std::abs(exp_sum(w.sequence));
    const double fb = false_bound_at(f.value());
    if (abs_sum - fb > 0.0) {
      r.found = true;
      r.theta_prime = f;
      r.abs_sum = abs_sum;
      r.false_bound = fb;
      r.sharp = sharp_bound(f.value());
      r.margin = abs_sum - fb;
      r.witness = std::move(w.sequence);
      return r;
    }
  }

  r.found = false;
  r.sharp = sharp_bound(theta);
  r.false_bound = false_bound_at(theta);
  r.margin = r.sharp - r.false_bound;
  return r;
}

std::vector<BestConstantRow> best_constant_scan(std::int64_t j_max) {
  if (j_max < 1) throw invalid_parameter("j_max must be >= 1");
  std::vector<BestConstantRow> rows;
  rows.reserve(static_cast<std::size_t>(j_max));
  for (std::int64_t j = 1; j <= j_max; ++j) {
    const OddFraction f = OddFraction::make(1, 2 * j + 1);
    const ExtremalWitness w = extremal_sequence(f);
    rows.push_back(BestConstantRow{j, f.value(), f.value() * w.abs_sum});
  }
  return rows;
}

}  // namespace expsum
