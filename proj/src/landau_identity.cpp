#include "expsum/landau_identity.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "expsum/kernels.hpp"

namespace expsum {

namespace {

constexpr double kSinFloor = 1e-12;

std::vector<double> b_values(const PhaseSequence& a) {
  if (a.size() < 2) {
    throw invalid_parameter("landau decomposition needs n >= 2");
  }
  const GapProfile g = gap_profile(a);
  std::vector<double> b(g.gaps.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    b[k] = kPi * g.gaps[k];
    if (std::abs(std::sin(b[k])) < kSinFloor) {
      throw degenerate_geometry("sin(b_" + std::to_string(k + 2) +
                                ") below 1e-12; gap too close to an integer");
    }
  }
  return b;
}

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

LandauDecomposition landau_decompose(const PhaseSequence& a) {
  LandauDecomposition d;
  d.b = b_values(a);
  const std::size_t n = a.size();
  const std::span<const double> ph = a.phases();

  // b[i] is b_{i+2}; e_k below uses 1-based k as in the displayed identity.
  const std::complex<double> e1 = unit_phase(ph[0]);
  const std::complex<double> en = unit_phase(ph[n - 1]);
  const double b2 = d.b.front();
  const double bn = d.b.back();
  d.head = e1 * times_i(cis(-b2)) / (2.0 * std::sin(b2));
  d.tail = -en * times_i(cis(bn)) / (2.0 * std::sin(bn));

  d.middle.resize(n >= 2 ? n - 2 : 0);
  const auto count = static_cast<std::ptrdiff_t>(d.middle.size());
#pragma omp parallel for schedule(static) if (count > 4096)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    // k = i + 2, phases are 0-based: e_k = unit_phase(ph[k-1]).
    const std::complex<double> ek = unit_phase(ph[i + 1]);
    const double ck = cot(d.b[i]) - cot(d.b[i + 1]);
    d.middle[i] = times_i(ek) * (-0.5 * ck);
  }

  std::complex<double> mid = sum_terms(d.middle);
  d.reconstruction = d.head + mid + d.tail;
  d.residual = std::abs(d.reconstruction - sum_unit_phases(ph));
  return d;
}

double verify_shift_identity(const PhaseSequence& a) {
  if (a.size() < 2) {
    throw invalid_parameter("shift identity needs n >= 2");
  }
  const std::span<const double> ph = a.phases();
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) \
    if (n > 4096)
  for (std::ptrdiff_t k = 1; k < n; ++k) {
    const double bk = kPi * (ph[k] - ph[k - 1]);
    const std::complex<double> lhs = unit_phase(ph[k]) * cis(-bk);
    const std::complex<double> rhs = unit_phase(ph[k - 1]) * cis(bk);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

HalfTurnResiduals verify_halfturn_identities(double b) {
  const double s = std::sin(b);
  if (std::abs(s) < kSinFloor) {
    throw degenerate_geometry("sin(b) below 1e-12");
  }
  const std::complex<double> common = times_i(cis(b)) / (2.0 * s);
  HalfTurnResiduals r;
  r.first = std::abs(1.0 + common - times_i(cis(-b)) / (2.0 * s));
  // -cos b / (2 i sin b) = i cos b / (2 sin b)
  const std::complex<double> rhs2{0.0, std::cos(b) / (2.0 * s)};
  r.second = std::abs(0.5 + common - rhs2);
  return r;
}

double refined_bound(const PhaseSequence& a) {
  if (a.size() < 2) {
    throw invalid_parameter("refined bound needs n >= 2");
  }
  const GapProfile g = gap_profile(a);
  for (std::size_t k = 0; k + 1 < g.gaps.size(); ++k) {
    if (g.gaps[k] > g.gaps[k + 1]) {
      throw non_monotone_gaps("refined bound requires non-decreasing gaps "
                              "(violated at gap " +
                              std::to_string(k + 1) + ")");
    }
  }
  if (!(g.gaps.front() > 0.0) || !(g.gaps.back() < 1.0)) {
    throw invalid_parameter("refined bound requires gaps in (0, 1)");
  }
  const double b2 = kPi * g.gaps.front();
  const double bn = kPi * g.gaps.back();
  return (1.0 + std::cos(b2)) / (2.0 * std::sin(b2)) +
         (1.0 - std::cos(bn)) / (2.0 * std::sin(bn));
}

}  // namespace expsum
