#include "expsum/kuzmin_geometry.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <string>

#include "expsum/kernels.hpp"

namespace expsum {

namespace {

constexpr double kSinFloor = 1e-12;
constexpr double kDetFloor = 1e-12;

// Circumcenter of (p, q, r) relative to q, from the bisector conditions
// c.u = |u|^2/2 and c.v = |v|^2/2 with u = p - q, v = r - q. The second row
// is replaced by the difference d = v - u, which keeps the determinant
// cross(u, v) accurate when u and v nearly coincide. Returns false on a
// singular system.
bool circumcenter_offset(std::complex<double> u, std::complex<double> v,
                         std::complex<double>& out) {
  const std::complex<double> d = v - u;
  const double det = u.real() * d.imag() - u.imag() * d.real();
  if (std::abs(det) < kDetFloor) return false;
  const double ru = 0.5 * std::norm(u);
  const double rd = 0.5 * (d.real() * (u.real() + v.real()) +
                           d.imag() * (u.imag() + v.imag()));
  out = {(ru * d.imag() - rd * u.imag()) / det,
         (u.real() * rd - d.real() * ru) / det};
  return true;
}

}  // namespace

ChainGeometry build_chain(const PhaseSequence& a) {
  if (a.size() < 2) {
    throw invalid_parameter("chain needs n >= 2 (no center exists otherwise)");
  }
  ChainGeometry g;
  g.partial_sums = partial_sums(a.phases());
  g.gaps = gap_profile(a).gaps;
  const std::size_t n = a.size();

  g.turn_angles.resize(n - 1);
  for (std::size_t m = 0; m < n - 1; ++m) {
    g.turn_angles[m] = kTwoPi * g.gaps[m];
    if (std::abs(std::sin(kPi * g.gaps[m])) < kSinFloor) {
      throw degenerate_geometry(
          "collinear triple at gap " + std::to_string(m + 1) +
          ": |sin(pi delta)| < 1e-12 (delta too close to an integer)");
    }
  }

  g.midpoints.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    g.midpoints[m] = 0.5 * (g.partial_sums[m] + g.partial_sums[m + 1]);
  }

  g.centers.resize(n - 1);
  g.radii.resize(n - 1);
  const auto nc = static_cast<std::ptrdiff_t>(n - 1);
  std::atomic<std::ptrdiff_t> singular{-1};
  double unit_res = 0.0;
  double agree = 0.0;
#pragma omp parallel for schedule(static) \
    reduction(max : unit_res, agree) if (nc > 2048)
  for (std::ptrdiff_t i = 0; i < nc; ++i) {
    const std::complex<double> am1 = g.partial_sums[i];
    const std::complex<double> am = g.partial_sums[i + 1];
    const std::complex<double> ap1 = g.partial_sums[i + 2];
    std::complex<double> c_rel;
    if (!circumcenter_offset(am1 - am, ap1 - am, c_rel)) {
      std::ptrdiff_t expected = -1;
      while (!singular.compare_exchange_weak(expected, i) && expected < i) {
        // keep the smallest failing index
      }
      continue;
    }
    g.centers[i] = am + c_rel;
    g.radii[i] = std::abs(c_rel);
    agree = std::max(agree, std::abs(std::abs(g.centers[i] - am1) - g.radii[i]));
    agree = std::max(agree, std::abs(std::abs(g.centers[i] - ap1) - g.radii[i]));
    unit_res = std::max(unit_res, std::abs(std::abs(am - am1) - 1.0));
  }
  if (singular.load() >= 0) {
    throw degenerate_geometry(
        "singular bisector system at gap " +
        std::to_string(singular.load() + 1) +
        " (doubled-back step: delta = 1/2 collapses the triple)");
  }
  // the loop above covers steps 1..n-1; the last step n has no center
  unit_res = std::max(
      unit_res,
      std::abs(std::abs(g.partial_sums[n] - g.partial_sums[n - 1]) - 1.0));
  g.unit_step_residual = unit_res;
  g.circumradius_agreement = agree;
  return g;
}

double verify_radius_identity(const ChainGeometry& g) {
  const auto nc = static_cast<std::ptrdiff_t>(g.centers.size());
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) \
    if (nc > 4096)
  for (std::ptrdiff_t i = 0; i < nc; ++i) {
    const double half = 0.5 * g.turn_angles[i];
    worst = std::max(worst,
                     std::abs(g.radii[i] - 0.5 / std::sin(half)));
  }
  return worst;
}

double verify_center_spacing(const ChainGeometry& g) {
  const auto npairs =
      static_cast<std::ptrdiff_t>(g.centers.size()) - 1;
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) \
    if (npairs > 4096)
  for (std::ptrdiff_t i = 0; i < npairs; ++i) {
    const double hm = 0.5 * g.turn_angles[i];
    const double hp = 0.5 * g.turn_angles[i + 1];
    const double predicted =
        0.5 * (std::cos(hm) / std::sin(hm) - std::cos(hp) / std::sin(hp));
    const double measured = std::abs(g.centers[i + 1] - g.centers[i]);
    worst = std::max(worst, std::abs(measured - predicted));
  }
  return worst;
}

double verify_telescoping(const ChainGeometry& g) {
  if (g.centers.size() < 2) {
    throw invalid_parameter("telescoping needs n >= 3 (two centers)");
  }
  const std::complex<double> a0 = g.partial_sums.front();
  const std::complex<double> an = g.partial_sums.back();
  CompensatedSum re, im;
  const auto add = [&](std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  };
  add(an - g.centers.back());
  for (std::size_t m = 1; m < g.centers.size(); ++m) {
    add(g.centers[m] - g.centers[m - 1]);
  }
  add(g.centers.front() - a0);
  const std::complex<double> lhs = an - a0;
  return std::abs(lhs - std::complex<double>{re.value(), im.value()});
}

BoundTrace kuzmin_bound_trace(const ChainGeometry& g, double theta) {
  if (g.centers.size() < 2) {
    throw invalid_parameter("bound trace needs n >= 3 (two centers)");
  }
  const AdmissibilityReport adm = check_admissible_gaps(g.gaps, theta);
  if (!adm.admissible) throw not_admissible(adm);

  BoundTrace t;
  t.first_leg = std::abs(g.centers.front() - g.partial_sums.front());
  t.last_leg = std::abs(g.partial_sums.back() - g.centers.back());
  CompensatedSum path;
  for (std::size_t m = 1; m < g.centers.size(); ++m) {
    path.add(std::abs(g.centers[m] - g.centers[m - 1]));
  }
  t.center_path = path.value();
  t.total = t.first_leg + t.center_path + t.last_leg;
  t.abs_sum = std::abs(g.partial_sums.back() - g.partial_sums.front());
  return t;
}

}  // namespace expsum
