#include "expsum/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace expsum {

namespace {

constexpr std::ptrdiff_t kBlock = 4096;

void accumulate_phases(std::span<const double> cycles, CompensatedSum& re,
                       CompensatedSum& im) {
  for (double c : cycles) {
    const std::complex<double> z = unit_phase(c);
    re.add(z.real());
    im.add(z.imag());
  }
}

void accumulate_terms(std::span<const std::complex<double>> terms,
                      CompensatedSum& re, CompensatedSum& im) {
  for (const std::complex<double>& z : terms) {
    re.add(z.real());
    im.add(z.imag());
  }
}

}  // namespace

std::complex<double> sum_unit_phases(std::span<const double> cycles) {
  const auto n = static_cast<std::ptrdiff_t>(cycles.size());
  if (n < 2 * kBlock) {
    CompensatedSum re, im;
    accumulate_phases(cycles, re, im);
    return {re.value(), im.value()};
  }
  const std::ptrdiff_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<CompensatedSum> res(nblocks), ims(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t len = std::min(kBlock, n - lo);
    accumulate_phases(cycles.subspan(lo, len), res[b], ims[b]);
  }
  CompensatedSum re, im;
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    re.merge(res[b]);
    im.merge(ims[b]);
  }
  return {re.value(), im.value()};
}

std::complex<double> sum_terms(std::span<const std::complex<double>> terms) {
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  if (n < 2 * kBlock) {
    CompensatedSum re, im;
    accumulate_terms(terms, re, im);
    return {re.value(), im.value()};
  }
  const std::ptrdiff_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<CompensatedSum> res(nblocks), ims(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t len = std::min(kBlock, n - lo);
    accumulate_terms(terms.subspan(lo, len), res[b], ims[b]);
  }
  CompensatedSum re, im;
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    re.merge(res[b]);
    im.merge(ims[b]);
  }
  return {re.value(), im.value()};
}

std::vector<std::complex<double>> partial_sums(std::span<const double> cycles) {
  const auto n = static_cast<std::ptrdiff_t>(cycles.size());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n) + 1);
  out[0] = {0.0, 0.0};
  if (n < 2 * kBlock) {
    CompensatedSum re, im;
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const std::complex<double> z = unit_phase(cycles[k]);
      re.add(z.real());
      im.add(z.imag());
      out[k + 1] = {re.value(), im.value()};
    }
    return out;
  }
  const std::ptrdiff_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<CompensatedSum> res(nblocks), ims(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t len = std::min(kBlock, n - lo);
    accumulate_phases(cycles.subspan(lo, len), res[b], ims[b]);
  }
  // Exclusive prefix over block totals, then a second pass writes the
  // running values. Both passes visit blocks in index order.
  std::vector<CompensatedSum> off_re(nblocks), off_im(nblocks);
  CompensatedSum run_re, run_im;
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    off_re[b] = run_re;
    off_im[b] = run_im;
    run_re.merge(res[b]);
    run_im.merge(ims[b]);
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t hi = std::min(lo + kBlock, n);
    CompensatedSum re = off_re[b];
    CompensatedSum im = off_im[b];
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const std::complex<double> z = unit_phase(cycles[k]);
      re.add(z.real());
      im.add(z.imag());
      out[k + 1] = {re.value(), im.value()};
    }
  }
  return out;
}

namespace ref {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

std::complex<long double> unit_phase_ld(double cycles) {
  const long double x = static_cast<long double>(cycles);
  const long double r = x - std::nearbyint(x);
  const long double t = 2.0L * kPiL * r;
  return {std::cos(t), std::sin(t)};
}

}  // namespace

std::complex<double> sum_unit_phases(std::span<const double> cycles) {
  long double re = 0.0L, im = 0.0L;
  for (double c : cycles) {
    const std::complex<long double> z = unit_phase_ld(c);
    re += z.real();
    im += z.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<std::complex<double>> partial_sums(std::span<const double> cycles) {
  std::vector<std::complex<double>> out(cycles.size() + 1);
  out[0] = {0.0, 0.0};
  long double re = 0.0L, im = 0.0L;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const std::complex<long double> z = unit_phase_ld(cycles[k]);
    re += z.real();
    im += z.imag();
    out[k + 1] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

}  // namespace ref

}  // namespace expsum
