// Timing comparison of the blocked (OpenMP) kernels against the serial long
// double references, plus a cross-thread determinism check.

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "expsum/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> random_phases(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gap(0.05, 0.95);
  std::vector<double> ph(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += gap(rng);
    ph[k] = acc;
  }
  return ph;
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    f();
    const double dt = seconds_since(t0);
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 1'000'000;
  int reps = 5;
  if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) reps = std::atoi(argv[2]);

  const std::vector<double> ph = random_phases(n, 42);

  std::complex<double> s_par, s_ref;
  const double t_par = best_of(reps, [&] { s_par = expsum::sum_unit_phases(ph); });
  const double t_ref = best_of(reps, [&] { s_ref = expsum::ref::sum_unit_phases(ph); });

  std::vector<std::complex<double>> p_par, p_ref;
  const double tp_par = best_of(reps, [&] { p_par = expsum::partial_sums(ph); });
  const double tp_ref = best_of(reps, [&] { p_ref = expsum::ref::partial_sums(ph); });

  double worst_prefix = 0.0;
  for (std::size_t k = 0; k < p_par.size(); ++k) {
    worst_prefix = std::max(worst_prefix, std::abs(p_par[k] - p_ref[k]));
  }

  std::printf("n = %zu, best of %d reps\n", n, reps);
#ifdef _OPENMP
  std::printf("threads = %d\n", omp_get_max_threads());
#else
  std::printf("threads = 1 (no OpenMP)\n");
#endif
  std::printf("sum_unit_phases   blocked %.4fs   ref %.4fs   speedup %.2fx\n",
              t_par, t_ref, t_ref / t_par);
  std::printf("  |blocked - ref| = %.3g\n", std::abs(s_par - s_ref));
  std::printf("partial_sums      blocked %.4fs   ref %.4fs   speedup %.2fx\n",
              tp_par, tp_ref, tp_ref / tp_par);
  std::printf("  max |blocked - ref| = %.3g\n", worst_prefix);

#ifdef _OPENMP
  // the blocked reduction must give identical bits for any thread count
  const int max_threads = omp_get_max_threads();
  const std::complex<double> base = expsum::sum_unit_phases(ph);
  bool identical = true;
  for (int t = 1; t <= max_threads; ++t) {
    omp_set_num_threads(t);
    const std::complex<double> s = expsum::sum_unit_phases(ph);
    if (s.real() != base.real() || s.imag() != base.imag()) identical = false;
  }
  omp_set_num_threads(max_threads);
  std::printf("bit-identical across 1..%d threads: %s\n", max_threads,
              identical ? "yes" : "NO");
#endif
  return 0;
}
