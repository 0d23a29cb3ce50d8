#include "expsum/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "expsum/grid.hpp"
#include "expsum/kernels.hpp"

namespace expsum {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> phases_from_gaps(double a1, std::span<const double> gaps) {
  std::vector<double> ph(gaps.size() + 1);
  ph[0] = a1;
  for (std::size_t k = 0; k < gaps.size(); ++k) ph[k + 1] = ph[k] + gaps[k];
  return ph;
}

void pav_nondecreasing(std::vector<double>& v) {
  struct Block {
    double sum;
    int count;
    double mean;
  };
  std::vector<Block> blocks;
  blocks.reserve(v.size());
  for (double x : v) {
    Block b{x, 1, x};
    while (!blocks.empty() && blocks.back().mean > b.mean) {
      b.sum += blocks.back().sum;
      b.count += blocks.back().count;
      b.mean = b.sum / b.count;
      blocks.pop_back();
    }
    blocks.push_back(b);
  }
  std::size_t i = 0;
  for (const Block& b : blocks) {
    for (int c = 0; c < b.count; ++c) v[i++] = b.mean;
  }
}

struct RunOutcome {
  std::vector<double> gaps;
  double abs_sum = 0.0;
  int iterations = 0;
  bool converged = false;
};

RunOutcome run_ascent(std::vector<double> gaps, const SearchConfig& cfg) {
  gaps = project_admissible(std::move(gaps), cfg.theta);
  Objective cur = objective_and_gradient(0.0, gaps);
  double step = cfg.step_init;
  RunOutcome out;
  for (; out.iterations < cfg.max_iters; ++out.iterations) {
    if (step < cfg.tol) {
      out.converged = true;
      break;
    }
    std::vector<double> cand(gaps.size());
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      cand[j] = gaps[j] + step * cur.d_gaps[j];
    }
    cand = project_admissible(std::move(cand), cfg.theta);
    Objective next = objective_and_gradient(0.0, cand);
    if (next.value > cur.value) {
      gaps = std::move(cand);
      cur = std::move(next);
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  out.gaps = std::move(gaps);
  out.abs_sum = std::sqrt(cur.value);
  return out;
}

// Extremal profile for an odd/odd fraction p/q with q points, padded to n by
// an even run of half-turn steps after the ascending block. The inserted
// points alternate in sign and cancel exactly, so the seed value stays at
// cot(pi p/(2q)). Uses the unreduced representation so the point budget is
// met exactly.
std::vector<double> padded_extremal_gaps(std::int64_t q, std::size_t n,
                                         double theta_prime) {
  const std::int64_t half_steps = (q - 1) / 2;
  const std::size_t pad = n - static_cast<std::size_t>(q);
  const double h = grid_step(static_cast<double>(n) + 2.0);
  const double g1 = ceil_to(h, theta_prime);
  const double g2 = floor_to(h, max_admissible_gap(theta_prime));
  std::vector<double> gaps;
  gaps.reserve(n - 1);
  gaps.insert(gaps.end(), static_cast<std::size_t>(half_steps), g1);
  gaps.insert(gaps.end(), pad, 0.5);
  gaps.insert(gaps.end(), static_cast<std::size_t>(half_steps), g2);
  return gaps;
}

std::optional<std::vector<double>> construction_seed_gaps(
    const SearchConfig& cfg) {
  const std::size_t n = cfg.n;
  if (cfg.theta == 0.5) {
    return std::vector<double>(n - 1, 0.5);
  }
  // Smallest theta' = p/q > theta whose 2N+1-point witness plus an even pad
  // fits exactly in n points; smaller theta' means larger cot.
  bool have = false;
  std::int64_t best_q = 0;
  double best_val = 1.0;
  for (std::int64_t q = 3; q <= static_cast<std::int64_t>(n); q += 2) {
    if ((n - static_cast<std::size_t>(q)) % 2 != 0) continue;
    std::int64_t p =
        static_cast<std::int64_t>(
            std::floor(cfg.theta * static_cast<double>(q))) -
        2;
    if (p < 1) p = 1;
    if (p % 2 == 0) ++p;
    while (static_cast<double>(p) / static_cast<double>(q) <= cfg.theta) {
      p += 2;
    }
    const double v = static_cast<double>(p) / static_cast<double>(q);
    if (!(v < 0.5)) continue;
    if (!have || v < best_val) {
      have = true;
      best_q = q;
      best_val = v;
    }
  }
  // theta itself wins when it is odd/odd and fits: cot is decreasing.
  if (cfg.theta_fraction) {
    const OddFraction& f = *cfg.theta_fraction;
    if (f.value() == cfg.theta && f.value() < 0.5 &&
        f.den <= static_cast<std::int64_t>(n) &&
        (n - static_cast<std::size_t>(f.den)) % 2 == 0) {
      have = true;
      best_q = f.den;
      best_val = f.value();
    }
  }
  if (!have) return std::nullopt;
  return padded_extremal_gaps(best_q, n, best_val);
}

}  // namespace

Objective objective_and_gradient(double a1, std::span<const double> gaps) {
  const std::size_t n = gaps.size() + 1;
  const std::vector<double> ph = phases_from_gaps(a1, gaps);
  std::vector<std::complex<double>> terms(n);
  for (std::size_t k = 0; k < n; ++k) terms[k] = unit_phase(ph[k]);
  const std::complex<double> S = sum_terms(terms);

  Objective obj;
  obj.value = std::norm(S);
  obj.d_gaps.assign(gaps.size(), 0.0);
  const auto d_phase = [&](std::size_t k) {
    const std::complex<double> w = std::conj(S) * terms[k];
    return -4.0 * kPi * w.imag();
  };
  double suffix = 0.0;
  for (std::size_t k = n; k-- > 1;) {
    suffix += d_phase(k);
    obj.d_gaps[k - 1] = suffix;
  }
  obj.d_a1 = suffix + d_phase(0);
  return obj;
}

std::vector<double> project_admissible(std::vector<double> gaps,
                                       double theta) {
  if (!(theta > 0.0) || !(theta <= 0.5)) {
    throw invalid_parameter("theta must lie in (0, 1/2]");
  }
  if (gaps.empty()) return gaps;
  const double lo = theta;
  const double hi = max_admissible_gap(theta);
  for (int pass = 0; pass < 8; ++pass) {
    std::vector<double> before = gaps;
    pav_nondecreasing(gaps);
    for (double& g : gaps) g = std::clamp(g, lo, hi);
    if (gaps == before) break;
  }
  return gaps;
}

SearchResult maximize(const SearchConfig& cfg) {
  if (cfg.n < 2) throw invalid_parameter("search needs n >= 2");
  if (!(cfg.theta > 0.0) || !(cfg.theta <= 0.5)) {
    throw invalid_parameter("theta must lie in (0, 1/2]");
  }
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.step_init > 0.0) ||
      !(cfg.tol > 0.0)) {
    throw invalid_parameter("restarts, max_iters, step_init, tol must be "
                            "positive");
  }

  std::optional<std::vector<double>> seed_gaps;
  if (cfg.construction_seed) seed_gaps = construction_seed_gaps(cfg);

  const int total = cfg.restarts + (seed_gaps ? 1 : 0);
  const double lo = cfg.theta;
  const double hi = max_admissible_gap(cfg.theta);
  std::vector<RunOutcome> outs(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < total; ++r) {
    if (r < cfg.restarts) {
      std::mt19937_64 rng(
          mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(r) + 1)));
      std::uniform_real_distribution<double> dist(lo, hi);
      std::vector<double> gaps(cfg.n - 1);
      for (double& g : gaps) g = dist(rng);
      std::sort(gaps.begin(), gaps.end());
      outs[r] = run_ascent(std::move(gaps), cfg);
    } else {
      outs[r] = run_ascent(*seed_gaps, cfg);
    }
  }

  int best = 0;
  for (int r = 1; r < total; ++r) {
    if (outs[r].abs_sum > outs[best].abs_sum) best = r;
  }

  // Snap the winning gaps to the exact grid before reporting, so the
  // returned phases carry a zero-wobble gap profile.
  const double h = grid_step(static_cast<double>(cfg.n) + 2.0);
  const double glo = ceil_to(h, lo);
  const double ghi = floor_to(h, hi);
  std::vector<double> snapped = outs[best].gaps;
  for (double& g : snapped) g = std::clamp(round_to(h, g), glo, ghi);

  PhaseSequence seq(phases_from_gaps(0.0, snapped));
  const double abs_sum = std::abs(exp_sum(seq));
  const double target = sharp_bound(cfg.theta);

  SearchResult res{std::move(seq),
                   abs_sum,
                   target,
                   target - abs_sum,
                   outs[best].iterations,
                   total,
                   outs[best].converged,
                   best,
                   {}};
  res.restarts.reserve(outs.size());
  for (int r = 0; r < total; ++r) {
    res.restarts.push_back(RestartSummary{r, outs[r].abs_sum,
                                          outs[r].iterations,
                                          r >= cfg.restarts,
                                          outs[r].converged});
  }
  return res;
}

}  // namespace expsum
