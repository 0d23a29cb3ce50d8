#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/errors.hpp"
#include "expsum/landau_identity.hpp"
#include "expsum/phase_sequence.hpp"
#include "helpers.hpp"

using namespace expsum;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

PhaseSequence random_increasing(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gap(0.02, 0.97);
  std::vector<double> phases(n);
  double acc = 0.0;
  for (auto& p : phases) {
    p = acc;
    acc += gap(rng);
  }
  return PhaseSequence(std::move(phases));
}
}  // namespace

TEST_CASE("decomposition of the theta = 1/3 extremal sequence") {
  const PhaseSequence a({0.0, 1.0 / 3.0, 1.0});
  const auto d = landau_decompose(a);
  REQUIRE(d.b.size() == 2);
  CHECK(d.b[0] == doctest::Approx(kPi / 3.0).epsilon(1e-15));
  CHECK(d.b[1] == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  REQUIRE(d.middle.size() == 1);
  CHECK(std::abs(d.reconstruction -
                 std::complex<double>(1.5, std::sqrt(3.0) / 2.0)) <= 1e-14);
  CHECK(d.residual <= 1e-14);
}

TEST_CASE("two-term decomposition has no middle and cancels to the sum") {
  const auto d = landau_decompose(PhaseSequence({0.0, 0.5}));
  CHECK(d.middle.empty());
  CHECK(d.residual <= 1e-15);
  CHECK(std::abs(d.reconstruction) <= 1e-14);
}

TEST_CASE("decomposition residual stays small on long admissible sequences") {
  std::mt19937_64 rng(101);
  const auto a = testutil::random_admissible(1000, 0.05, rng);
  const auto d = landau_decompose(a);
  CHECK(d.residual <= 1e-10);
  CHECK(std::abs(d.reconstruction - exp_sum(a)) == d.residual);
}

TEST_CASE("head and tail have the csc magnitudes the identity predicts") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_increasing(2 + rng() % 40, rng);
    LandauDecomposition d;
    try {
      d = landau_decompose(a);
    } catch (const degenerate_geometry&) {
      continue;  // a gap landed within 1e-12 of an integer
    }
    CHECK(std::abs(std::abs(d.head) - 1.0 / (2.0 * std::abs(std::sin(d.b.front())))) <=
          1e-12 * std::abs(d.head));
    CHECK(std::abs(std::abs(d.tail) - 1.0 / (2.0 * std::abs(std::sin(d.b.back())))) <=
          1e-12 * std::abs(d.tail));
  }
}

TEST_CASE("decomposition is algebraic, not an inequality") {
  // Non-monotone gaps still reconstruct exactly.
  const PhaseSequence a({0.0, 0.7, 0.9, 1.75});
  const auto d = landau_decompose(a);
  CHECK(d.residual <= 1e-14);
}

TEST_CASE("decomposition rejects degenerate and undersized input") {
  CHECK_THROWS_AS(landau_decompose(PhaseSequence({0.0})), invalid_parameter);
  CHECK_THROWS_AS(landau_decompose(PhaseSequence({0.0, 1.0})),
                  degenerate_geometry);
  CHECK_THROWS_AS(landau_decompose(PhaseSequence({0.0, 2.5e-13})),
                  degenerate_geometry);
  CHECK_THROWS_AS(landau_decompose(PhaseSequence({0.0, 0.5, 1.5})),
                  degenerate_geometry);
}

TEST_CASE("shift identity worked examples") {
  CHECK(verify_shift_identity(PhaseSequence({0.0, 0.25})) <= 1e-15);
  CHECK(verify_shift_identity(PhaseSequence({0.0, 1.0})) <= 1e-14);
  CHECK(verify_shift_identity(PhaseSequence({0.0, 1.0 / 3.0, 1.0})) <= 1e-14);
}

TEST_CASE("shift identity holds for arbitrary increasing phases") {
  std::mt19937_64 rng(107);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_increasing(2 + rng() % 60, rng);
    worst = std::max(worst, verify_shift_identity(a));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("half-turn identities") {
  const auto r = verify_halfturn_identities(kPi / 2.0);
  CHECK(r.first <= 1e-15);
  CHECK(r.second <= 1e-15);

  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> dist(0.01, kPi - 0.01);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto res = verify_halfturn_identities(dist(rng));
    worst = std::max({worst, res.first, res.second});
  }
  CHECK(worst <= 1e-13);

  CHECK_THROWS_AS(verify_halfturn_identities(0.0), degenerate_geometry);
  CHECK_THROWS_AS(verify_halfturn_identities(kPi), degenerate_geometry);
  CHECK_THROWS_AS(verify_halfturn_identities(1e-15), degenerate_geometry);
}

TEST_CASE("refined bound worked examples") {
  CHECK(refined_bound(PhaseSequence({0.0, 1.0 / 3.0, 1.0})) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  // Single gap of 1/2: (1 + 0)/2 + (1 - 0)/2 = 1.
  CHECK(refined_bound(PhaseSequence({0.0, 0.5})) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(refined_bound(PhaseSequence({0.0, 0.3, 0.5})),
                  non_monotone_gaps);
  CHECK_THROWS_AS(refined_bound(PhaseSequence({0.0, 1.5})), invalid_parameter);
  CHECK_THROWS_AS(refined_bound(PhaseSequence({0.0})), invalid_parameter);
}

TEST_CASE("refined bound sits between the sum and the sharp bound") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 300; ++trial) {
    const double theta = testutil::random_theta(rng);
    const auto a = testutil::random_admissible(2 + rng() % 99, theta, rng);
    const double refined = refined_bound(a);
    const auto rep = check_admissible(a, theta);
    CHECK(std::abs(exp_sum(a)) <= refined + 1e-9);
    CHECK(refined <= sharp_bound(rep.theta_star) + 1e-9);
  }
}

TEST_CASE("cotangents telescope monotonically for admissible input") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = testutil::random_theta(rng);
    const auto a = testutil::random_admissible(3 + rng() % 50, theta, rng);
    const auto d = landau_decompose(a);
    for (std::size_t k = 0; k + 1 < d.b.size(); ++k) {
      const double ck = std::cos(d.b[k]) / std::sin(d.b[k]);
      const double cn = std::cos(d.b[k + 1]) / std::sin(d.b[k + 1]);
      CHECK(ck - cn >= -1e-12);
    }
  }
}
