#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include <json.hpp>

#include "expsum/core.hpp"
#include "expsum/errors.hpp"
#include "expsum/extremal.hpp"
#include "expsum/io.hpp"

using namespace expsum;
using nlohmann::json;

TEST_CASE("format_double round-trips every double") {
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = dist(rng);
    CHECK(std::stod(io::format_double(x)) == x);
  }
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("phase text accepts JSON arrays and plain lines") {
  const auto a = io::parse_phases_text("[0, 0.5, 1]");
  REQUIRE(a.size() == 3);
  CHECK(a[1] == 0.5);

  const auto b = io::parse_phases_text("0\n 0.5 \n\n1\n");
  REQUIRE(b.size() == 3);
  CHECK(b[2] == 1.0);

  CHECK_THROWS_AS(io::parse_phases_text(""), invalid_parameter);
  CHECK_THROWS_AS(io::parse_phases_text("[0, \"x\"]"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_phases_text("{\"a\": 1}"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_phases_text("0\nbad\n1\n"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_phases_text("0\n0.5x\n"), invalid_parameter);
}

TEST_CASE("theta parses as decimal or fraction") {
  const auto d = io::parse_theta("0.25");
  CHECK(d.value == 0.25);
  CHECK(!d.fraction.has_value());

  const auto f = io::parse_theta("1/3");
  REQUIRE(f.fraction.has_value());
  CHECK(f.fraction->first == 1);
  CHECK(f.fraction->second == 3);
  CHECK(f.value == 1.0 / 3.0);

  // Kept raw; reduction happens where the fraction is consumed.
  const auto g = io::parse_theta("2/4");
  CHECK(g.fraction->first == 2);
  CHECK(g.fraction->second == 4);
  CHECK(g.value == 0.5);

  CHECK_THROWS_AS(io::parse_theta("abc"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_theta("0.25x"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_theta("1/0"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_theta("-1/3"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_theta("1/x"), invalid_parameter);
  CHECK_THROWS_AS(io::parse_theta("1/3/5"), invalid_parameter);
}

TEST_CASE("admissibility report JSON shape") {
  const auto rep = check_admissible(PhaseSequence({0.0, 0.3, 0.5}), 0.25);
  const json j = json::parse(io::to_json(rep));
  CHECK(j["theta"] == 0.25);
  CHECK(j["monotone"] == false);
  CHECK(j["admissible"] == false);
  CHECK(j["theta_star"] == 0.0);
  CHECK(j["first_violation"] == 1);

  const auto ok = check_admissible(PhaseSequence({0.0, 0.3, 0.7}), 0.3);
  const json k = json::parse(io::to_json(ok));
  CHECK(k["first_violation"].is_null());
  CHECK(k["admissible"] == true);
}

TEST_CASE("bound report JSON carries the full ladder and flags") {
  const auto w = extremal_sequence(OddFraction::make(1, 3));
  const auto rep = bound_report(w.sequence, 1.0 / 3.0);
  const json j = json::parse(io::to_json(rep));
  for (const char* key :
       {"n", "theta", "sum_re", "sum_im", "abs_sum", "bound_landau",
        "bound_kuzmin", "bound_simple", "bound_2_over_pi_theta", "bound_false",
        "bound_refined", "flags"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["n"] == 3);
  CHECK(j["flags"]["landau"] == true);
  CHECK(j["flags"].size() == 6);
  // Bit-exact round trip through the decimal text.
  CHECK(j["abs_sum"].get<double>() == rep.abs_sum);
  CHECK(j["bound_landau"].get<double>() == rep.ladder.landau);

  const auto single = bound_report(PhaseSequence({0.25}), 0.3);
  const json s = json::parse(io::to_json(single));
  CHECK(s["bound_refined"].is_null());
}

TEST_CASE("witness JSON includes the fraction only when present") {
  const auto w = extremal_sequence(OddFraction::make(1, 5));
  const json j = json::parse(io::to_json(w));
  CHECK(j["theta_prime"] == "1/5");
  CHECK(j["phases"].size() == 5);
  CHECK(j["attained"] == true);
  CHECK(j["margin"].get<double>() == w.abs_sum - w.target);

  const json h = json::parse(io::to_json(extremal_half()));
  CHECK(!h.contains("theta_prime"));
  CHECK(h["phases"].size() == 3);
}

TEST_CASE("refutation JSON") {
  const json j = json::parse(io::to_json(refute_false_bound(0.2)));
  CHECK(j["found"] == true);
  CHECK(j["theta_prime"] == "1/5");
  CHECK(j["margin"].get<double>() > 0.0);
  CHECK(j["phases"].size() == 5);
  CHECK(j.contains("crossing"));

  const json none = json::parse(io::to_json(refute_false_bound(1e-5)));
  CHECK(none["found"] == false);
  CHECK(!none.contains("phases"));
  CHECK(!none.contains("theta_prime"));
}

TEST_CASE("search JSON is self-contained") {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.theta = 1.0 / 3.0;
  cfg.theta_fraction = OddFraction::make(1, 3);
  cfg.restarts = 2;
  cfg.max_iters = 200;
  const auto res = maximize(cfg);
  const json j = json::parse(io::to_json(res, cfg.theta, cfg.seed));
  CHECK(j["n"] == 3);
  CHECK(j["seed"] == 1);
  CHECK(j["restarts"].size() == 3);
  CHECK(j["restarts"][2]["seeded"] == true);
  CHECK(j["phases"].size() == 3);
  CHECK(j["best_abs_sum"].get<double>() == res.best_abs_sum);
}
