#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "expsum/core.hpp"
#include "expsum/extremal.hpp"
#include "expsum/io.hpp"
#include "expsum/kuzmin_geometry.hpp"
#include "expsum/landau_identity.hpp"
#include "expsum/render.hpp"
#include "expsum/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotAdmissible = 2;
constexpr int kExitNoCounterexample = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw expsum::invalid_parameter("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw expsum::invalid_parameter("cannot write '" + path + "'");
  }
  out << content;
}

// --phases FILE or --inline "0,0.2,0.5"; inline commas become newlines so
// both go through the same parser.
expsum::PhaseSequence load_phases(const std::string& file,
                                  const std::string& inline_text) {
  std::string text;
  if (!inline_text.empty()) {
    text = inline_text;
    for (char& c : text) {
      if (c == ',') c = '\n';
    }
  } else if (!file.empty()) {
    text = read_file(file);
  } else {
    throw expsum::invalid_parameter("need --phases FILE or --inline LIST");
  }
  return expsum::PhaseSequence(expsum::io::parse_phases_text(text));
}

std::string phases_text(std::span<const double> phases) {
  std::string s;
  for (double p : phases) {
    s += expsum::io::format_double(p);
    s += "\n";
  }
  return s;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EXPSUM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw expsum::invalid_parameter("EXPSUM_SEED is not an integer");
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential sums under the Kuzmin-Landau gap conditions"};
  app.require_subcommand(1);

  std::string theta_text;
  std::string phases_file;
  std::string inline_phases;
  std::string out_path;
  std::string method = "landau";
  double epsilon = 0.01;
  std::int64_t jmax = 50;
  std::uint64_t seed = 0;
  std::size_t n_points = 3;
  int restarts = 32;
  int max_iters = 5000;
  double step_init = 0.1;
  double tol = 1e-10;
  bool circles = false;
  bool no_construction_seed = false;

  auto* bound = app.add_subcommand("bound", "bound ladder / full report");
  bound->add_option("--theta", theta_text)->required();
  bound->add_option("--phases", phases_file);
  bound->add_option("--inline", inline_phases);

  auto* check = app.add_subcommand("check", "admissibility report");
  check->add_option("--theta", theta_text)->required();
  check->add_option("--phases", phases_file);
  check->add_option("--inline", inline_phases);

  auto* extremal =
      app.add_subcommand("extremal", "exact witness at odd theta = p/q");
  extremal->add_option("--theta", theta_text)->required();
  extremal->add_option("--emit-phases", out_path);

  auto* nearx = app.add_subcommand("near-extremal",
                                   "witness within epsilon of the bound");
  nearx->add_option("--theta", theta_text)->required();
  nearx->add_option("--epsilon", epsilon)->required();

  auto* decompose = app.add_subcommand("decompose", "proof decompositions");
  decompose->add_option("--method", method)
      ->check(CLI::IsMember({"landau", "kuzmin"}));
  decompose->add_option("--phases", phases_file);
  decompose->add_option("--inline", inline_phases);
  decompose->add_option("--theta", theta_text);
  decompose->add_option("--out", out_path);

  auto* refute = app.add_subcommand("refute", "false-bound counterexample");
  refute->add_option("--theta", theta_text)->required();

  auto* search = app.add_subcommand("search", "sharpness search");
  search->add_option("--theta", theta_text)->required();
  search->add_option("--n", n_points)->required();
  search->add_option("--restarts", restarts);
  search->add_option("--seed", seed);
  search->add_option("--max-iters", max_iters);
  search->add_option("--step-init", step_init);
  search->add_option("--tol", tol);
  search->add_flag("--no-construction-seed", no_construction_seed);

  auto* plot = app.add_subcommand("plot", "SVG of the Kuzmin chain");
  plot->add_option("--phases", phases_file);
  plot->add_option("--inline", inline_phases);
  plot->add_option("--out", out_path)->required();
  plot->add_flag("--circles", circles);

  auto* bestc = app.add_subcommand("best-constant", "theta*cot table");
  bestc->add_option("--jmax", jmax)->required();
  bestc->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      if (phases_file.empty() && inline_phases.empty()) {
        std::cout << expsum::io::to_json(expsum::bound_ladder(th.value),
                                         th.value)
                  << "\n";
        return kExitOk;
      }
      const expsum::PhaseSequence a = load_phases(phases_file, inline_phases);
      try {
        std::cout << expsum::io::to_json(expsum::bound_report(a, th.value))
                  << "\n";
      } catch (const expsum::not_admissible& e) {
        std::cout << expsum::io::to_json(e.report()) << "\n";
        std::cerr << "not admissible for theta = " << theta_text << "\n";
        return kExitNotAdmissible;
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      const expsum::PhaseSequence a = load_phases(phases_file, inline_phases);
      const expsum::AdmissibilityReport rep =
          expsum::check_admissible(a, th.value);
      std::cout << expsum::io::to_json(rep) << "\n";
      return rep.admissible ? kExitOk : kExitNotAdmissible;
    }

    if (extremal->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      if (!th.fraction) {
        throw expsum::invalid_parameter(
            "extremal needs theta as a fraction P/Q");
      }
      auto [p, q] = *th.fraction;
      const std::int64_t g = std::gcd(p, q);
      p /= g;
      q /= g;
      const expsum::ExtremalWitness w =
          (p == 1 && q == 2) ? expsum::extremal_half()
                             : expsum::extremal_sequence(
                                   expsum::OddFraction::make(p, q));
      if (!out_path.empty()) {
        write_file(out_path, phases_text(w.sequence.phases()));
      }
      std::cout << expsum::io::to_json(w) << "\n";
      return kExitOk;
    }

    if (nearx->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      const expsum::ExtremalWitness w =
          expsum::near_extremal(th.value, epsilon);
      std::cout << expsum::io::to_json(w) << "\n";
      return kExitOk;
    }

    if (decompose->parsed()) {
      const expsum::PhaseSequence a = load_phases(phases_file, inline_phases);
      std::optional<double> theta;
      if (!theta_text.empty()) {
        theta = expsum::io::parse_theta(theta_text).value;
        const expsum::AdmissibilityReport rep =
            expsum::check_admissible(a, *theta);
        if (!rep.admissible) {
          std::cout << expsum::io::to_json(rep) << "\n";
          std::cerr << "not admissible for theta = " << theta_text << "\n";
          return kExitNotAdmissible;
        }
      }
      std::string summary = "{";
      std::string csv;
      if (method == "landau") {
        const expsum::LandauDecomposition d = expsum::landau_decompose(a);
        csv = expsum::render::decomposition_csv(d);
        summary += "\"method\":\"landau\"";
        summary += ",\"n\":" + std::to_string(a.size());
        summary += ",\"residual\":" + expsum::io::format_double(d.residual);
        summary += ",\"shift_identity_residual\":" +
                   expsum::io::format_double(expsum::verify_shift_identity(a));
        summary += ",\"reconstruction_re\":" +
                   expsum::io::format_double(d.reconstruction.real());
        summary += ",\"reconstruction_im\":" +
                   expsum::io::format_double(d.reconstruction.imag());
        summary += ",\"refined_bound\":";
        try {
          summary += expsum::io::format_double(expsum::refined_bound(a));
        } catch (const expsum::error&) {
          summary += "null";
        }
      } else {
        const expsum::ChainGeometry g = expsum::build_chain(a);
        csv = expsum::render::chain_csv(g);
        summary += "\"method\":\"kuzmin\"";
        summary += ",\"n\":" + std::to_string(a.size());
        summary += ",\"unit_step_residual\":" +
                   expsum::io::format_double(g.unit_step_residual);
        summary += ",\"circumradius_agreement\":" +
                   expsum::io::format_double(g.circumradius_agreement);
        summary += ",\"radius_identity_residual\":" +
                   expsum::io::format_double(expsum::verify_radius_identity(g));
        summary += ",\"center_spacing_residual\":" +
                   expsum::io::format_double(expsum::verify_center_spacing(g));
        summary += ",\"telescoping_residual\":";
        if (a.size() >= 3) {
          summary +=
              expsum::io::format_double(expsum::verify_telescoping(g));
        } else {
          summary += "null";
        }
        if (theta) {
          const expsum::BoundTrace t = expsum::kuzmin_bound_trace(g, *theta);
          summary += ",\"trace\":{";
          summary +=
              "\"first_leg\":" + expsum::io::format_double(t.first_leg);
          summary +=
              ",\"center_path\":" + expsum::io::format_double(t.center_path);
          summary += ",\"last_leg\":" + expsum::io::format_double(t.last_leg);
          summary += ",\"total\":" + expsum::io::format_double(t.total);
          summary += ",\"abs_sum\":" + expsum::io::format_double(t.abs_sum);
          summary += "}";
        }
      }
      summary += "}";
      if (!out_path.empty()) {
        write_file(out_path, csv);
      }
      std::cout << summary << "\n";
      return kExitOk;
    }

    if (refute->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      const expsum::FalseBoundReport rep =
          expsum::refute_false_bound(th.value);
      std::cout << expsum::io::to_json(rep) << "\n";
      if (!rep.found) {
        std::cerr << "no counterexample at theta = " << theta_text << "\n";
        return kExitNoCounterexample;
      }
      return kExitOk;
    }

    if (search->parsed()) {
      const expsum::io::ThetaArg th = expsum::io::parse_theta(theta_text);
      expsum::SearchConfig cfg;
      cfg.n = n_points;
      cfg.theta = th.value;
      if (th.fraction) {
        const auto [p, q] = *th.fraction;
        if (p % 2 == 1 && q % 2 == 1) {
          cfg.theta_fraction = expsum::OddFraction::make(p, q);
        }
      }
      cfg.restarts = restarts;
      cfg.max_iters = max_iters;
      cfg.step_init = step_init;
      cfg.tol = tol;
      cfg.seed = (search->count("--seed") > 0) ? seed : default_seed();
      cfg.construction_seed = !no_construction_seed;
      const expsum::SearchResult res = expsum::maximize(cfg);
      std::cout << expsum::io::to_json(res, cfg.theta, cfg.seed) << "\n";
      return kExitOk;
    }

    if (plot->parsed()) {
      const expsum::PhaseSequence a = load_phases(phases_file, inline_phases);
      const expsum::ChainGeometry g = expsum::build_chain(a);
      expsum::render::SvgOptions opts;
      opts.circles = circles;
      write_file(out_path, expsum::render::chain_svg(g, opts));
      return kExitOk;
    }

    if (bestc->parsed()) {
      const std::string csv =
          expsum::render::best_constant_csv(expsum::best_constant_scan(jmax));
      if (!out_path.empty()) {
        write_file(out_path, csv);
      } else {
        std::cout << csv;
      }
      return kExitOk;
    }
  } catch (const expsum::not_admissible& e) {
    std::cerr << e.what() << "\n";
    return kExitNotAdmissible;
  } catch (const expsum::error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
