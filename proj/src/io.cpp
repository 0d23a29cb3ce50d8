#include "expsum/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace expsum::io {

namespace {

std::string fraction_string(const OddFraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

void append_phases(std::string& out, std::span<const double> phases) {
  out += "[";
  for (std::size_t k = 0; k < phases.size(); ++k) {
    if (k) out += ",";
    out += format_double(phases[k]);
  }
  out += "]";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<double> parse_phases_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw invalid_parameter("no phases in input");
  }
  std::vector<double> out;
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw invalid_parameter(std::string("bad JSON phase input: ") +
                              e.what());
    }
    if (!j.is_array()) {
      throw invalid_parameter("JSON phase input must be an array of numbers");
    }
    for (const auto& v : j) {
      if (!v.is_number()) {
        throw invalid_parameter("JSON phase array contains a non-number");
      }
      out.push_back(v.get<double>());
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const std::size_t b = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(a, b - a + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw invalid_parameter("bad phase on line " + std::to_string(lineno) +
                              ": '" + tok + "'");
    }
    if (used != tok.size()) {
      throw invalid_parameter("trailing junk on line " +
                              std::to_string(lineno) + ": '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

ThetaArg parse_theta(const std::string& text) {
  ThetaArg t;
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    std::size_t used = 0;
    try {
      t.value = std::stod(text, &used);
    } catch (const std::exception&) {
      throw invalid_parameter("bad theta: '" + text + "'");
    }
    if (used != text.size()) {
      throw invalid_parameter("bad theta: '" + text + "'");
    }
    return t;
  }
  std::int64_t p = 0, q = 0;
  try {
    std::size_t up = 0, uq = 0;
    p = std::stoll(text.substr(0, slash), &up);
    q = std::stoll(text.substr(slash + 1), &uq);
    if (up != slash || uq != text.size() - slash - 1) {
      throw std::invalid_argument("junk");
    }
  } catch (const std::exception&) {
    throw invalid_parameter("bad fraction theta: '" + text + "'");
  }
  if (p <= 0 || q <= 0) {
    throw invalid_parameter("fraction theta must be positive: '" + text +
                            "'");
  }
  t.fraction = std::make_pair(p, q);
  t.value = static_cast<double>(p) / static_cast<double>(q);
  return t;
}

std::string to_json(const AdmissibilityReport& rep) {
  std::string s = "{";
  s += "\"theta\":" + format_double(rep.theta);
  s += ",\"monotone\":" + bool_str(rep.monotone);
  s += ",\"theta_star\":" + format_double(rep.theta_star);
  s += ",\"first_violation\":";
  s += rep.first_violation ? std::to_string(*rep.first_violation) : "null";
  s += ",\"admissible\":" + bool_str(rep.admissible);
  s += "}";
  return s;
}

std::string to_json(const BoundLadder& ladder, double theta) {
  std::string s = "{";
  s += "\"theta\":" + format_double(theta);
  s += ",\"bound_landau\":" + format_double(ladder.landau);
  s += ",\"bound_kuzmin\":" + format_double(ladder.kuzmin);
  s += ",\"bound_simple\":" + format_double(ladder.simple);
  s += ",\"bound_2_over_pi_theta\":" + format_double(ladder.two_over_pi_theta);
  s += ",\"bound_false\":" + format_double(ladder.false_claim);
  s += "}";
  return s;
}

std::string to_json(const BoundReport& rep) {
  std::string s = "{";
  s += "\"n\":" + std::to_string(rep.n);
  s += ",\"theta\":" + format_double(rep.theta);
  s += ",\"sum_re\":" + format_double(rep.sum.real());
  s += ",\"sum_im\":" + format_double(rep.sum.imag());
  s += ",\"abs_sum\":" + format_double(rep.abs_sum);
  s += ",\"bound_landau\":" + format_double(rep.ladder.landau);
  s += ",\"bound_kuzmin\":" + format_double(rep.ladder.kuzmin);
  s += ",\"bound_simple\":" + format_double(rep.ladder.simple);
  s += ",\"bound_2_over_pi_theta\":" +
       format_double(rep.ladder.two_over_pi_theta);
  s += ",\"bound_false\":" + format_double(rep.ladder.false_claim);
  s += ",\"bound_refined\":";
  s += rep.refined ? format_double(*rep.refined) : "null";
  s += ",\"flags\":{";
  s += "\"landau\":" + bool_str(rep.flags.landau);
  s += ",\"kuzmin\":" + bool_str(rep.flags.kuzmin);
  s += ",\"simple\":" + bool_str(rep.flags.simple);
  s += ",\"2_over_pi_theta\":" + bool_str(rep.flags.two_over_pi_theta);
  s += ",\"false\":" + bool_str(rep.flags.false_claim);
  s += ",\"refined\":" + bool_str(rep.flags.refined);
  s += "}}";
  return s;
}

std::string to_json(const ExtremalWitness& w) {
  std::string s = "{";
  s += "\"theta\":" + format_double(w.theta);
  if (w.theta_prime) {
    s += ",\"theta_prime\":\"" + fraction_string(*w.theta_prime) + "\"";
  }
  s += ",\"phases\":";
  append_phases(s, w.sequence.phases());
  s += ",\"abs_sum\":" + format_double(w.abs_sum);
  s += ",\"target\":" + format_double(w.target);
  s += ",\"attained\":" + bool_str(w.attained);
  s += ",\"margin\":" + format_double(w.abs_sum - w.target);
  s += "}";
  return s;
}

std::string to_json(const FalseBoundReport& rep) {
  std::string s = "{";
  s += "\"found\":" + bool_str(rep.found);
  s += ",\"theta\":" + format_double(rep.theta);
  if (rep.theta_prime) {
    s += ",\"theta_prime\":\"" + fraction_string(*rep.theta_prime) + "\"";
  }
  if (rep.witness) {
    s += ",\"phases\":";
    append_phases(s, rep.witness->phases());
  }
  s += ",\"abs_sum\":" + format_double(rep.abs_sum);
  s += ",\"false_bound\":" + format_double(rep.false_bound);
  s += ",\"sharp_bound\":" + format_double(rep.sharp);
  s += ",\"margin\":" + format_double(rep.margin);
  s += ",\"crossing\":" + format_double(rep.crossing);
  s += "}";
  return s;
}

std::string to_json(const SearchResult& res, double theta,
                    std::uint64_t seed) {
  std::string s = "{";
  s += "\"n\":" + std::to_string(res.best_sequence.size());
  s += ",\"theta\":" + format_double(theta);
  s += ",\"seed\":" + std::to_string(seed);
  s += ",\"target\":" + format_double(res.target);
  s += ",\"best_abs_sum\":" + format_double(res.best_abs_sum);
  s += ",\"gap_to_target\":" + format_double(res.gap_to_target);
  s += ",\"iterations_used\":" + std::to_string(res.iterations_used);
  s += ",\"restarts_used\":" + std::to_string(res.restarts_used);
  s += ",\"converged\":" + bool_str(res.converged);
  s += ",\"best_restart\":" + std::to_string(res.best_restart);
  s += ",\"phases\":";
  append_phases(s, res.best_sequence.phases());
  s += ",\"restarts\":[";
  for (std::size_t r = 0; r < res.restarts.size(); ++r) {
    const RestartSummary& row = res.restarts[r];
    if (r) s += ",";
    s += "{\"index\":" + std::to_string(row.index);
    s += ",\"abs_sum\":" + format_double(row.abs_sum);
    s += ",\"iterations\":" + std::to_string(row.iterations);
    s += ",\"seeded\":" + bool_str(row.seeded);
    s += ",\"converged\":" + bool_str(row.converged);
    s += "}";
  }
  s += "]}";
  return s;
}

}  // namespace expsum::io
