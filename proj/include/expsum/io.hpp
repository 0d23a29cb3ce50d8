#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expsum/core.hpp"
#include "expsum/extremal.hpp"
#include "expsum/search.hpp"

// Input parsing and JSON serialization. All numeric JSON fields are written
// with 17 significant digits so reports round-trip bit-exactly.

namespace expsum::io {

// %.17g
std::string format_double(double x);

// Phase text: either a JSON array of numbers or newline-delimited decimals
// (blank lines ignored). Throws invalid_parameter on malformed input.
std::vector<double> parse_phases_text(const std::string& text);

// theta as a decimal ("0.25") or fraction ("1/3"). The fraction, when
// given, is kept so exact odd/odd tests remain integer arithmetic.
struct ThetaArg {
  double value = 0.0;
  std::optional<std::pair<std::int64_t, std::int64_t>> fraction;
};

ThetaArg parse_theta(const std::string& text);

std::string to_json(const AdmissibilityReport& rep);
std::string to_json(const BoundLadder& ladder, double theta);
std::string to_json(const BoundReport& rep);
std::string to_json(const ExtremalWitness& w);
std::string to_json(const FalseBoundReport& rep);
std::string to_json(const SearchResult& res, double theta, std::uint64_t seed);

}  // namespace expsum::io
