#pragma once

#include <stdexcept>

namespace expsum {

// Base class for every failure the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter fell outside its documented domain (theta range, interval
// ordering, sizes, malformed fractions).
class invalid_parameter : public error {
 public:
  using error::error;
};

// Geometry or trigonometry degenerated past the supported thresholds:
// collinear chain triples, |sin(pi*delta)| below 1e-12, singular bisector
// systems from doubled-back steps.
class degenerate_geometry : public error {
 public:
  using error::error;
};

// A gap profile fails the non-decreasing hypothesis a bound requires.
class non_monotone_gaps : public error {
 public:
  using error::error;
};

}  // namespace expsum
