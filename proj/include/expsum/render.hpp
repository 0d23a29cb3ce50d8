#pragma once

#include <string>
#include <vector>

#include "expsum/extremal.hpp"
#include "expsum/kuzmin_geometry.hpp"
#include "expsum/landau_identity.hpp"

// CSV and SVG emission. Output is deterministic byte-for-byte: fixed headers,
// fixed numeric formats.

namespace expsum::render {

struct SvgOptions {
  bool circles = false;
};

// The partial-sum chain in a fixed 1000x1000 viewBox, auto-scaled with a 5%
// margin: the polygon as a polyline, circumcenters as 3-unit crosses,
// optional circumcircles.
std::string chain_svg(const ChainGeometry& g, const SvgOptions& opts);

// Header m,A_re,A_im,M_re,M_im,C_re,C_im,turn_angle,radius; one row per
// m = 0 ... n, cells empty where the object does not exist at that index.
std::string chain_csv(const ChainGeometry& g);

// Header k,b_k,cot_b_k,middle_re,middle_im; rows k = 2 ... n (the middle
// columns are empty at k = n, which has no middle term).
std::string decomposition_csv(const LandauDecomposition& d);

// Header j,theta,value.
std::string best_constant_csv(const std::vector<BestConstantRow>& rows);

}  // namespace expsum::render
