#include "expsum/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "expsum/io.hpp"

namespace expsum::render {

namespace {

std::string fixed6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

std::string chain_svg(const ChainGeometry& g, const SvgOptions& opts) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  const auto extend = [&](double x, double y, double r) {
    if (first) {
      xmin = x - r;
      xmax = x + r;
      ymin = y - r;
      ymax = y + r;
      first = false;
      return;
    }
    xmin = std::min(xmin, x - r);
    xmax = std::max(xmax, x + r);
    ymin = std::min(ymin, y - r);
    ymax = std::max(ymax, y + r);
  };
  for (const auto& p : g.partial_sums) extend(p.real(), p.imag(), 0.0);
  for (std::size_t m = 0; m < g.centers.size(); ++m) {
    extend(g.centers[m].real(), g.centers[m].imag(),
           opts.circles ? g.radii[m] : 0.0);
  }

  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = 900.0 / span;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  // world -> viewBox, y flipped so the plane reads the usual way up
  const auto X = [&](double x) { return 500.0 + scale * (x - cx); };
  const auto Y = [&](double y) { return 500.0 - scale * (y - cy); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  s += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  if (opts.circles) {
    for (std::size_t m = 0; m < g.centers.size(); ++m) {
      s += "<circle cx=\"" + fixed6(X(g.centers[m].real())) + "\" cy=\"" +
           fixed6(Y(g.centers[m].imag())) + "\" r=\"" +
           fixed6(scale * g.radii[m]) +
           "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
  }
  s += "<polyline fill=\"none\" stroke=\"#20508c\" stroke-width=\"2\" "
       "points=\"";
  for (std::size_t m = 0; m < g.partial_sums.size(); ++m) {
    if (m) s += " ";
    s += fixed6(X(g.partial_sums[m].real())) + "," +
         fixed6(Y(g.partial_sums[m].imag()));
  }
  s += "\"/>\n";
  for (const auto& c : g.centers) {
    const std::string x = fixed6(X(c.real()));
    const std::string y = fixed6(Y(c.imag()));
    const std::string xl = fixed6(X(c.real()) - 3.0);
    const std::string xr = fixed6(X(c.real()) + 3.0);
    const std::string yd = fixed6(Y(c.imag()) - 3.0);
    const std::string yu = fixed6(Y(c.imag()) + 3.0);
    s += "<line x1=\"" + xl + "\" y1=\"" + y + "\" x2=\"" + xr + "\" y2=\"" +
         y + "\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
    s += "<line x1=\"" + x + "\" y1=\"" + yd + "\" x2=\"" + x + "\" y2=\"" +
         yu + "\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string chain_csv(const ChainGeometry& g) {
  const std::size_t n = g.partial_sums.size() - 1;
  std::string s = "m,A_re,A_im,M_re,M_im,C_re,C_im,turn_angle,radius\n";
  for (std::size_t m = 0; m <= n; ++m) {
    s += std::to_string(m);
    s += "," + io::format_double(g.partial_sums[m].real());
    s += "," + io::format_double(g.partial_sums[m].imag());
    if (m >= 1) {
      s += "," + io::format_double(g.midpoints[m - 1].real());
      s += "," + io::format_double(g.midpoints[m - 1].imag());
    } else {
      s += ",,";
    }
    if (m >= 1 && m <= n - 1) {
      s += "," + io::format_double(g.centers[m - 1].real());
      s += "," + io::format_double(g.centers[m - 1].imag());
      s += "," + io::format_double(g.turn_angles[m - 1]);
      s += "," + io::format_double(g.radii[m - 1]);
    } else {
      s += ",,,,";
    }
    s += "\n";
  }
  return s;
}

std::string decomposition_csv(const LandauDecomposition& d) {
  std::string s = "k,b_k,cot_b_k,middle_re,middle_im\n";
  for (std::size_t i = 0; i < d.b.size(); ++i) {
    const std::size_t k = i + 2;
    s += std::to_string(k);
    s += "," + io::format_double(d.b[i]);
    s += "," + io::format_double(std::cos(d.b[i]) / std::sin(d.b[i]));
    if (i < d.middle.size()) {
      s += "," + io::format_double(d.middle[i].real());
      s += "," + io::format_double(d.middle[i].imag());
    } else {
      s += ",,";
    }
    s += "\n";
  }
  return s;
}

std::string best_constant_csv(const std::vector<BestConstantRow>& rows) {
  std::string s = "j,theta,value\n";
  for (const BestConstantRow& r : rows) {
    s += std::to_string(r.j);
    s += "," + io::format_double(r.theta);
    s += "," + io::format_double(r.value);
    s += "\n";
  }
  return s;
}

}  // namespace expsum::render
