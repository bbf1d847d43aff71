#pragma once

#include <utility>
#include <vector>

#include "torusgreen/raster.hpp"

namespace torusgreen {

// tau-plane partition into three- and five-critical-point regions.
// Pixel codes: 1 = three (min_j m_j < 1), 2 = five (min_j m_j > 1),
// 0 = within boundary_band of the dividing curves.
struct RegionScan {
  RasterImage image;
  std::vector<double> min_m;  // per pixel, same layout as image.codes
};

inline constexpr double kBoundaryBand = 0.002;

// Default window matching the reference figure: [-1,1] x [0.15,2.15] at
// 700x700. Requires im_lo >= kMinImTau.
RegionScan render_region(double re_lo, double re_hi, double im_lo, double im_hi,
                         int px_w, int px_h, double boundary_band = kBoundaryBand);

// Locates the two zeros of b -> min_j m_j(1/2 + i b) - 1 on [b_lo, b_hi] by
// bisection; the returned pair brackets the three-point interval on the
// Re(tau) = 1/2 half-line. Throws RootNotBracketedError if the scan does not
// see the expected +,-,+ sign pattern.
std::pair<double, double> boundary_scan_halfline(double b_lo = 0.2,
                                                 double b_hi = 1.0,
                                                 double tol = 1e-8);

}  // namespace torusgreen
