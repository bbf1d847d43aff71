#include "torusgreen/region.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "torusgreen/green.hpp"

namespace torusgreen {

RegionScan render_region(double re_lo, double re_hi, double im_lo, double im_hi,
                         int px_w, int px_h, double boundary_band) {
  if (!(im_lo >= kMinImTau)) {
    throw PrecisionLossError("region scan window extends below Im(tau) = 0.05");
  }
  if (px_w < 1 || px_h < 1 || !(re_lo < re_hi) || !(im_lo < im_hi)) {
    throw std::invalid_argument("bad region scan window");
  }

  RegionScan scan;
  scan.image.width = px_w;
  scan.image.height = px_h;
  scan.image.viewport = Viewport{re_lo, re_hi, im_lo, im_hi};
  scan.image.codes.assign(static_cast<std::size_t>(px_w) * px_h, 0);
  scan.min_m.assign(scan.image.codes.size(), 0.0);

  // Pixel centers written symmetrically about the window center, so a
  // symmetric window classifies mirror pixels from exactly conjugate nomes.
  const double rc = 0.5 * (re_lo + re_hi), rw = re_hi - re_lo;
  const double ic = 0.5 * (im_lo + im_hi), iw = im_hi - im_lo;

  parallel_chunks(px_h, [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      const int j = px_h - 1 - row;  // row 0 on top
      const double im = ic + (2 * j + 1 - px_h) * iw / (2.0 * px_h);
      for (int i = 0; i < px_w; ++i) {
        const double re = rc + (2 * i + 1 - px_w) * rw / (2.0 * px_w);
        const CriterionReport rep = criterion(Complex{re, im});
        const double m = *std::min_element(rep.m.begin(), rep.m.end());
        std::uint8_t code;
        if (std::abs(m - 1.0) < boundary_band) {
          code = 0;
        } else {
          code = m < 1.0 ? 1 : 2;
        }
        const std::size_t idx = static_cast<std::size_t>(row) * px_w + i;
        scan.image.codes[idx] = code;
        scan.min_m[idx] = m;
      }
    }
  });
  return scan;
}

namespace {

double min_m_halfline(double b) {
  const CriterionReport rep = criterion(Complex{0.5, b});
  return *std::min_element(rep.m.begin(), rep.m.end()) - 1.0;
}

double bisect_halfline(double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = min_m_halfline(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> boundary_scan_halfline(double b_lo, double b_hi, double tol) {
  if (!(b_lo >= kMinImTau) || !(b_lo < b_hi) || !(tol > 0.0)) {
    throw std::invalid_argument("bad half-line scan parameters");
  }
  constexpr int kScan = 256;
  double prev_b = b_lo;
  double prev_f = min_m_halfline(prev_b);
  double down_lo = 0.0, down_hi = 0.0, up_lo = 0.0, up_hi = 0.0;
  double down_flo = 0.0, up_flo = 0.0;
  int sign_changes = 0;
  for (int k = 1; k <= kScan; ++k) {
    const double b = b_lo + (b_hi - b_lo) * k / kScan;
    const double f = min_m_halfline(b);
    if ((f > 0.0) != (prev_f > 0.0)) {
      ++sign_changes;
      if (prev_f > 0.0 && sign_changes == 1) {
        down_lo = prev_b;
        down_hi = b;
        down_flo = prev_f;
      } else if (prev_f < 0.0 && sign_changes == 2) {
        up_lo = prev_b;
        up_hi = b;
        up_flo = prev_f;
      }
    }
    prev_b = b;
    prev_f = f;
  }
  if (sign_changes != 2) {
    throw RootNotBracketedError("expected the +,-,+ sign pattern on the half-line");
  }
  return {bisect_halfline(down_lo, down_hi, down_flo, tol),
          bisect_halfline(up_lo, up_hi, up_flo, tol)};
}

}  // namespace torusgreen
