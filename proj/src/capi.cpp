#include "torusgreen.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "torusgreen/dynamics.hpp"
#include "torusgreen/green.hpp"
#include "torusgreen/ninth.hpp"
#include "torusgreen/raster.hpp"
#include "torusgreen/region.hpp"

using namespace torusgreen;

struct tg_torus {
  EllipticContext ctx;
  GreenCoefficients co;
};

struct tg_image {
  RasterImage img;
};

namespace {

Complex to_cpp(tg_complex z) { return Complex{z.re, z.im}; }
tg_complex to_c(Complex z) { return tg_complex{z.real(), z.imag()}; }

tg_stability to_c(StabilityClass c) {
  switch (c) {
    case StabilityClass::attracting:
      return TG_ATTRACTING;
    case StabilityClass::neutral:
      return TG_NEUTRAL;
    case StabilityClass::repelling:
      return TG_REPELLING;
  }
  return TG_REPELLING;
}

// Every entry point funnels through here so exceptions never cross the ABI.
template <typename Fn>
tg_status guarded(Fn&& fn) {
  try {
    fn();
    return TG_OK;
  } catch (const DegenerateLatticeError&) {
    return TG_ERR_DEGENERATE_LATTICE;
  } catch (const PrecisionLossError&) {
    return TG_ERR_PRECISION_LOSS;
  } catch (const PoleInputError&) {
    return TG_ERR_POLE_INPUT;
  } catch (const RootNotBracketedError&) {
    return TG_ERR_ROOT_NOT_BRACKETED;
  } catch (const OracleInconclusiveError&) {
    return TG_ERR_ORACLE_INCONCLUSIVE;
  } catch (const IoError&) {
    return TG_ERR_IO;
  } catch (const std::invalid_argument&) {
    return TG_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return TG_ERR_INTERNAL;
  } catch (...) {
    return TG_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* tg_status_message(tg_status status) {
  switch (status) {
    case TG_OK:
      return "ok";
    case TG_ERR_DEGENERATE_LATTICE:
      return "generators do not span a lattice with Im(omega2/omega1) > 0";
    case TG_ERR_PRECISION_LOSS:
      return "Im(tau) below the supported minimum or series not converged";
    case TG_ERR_POLE_INPUT:
      return "evaluation too close to a lattice point";
    case TG_ERR_ROOT_NOT_BRACKETED:
      return "bracketing scan did not find the expected sign pattern";
    case TG_ERR_ORACLE_INCONCLUSIVE:
      return "grid count could not polish all candidates";
    case TG_ERR_IO:
      return "file output failed";
    case TG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TG_ERR_BUFFER_TOO_SMALL:
      return "output buffer too small";
    case TG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

tg_status tg_torus_create(tg_complex omega1, tg_complex omega2, tg_torus** out) {
  if (!out) return TG_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<tg_torus>();
    handle->ctx = build_context(make_lattice(to_cpp(omega1), to_cpp(omega2)));
    handle->co = coefficients(handle->ctx);
    *out = handle.release();
  });
}

tg_status tg_torus_create_tau(tg_complex tau, tg_torus** out) {
  return tg_torus_create(tg_complex{1.0, 0.0}, tau, out);
}

void tg_torus_destroy(tg_torus* torus) { delete torus; }

tg_complex tg_torus_tau(const tg_torus* t) { return to_c(t->ctx.lattice.tau); }
tg_complex tg_torus_eta1(const tg_torus* t) { return to_c(t->ctx.eta1); }
tg_complex tg_torus_eta2(const tg_torus* t) { return to_c(t->ctx.eta2); }
tg_complex tg_torus_a(const tg_torus* t) { return to_c(t->co.a); }
tg_complex tg_torus_b(const tg_torus* t) { return to_c(t->co.b); }

tg_complex tg_torus_e(const tg_torus* t, int j) {
  if (j < 1 || j > 3) return tg_complex{0.0, 0.0};
  return to_c(t->ctx.e[j - 1]);
}

tg_status tg_zeta(const tg_torus* t, tg_complex z, tg_complex* out) {
  if (!t || !out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = to_c(zeta(to_cpp(z), t->ctx)); });
}

tg_status tg_wp(const tg_torus* t, tg_complex z, tg_complex* out) {
  if (!t || !out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = to_c(wp(to_cpp(z), t->ctx)); });
}

tg_status tg_field(const tg_torus* t, tg_complex z, tg_complex* out) {
  if (!t || !out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = to_c(field(to_cpp(z), t->ctx, t->co)); });
}

tg_status tg_g_map(const tg_torus* t, tg_complex z, tg_complex* out) {
  if (!t || !out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = to_c(g_map(to_cpp(z), t->ctx, t->co)); });
}

tg_status tg_multiplier_modulus(const tg_torus* t, tg_complex z, double* out) {
  if (!t || !out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = multiplier_modulus(to_cpp(z), t->ctx, t->co); });
}

tg_status tg_green_value(tg_complex tau, tg_complex z, int normalize, double* out) {
  if (!out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = green_value(to_cpp(z), to_cpp(tau), normalize != 0); });
}

tg_status tg_green_render(tg_complex tau, int px_w, int px_h, int normalize,
                          double* values) {
  if (!values || px_w < 1 || px_h < 1) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<double> grid = green_render(to_cpp(tau), px_w, px_h, normalize != 0);
    std::memcpy(values, grid.data(), grid.size() * sizeof(double));
  });
}

tg_status tg_criterion(tg_complex tau, tg_criterion_report* out) {
  if (!out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const CriterionReport rep = criterion(to_cpp(tau));
    out->m[0] = rep.m[0];
    out->m[1] = rep.m[1];
    out->m[2] = rep.m[2];
    out->predicted_count = rep.predicted_count;
    out->on_boundary = rep.on_boundary ? 1 : 0;
  });
}

tg_status tg_find_critical_points(const tg_torus* t, tg_critical_point* points,
                                  int capacity, int* count, int* boundary_warning) {
  if (!t || !points || !count || capacity < 0) return TG_ERR_INVALID_ARGUMENT;
  bool too_small = false;
  const tg_status st = guarded([&] {
    const CriticalPointSet set = find_critical_points(t->ctx, t->co);
    *count = static_cast<int>(set.points.size());
    if (boundary_warning) *boundary_warning = set.boundary_warning ? 1 : 0;
    if (capacity < *count) {
      too_small = true;
      return;
    }
    for (int i = 0; i < *count; ++i) {
      const CriticalPoint& p = set.points[static_cast<std::size_t>(i)];
      points[i] = tg_critical_point{to_c(p.z), p.residual, p.multiplier_modulus,
                                    to_c(p.cls), p.is_half_period ? 1 : 0};
    }
  });
  if (st != TG_OK) return st;
  return too_small ? TG_ERR_BUFFER_TOO_SMALL : TG_OK;
}

tg_status tg_count_oracle(const tg_torus* t, int grid_n, int* count) {
  if (!t || !count) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] { *count = count_oracle(t->ctx, t->co, grid_n); });
}

tg_status tg_critical_orbits(const tg_torus* t, int max_iter, tg_orbit_summary out[2]) {
  if (!t || !out || max_iter < 1) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto orbits = critical_orbits(t->ctx, t->co, max_iter);
    for (int k = 0; k < 2; ++k) {
      out[k] = tg_orbit_summary{to_c(orbits[k].start), orbits[k].converged ? 1 : 0,
                                to_c(orbits[k].limit), orbits[k].iterations};
    }
  });
}

int tg_image_width(const tg_image* img) { return img ? img->img.width : 0; }
int tg_image_height(const tg_image* img) { return img ? img->img.height : 0; }

const unsigned char* tg_image_codes(const tg_image* img) {
  return img ? img->img.codes.data() : nullptr;
}

void tg_image_destroy(tg_image* img) { delete img; }

tg_status tg_image_write(const tg_image* img, const char* format, const char* path) {
  if (!img || !format || !path) return TG_ERR_INVALID_ARGUMENT;
  ImageFormat fmt;
  if (std::strcmp(format, "ppm") == 0) {
    fmt = ImageFormat::ppm;
  } else if (std::strcmp(format, "pgm") == 0) {
    fmt = ImageFormat::pgm;
  } else {
    return TG_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { write_image(img->img, fmt, path); });
}

tg_status tg_render_region(double re_lo, double re_hi, double im_lo, double im_hi,
                           int px_w, int px_h, double boundary_band,
                           tg_image** out, double* min_m) {
  if (!out) return TG_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    RegionScan scan = render_region(re_lo, re_hi, im_lo, im_hi, px_w, px_h,
                                    boundary_band > 0.0 ? boundary_band : kBoundaryBand);
    if (min_m) {
      std::memcpy(min_m, scan.min_m.data(), scan.min_m.size() * sizeof(double));
    }
    *out = new tg_image{std::move(scan.image)};
  });
}

tg_status tg_render_julia(const tg_torus* t, double s_lo, double s_hi, double t_lo,
                          double t_hi, int px_w, int px_h, int max_iter,
                          tg_image** out) {
  if (!t || !out || px_w < 1 || px_h < 1 || max_iter < 1) {
    return TG_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    RasterImage img = render_julia(t->ctx, t->co, Viewport{s_lo, s_hi, t_lo, t_hi},
                                   px_w, px_h, max_iter);
    *out = new tg_image{std::move(img)};
  });
}

tg_status tg_ninth(tg_ninth_report* out) {
  if (!out) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const NinthReport rep = solve_lambda();
    *out = tg_ninth_report{rep.lambda, rep.b0, rep.b1, rep.residual};
  });
}

tg_status tg_boundary_scan(double b_lo, double b_hi, double tol, double* b0, double* b1) {
  if (!b0 || !b1) return TG_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto [lo, hi] = boundary_scan_halfline(b_lo, b_hi, tol);
    *b0 = lo;
    *b1 = hi;
  });
}

}  // extern "C"
