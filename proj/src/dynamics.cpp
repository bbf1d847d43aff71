#include "torusgreen/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace torusgreen {

Complex g_map(Complex z, const EllipticContext& ctx, const GreenCoefficients& co) {
  // g(z + omega) = g(z) + omega exactly, so evaluate at the centered
  // representative and add the removed periods back.
  const Complex z0 = reduce_centered(z, ctx.lattice);
  if (std::abs(z0) < kPoleGuard * std::abs(ctx.lattice.omega1)) {
    throw PoleInputError("g evaluated at a pole");
  }
  const Complex w1 = ctx.lattice.omega1;
  const Theta1Block b = theta1_block(z0 / w1, ctx);
  const Complex zeta0 = (ctx.eta1 / w1) * z0 + b.d1 / b.t / w1;
  return -(std::conj(zeta0) + std::conj(co.a * z0)) / co.b + (z - z0);
}

double multiplier_modulus(Complex z, const EllipticContext& ctx,
                          const GreenCoefficients& co) {
  return std::abs(wp(z, ctx) - co.a) / std::abs(co.b);
}

std::vector<FixedPointInfo> fixed_points(const EllipticContext& ctx,
                                         const GreenCoefficients& co) {
  std::vector<FixedPointInfo> out;
  for (const CriticalPoint& p : find_critical_points(ctx, co).points) {
    const Complex displaced = diff_mod_lattice(g_map(p.z, ctx, co), p.z, ctx.lattice);
    if (std::abs(displaced) > 1e-8 * std::abs(ctx.lattice.omega1)) continue;
    out.push_back(FixedPointInfo{p.z, p.multiplier_modulus, p.cls, p.is_half_period});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Critical orbits

namespace {

// Newton for wp(c) = a with a central-difference derivative; wp' itself is
// not needed anywhere else.
Complex solve_wp_equals(Complex target, const EllipticContext& ctx) {
  const double scale = std::abs(ctx.lattice.omega1);
  const double h = 1e-7 * scale;

  Complex best{};
  double best_val = std::numeric_limits<double>::infinity();
  constexpr int kSeedGrid = 16;
  for (int j = 0; j < kSeedGrid; ++j) {
    for (int i = 0; i < kSeedGrid; ++i) {
      const Complex z =
          from_cell_coords({(i + 0.5) / kSeedGrid, (j + 0.5) / kSeedGrid}, ctx.lattice);
      const double v = std::abs(wp(z, ctx) - target);
      if (v < best_val) {
        best_val = v;
        best = z;
      }
    }
  }

  Complex c = best;
  for (int it = 0; it < 60; ++it) {
    const Complex r = wp(c, ctx) - target;
    if (std::abs(r) < 1e-11 * (1.0 + std::abs(target))) return c;
    const Complex d = (wp(c + h, ctx) - wp(c - h, ctx)) / (2.0 * h);
    if (d == Complex{0.0, 0.0}) break;
    Complex step = -r / d;
    const double cap = 0.2 * scale;
    if (std::abs(step) > cap) step *= cap / std::abs(step);
    c += step;
    if (dist_to_lattice(c, ctx.lattice) < 4.0 * kPoleGuard * scale) {
      c += Complex{8.0 * kPoleGuard, 4.0 * kPoleGuard} * scale;
    }
  }
  throw Error("could not solve wp(c) = a for the critical point of g");
}

}  // namespace

std::array<OrbitSummary, 2> critical_orbits(const EllipticContext& ctx,
                                            const GreenCoefficients& co,
                                            int max_iter) {
  const auto fps = fixed_points(ctx, co);
  const Complex c = solve_wp_equals(co.a, ctx);

  std::array<OrbitSummary, 2> out;
  const Complex starts[2] = {c, -c};
  for (int k = 0; k < 2; ++k) {
    OrbitSummary& orbit = out[k];
    orbit.start = reduce_mod_lattice(starts[k], ctx.lattice);
    Complex z = orbit.start;
    for (int it = 0; it < max_iter; ++it) {
      z = reduce_mod_lattice(g_map(z, ctx, co), ctx.lattice);
      orbit.iterations = it + 1;
      for (const FixedPointInfo& fp : fps) {
        if (fp.cls == StabilityClass::repelling) continue;
        if (std::abs(diff_mod_lattice(z, fp.z, ctx.lattice)) < 1e-7) {
          orbit.converged = true;
          orbit.limit = fp.z;
          break;
        }
      }
      if (orbit.converged) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Julia / basin rendering

namespace {

struct BasinTarget {
  double s;
  double t;
  bool neutral;
};

// Orbit iteration over fractional cell coordinates with the reduction, pole
// nudge and theta quotient fused into one pass. Distances are measured in the
// plane metric |ds*omega1 + dt*omega2|.
class OrbitStepper {
 public:
  OrbitStepper(const EllipticContext& ctx, const GreenCoefficients& co)
      : ctx_(ctx),
        w1_(ctx.lattice.omega1),
        w2_(ctx.lattice.omega2),
        re_tau_(ctx.lattice.tau.real()),
        inv_im_tau_(1.0 / ctx.lattice.tau.imag()),
        eta1_over_w1_(ctx.eta1 / ctx.lattice.omega1),
        inv_w1_(1.0 / ctx.lattice.omega1),
        a_(co.a),
        inv_b_(1.0 / co.b.real()),
        pole_guard2_(kPoleGuard * kPoleGuard * std::norm(ctx.lattice.omega1)) {}

  void step(double& s, double& t) const {
    double s0 = s - std::floor(s + 0.5);
    double t0 = t - std::floor(t + 0.5);
    Complex z0 = s0 * w1_ + t0 * w2_;
    if (std::norm(z0) < pole_guard2_) {
      z0 += Complex{1e-9, 1e-9};
    }
    const Theta1Block b = theta1_block(z0 * inv_w1_, ctx_);
    const Complex zeta0 = eta1_over_w1_ * z0 + b.d1 / b.t * inv_w1_;
    const Complex w = -std::conj(zeta0 + a_ * z0) * inv_b_;
    // back to fractional coordinates
    const Complex v = w * inv_w1_;
    const double tn = v.imag() * inv_im_tau_;
    const double sn = v.real() - tn * re_tau_;
    s = sn - std::floor(sn);
    t = tn - std::floor(tn);
  }

  double dist2(double s1, double t1, double s2, double t2) const {
    double ds = s1 - s2;
    double dt = t1 - t2;
    ds -= std::floor(ds + 0.5);
    dt -= std::floor(dt + 0.5);
    return std::norm(ds * w1_ + dt * w2_);
  }

 private:
  const EllipticContext& ctx_;
  Complex w1_, w2_;
  double re_tau_, inv_im_tau_;
  Complex eta1_over_w1_, inv_w1_;
  Complex a_;
  double inv_b_;
  double pole_guard2_;
};

// Neutral targets cannot be reached by plain proximity in reasonable time
// (petal convergence is polynomial, distance ~ n^{-1/2}), so they also
// capture orbits whose second-iterate displacement has stagnated nearby.
int classify_orbit(double s, double t, const OrbitStepper& stepper,
                   const std::vector<BasinTarget>& targets, int max_iter,
                   double eps2, double stag2, double capture2) {
  double ps = 0.0, pt = 0.0;  // two steps back
  int stagnant = 0;
  for (int it = 0; it < max_iter; ++it) {
    const double s_prev = s, t_prev = t;
    stepper.step(s, t);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (stepper.dist2(s, t, targets[k].s, targets[k].t) < eps2) {
        return static_cast<int>(k) + 1;
      }
    }
    if (it >= 2) {
      stagnant = stepper.dist2(s, t, ps, pt) < stag2 ? stagnant + 1 : 0;
      if (stagnant >= 3) {
        for (std::size_t k = 0; k < targets.size(); ++k) {
          if (targets[k].neutral &&
              stepper.dist2(s, t, targets[k].s, targets[k].t) < capture2) {
            return static_cast<int>(k) + 1;
          }
        }
        stagnant = 0;
      }
    }
    ps = s_prev;
    pt = t_prev;
  }
  return 0;
}

}  // namespace

RasterImage render_julia(const EllipticContext& ctx, const GreenCoefficients& co,
                         const Viewport& viewport, int px_w, int px_h, int max_iter) {
  std::vector<BasinTarget> targets;
  bool any_neutral = false;
  for (const FixedPointInfo& fp : fixed_points(ctx, co)) {
    if (fp.cls == StabilityClass::repelling) continue;
    const CellCoords c = cell_coords(fp.z, ctx.lattice);
    targets.push_back({c.s, c.t, fp.cls == StabilityClass::neutral});
    any_neutral |= fp.cls == StabilityClass::neutral;
  }
  const double scale = std::abs(ctx.lattice.omega1);
  const double eps_conv = (any_neutral ? 1e-4 : 1e-6) * scale;
  const double stag_tol = 2e-5 * scale;
  const double capture_radius =
      0.1 * std::min(std::abs(ctx.lattice.omega1), std::abs(ctx.lattice.omega2));
  const OrbitStepper stepper(ctx, co);

  RasterImage img;
  img.width = px_w;
  img.height = px_h;
  img.viewport = viewport;
  img.codes.assign(static_cast<std::size_t>(px_w) * px_h, 0);

  const double sc = 0.5 * (viewport.x_lo + viewport.x_hi);
  const double tc = 0.5 * (viewport.y_lo + viewport.y_hi);
  const double sw = viewport.x_hi - viewport.x_lo;
  const double th = viewport.y_hi - viewport.y_lo;

  parallel_chunks(px_h, [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      // row 0 is the top of the image (largest t)
      const int j = px_h - 1 - row;
      const double t = tc + (2 * j + 1 - px_h) * th / (2.0 * px_h);
      for (int i = 0; i < px_w; ++i) {
        const double s = sc + (2 * i + 1 - px_w) * sw / (2.0 * px_w);
        img.codes[static_cast<std::size_t>(row) * px_w + i] = static_cast<std::uint8_t>(
            classify_orbit(s, t, stepper, targets, max_iter, eps_conv * eps_conv,
                           stag_tol * stag_tol, capture_radius * capture_radius));
      }
    }
  });
  return img;
}

}  // namespace torusgreen
