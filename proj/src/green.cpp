#include "torusgreen/green.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace torusgreen {

GreenCoefficients coefficients(const EllipticContext& ctx) {
  const Complex w1 = ctx.lattice.omega1;
  const double im_tau = ctx.lattice.tau.imag();
  const double b = -kPi / (std::norm(w1) * im_tau);
  const Complex a = kPi / (w1 * w1 * im_tau) - ctx.eta1 / w1;
  return GreenCoefficients{a, Complex{b, 0.0}};
}

Complex field(Complex z, const EllipticContext& ctx, const GreenCoefficients& co) {
  return field_jet(z, ctx, co).f;
}

FieldJet field_jet(Complex z, const EllipticContext& ctx, const GreenCoefficients& co) {
  // F is exactly doubly periodic, so evaluate at the centered representative;
  // this also keeps the theta series in its fast-convergence range.
  const Complex z0 = reduce_centered(z, ctx.lattice);
  if (std::abs(z0) < kPoleGuard * std::abs(ctx.lattice.omega1)) {
    throw PoleInputError("field evaluation too close to a lattice point");
  }
  const Complex w1 = ctx.lattice.omega1;
  const Theta1Block b = theta1_block(z0 / w1, ctx);
  const Complex zeta0 = (ctx.eta1 / w1) * z0 + b.d1 / b.t / w1;
  const Complex wp0 =
      -ctx.eta1 / w1 - (b.d2 * b.t - b.d1 * b.d1) / (b.t * b.t) / (w1 * w1);
  return FieldJet{zeta0 + co.a * z0 + co.b * std::conj(z0), co.a - wp0};
}

// ---------------------------------------------------------------------------
// Green's function

namespace {

double green_unnormalized(Complex z, const Lattice& lat, const EllipticContext& ctx) {
  const Complex z0 = reduce_centered(z, lat);
  if (std::abs(z0) < kPoleGuard) {
    throw PoleInputError("Green's function evaluated at the logarithmic singularity");
  }
  const Theta1Block b = theta1_block(z0, ctx);
  const double im = z0.imag();
  return -std::log(std::abs(b.t)) / (2.0 * kPi) + im * im / (2.0 * lat.tau.imag());
}

double green_mean(const Lattice& lat, const EllipticContext& ctx, int n) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = (j + 0.5) / n;
    for (int i = 0; i < n; ++i) {
      const double s = (i + 0.5) / n;
      sum += green_unnormalized(from_cell_coords({s, t}, lat), lat, ctx);
    }
  }
  return sum / (static_cast<double>(n) * n);
}

}  // namespace

double green_value(Complex z, Complex tau, bool normalize) {
  const Lattice lat = make_lattice(1.0, tau);
  const EllipticContext ctx = build_context(lat);
  double value = green_unnormalized(z, lat, ctx);
  if (normalize) {
    value -= green_mean(lat, ctx, kGreenNormGrid);
  }
  return value;
}

std::vector<double> green_render(Complex tau, int px_w, int px_h, bool normalize) {
  const Lattice lat = make_lattice(1.0, tau);
  const EllipticContext ctx = build_context(lat);
  const double offset = normalize ? green_mean(lat, ctx, kGreenNormGrid) : 0.0;
  std::vector<double> values(static_cast<std::size_t>(px_w) * px_h);
  for (int j = 0; j < px_h; ++j) {
    const double t = (j + 0.5) / px_h;
    for (int i = 0; i < px_w; ++i) {
      const double s = (i + 0.5) / px_w;
      values[static_cast<std::size_t>(j) * px_w + i] =
          green_unnormalized(from_cell_coords({s, t}, lat), lat, ctx) - offset;
    }
  }
  return values;
}

// ---------------------------------------------------------------------------
// Dichotomy criterion

CriterionReport criterion(Complex tau) {
  const ThetaConstants tc = theta_constants(tau);
  const Complex eta1_w1 = -tc.th1ppp0 / (3.0 * tc.th1p0);
  const double im_tau = tau.imag();

  CriterionReport rep;
  rep.tau = tau;
  const int pairing[3] = {2, 3, 0};
  std::array<Complex, 3> w;
  for (int j = 0; j < 3; ++j) {
    const int idx = even_index(pairing[j]);
    w[j] = -tc.even_dd0[idx] / tc.even_at0[idx];
    rep.m[j] = std::abs(w[j] * (im_tau / kPi) - 1.0);
  }
  const double min_m = *std::min_element(rep.m.begin(), rep.m.end());
  rep.predicted_count = min_m <= 1.0 ? 3 : 5;
  rep.on_boundary = std::abs(min_m - 1.0) < kBoundaryTol;

  // Cross-check against the equivalent half-plane form
  // Im(2 pi i / w_j - tau) >= 0; w_j = 0 (three points by the degenerate
  // clause) is exactly m_j = 1 and needs no division.
  if (!rep.on_boundary) {
    bool any_im_form = false;
    for (int j = 0; j < 3; ++j) {
      if (std::abs(w[j]) < 1e-12) {
        any_im_form = true;
        continue;
      }
      if (std::abs(rep.m[j] - 1.0) < kBoundaryTol) continue;
      const bool im_form = (Complex{0.0, 2.0 * kPi} / w[j] - tau).imag() >= 0.0;
      if (im_form != (rep.m[j] < 1.0)) {
        throw Error("criterion forms disagree; inconsistent theta constants");
      }
      any_im_form = any_im_form || im_form;
    }
    if ((rep.predicted_count == 3) != any_im_form) {
      throw Error("criterion forms disagree on the predicted count");
    }
  }
  return rep;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::attracting:
      return "attracting";
    case StabilityClass::neutral:
      return "neutral";
    case StabilityClass::repelling:
      return "repelling";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Newton search

namespace {

struct NewtonSettings {
  int max_iter = 50;
  double step_tol_factor = 1e-13;  // converged when |step| < factor * |omega1|
  double det_tol = 1e-12;          // relative near-singularity threshold
};

// One mixed-Wirtinger Newton solve of F(z) = 0 from the given seed.
// F(z + d) ~ F + dF*d + b*conj(d); solving the 2x2 real system gives
// d = (-F conj(dF) + b conj(F)) / (|dF|^2 - |b|^2). Near-singular iterates
// (neutral points) fall back to a damped gradient step on |F|^2.
std::optional<Complex> newton_polish(Complex z, const EllipticContext& ctx,
                                     const GreenCoefficients& co,
                                     const NewtonSettings& s = {}) {
  const double scale = std::abs(ctx.lattice.omega1);
  const double fscale = std::max(1.0, std::abs(co.a) + std::abs(co.b));
  const double b = co.b.real();

  auto jet_at = [&](Complex p) {
    // nudge off poles rather than aborting the iteration
    if (dist_to_lattice(p, ctx.lattice) < kPoleGuard * scale) {
      p += Complex{2.0 * kPoleGuard, kPoleGuard} * scale;
    }
    return std::make_pair(p, field_jet(p, ctx, co));
  };

  auto [zc, jet] = jet_at(z);
  z = zc;
  for (int it = 0; it < s.max_iter; ++it) {
    const double fnorm = std::abs(jet.f);
    if (fnorm < 1e-14 * fscale) return z;

    const double det = std::norm(jet.df) - b * b;
    Complex step;
    if (std::abs(det) < s.det_tol * (std::norm(jet.df) + b * b)) {
      // gradient of |F|^2 with respect to conj(z) is b*conj(F) + conj(dF)*F
      const Complex grad = b * std::conj(jet.f) + std::conj(jet.df) * jet.f;
      const double g2 = std::norm(jet.df) + b * b;
      step = -grad / g2;
    } else {
      step = (-jet.f * std::conj(jet.df) + b * std::conj(jet.f)) / det;
    }

    // halve on residual increase
    Complex znew;
    FieldJet jnew;
    bool accepted = false;
    for (int k = 0; k < 8; ++k) {
      auto [zt, jt] = jet_at(z + step);
      if (std::abs(jt.f) <= fnorm || std::abs(step) < s.step_tol_factor * scale) {
        znew = zt;
        jnew = jt;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) return std::nullopt;
    const bool small_step = std::abs(znew - z) < s.step_tol_factor * scale;
    z = znew;
    jet = jnew;
    if (small_step && std::abs(jet.f) < 1e-10 * fscale) return z;
  }
  return std::abs(jet.f) < 1e-10 * fscale ? std::optional<Complex>(z) : std::nullopt;
}

StabilityClass classify(double mult) {
  if (std::abs(mult - 1.0) < kNeutralBand) return StabilityClass::neutral;
  return mult < 1.0 ? StabilityClass::attracting : StabilityClass::repelling;
}

bool near_half_period(Complex z, const Lattice& lat) {
  const Complex w1 = lat.omega1, w2 = lat.omega2;
  for (Complex h : {0.5 * w1, 0.5 * w2, 0.5 * (w1 + w2)}) {
    if (equal_mod_lattice(z, h, lat, 1e-6)) return true;
  }
  return false;
}

// A degenerate (neutral) zero is always a half-period, and there the Newton
// iteration stalls at ~sqrt(residual) accuracy, scattering limits around the
// true point. Snapping inside the stall radius collapses that cluster; a
// genuine distinct zero can only sit this close to a half-period when tau is
// numerically on the dichotomy boundary.
Complex snap_half_period(Complex z, const Lattice& lat) {
  const Complex w1 = lat.omega1, w2 = lat.omega2;
  for (Complex h : {0.5 * w1, 0.5 * w2, 0.5 * (w1 + w2)}) {
    if (equal_mod_lattice(z, h, lat, 1e-4)) return reduce_mod_lattice(h, lat);
  }
  return z;
}

// Polishes the seed and, on success, merges the zero into `points`.
void accumulate_zero(Complex seed, const EllipticContext& ctx,
                     const GreenCoefficients& co, std::vector<CriticalPoint>& points) {
  const auto zopt = newton_polish(seed, ctx, co);
  if (!zopt) return;
  const Complex z =
      snap_half_period(reduce_mod_lattice(*zopt, ctx.lattice), ctx.lattice);
  for (const CriticalPoint& p : points) {
    if (equal_mod_lattice(z, p.z, ctx.lattice)) return;
  }
  const double residual = std::abs(field(z, ctx, co));
  const double mult = std::abs(wp(z, ctx) - co.a) / std::abs(co.b);
  points.push_back(CriticalPoint{z, residual, mult, classify(mult),
                                 near_half_period(z, ctx.lattice)});
}

}  // namespace

CriticalPointSet find_critical_points(const EllipticContext& ctx,
                                      const GreenCoefficients& co) {
  const Complex w1 = ctx.lattice.omega1, w2 = ctx.lattice.omega2;
  std::vector<CriticalPoint> points;

  accumulate_zero(0.5 * w1, ctx, co, points);
  accumulate_zero(0.5 * w2, ctx, co, points);
  accumulate_zero(0.5 * (w1 + w2), ctx, co, points);
  // extra fixed points sit at the cell thirds for the hexagonal lattice and
  // continue from there nearby
  accumulate_zero((w1 + w2) / 3.0, ctx, co, points);
  accumulate_zero(-(w1 + w2) / 3.0, ctx, co, points);

  constexpr int kGrid = 64;
  for (int j = 0; j < kGrid; ++j) {
    for (int i = 0; i < kGrid; ++i) {
      const Complex seed =
          from_cell_coords({(i + 0.5) / kGrid, (j + 0.5) / kGrid}, ctx.lattice);
      accumulate_zero(seed, ctx, co, points);
    }
  }

  std::sort(points.begin(), points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
    return a.z.real() < b.z.real();
  });
  const bool boundary = std::any_of(points.begin(), points.end(), [](const CriticalPoint& p) {
    return p.cls == StabilityClass::neutral;
  });
  return CriticalPointSet{std::move(points), boundary};
}

int count_oracle(const EllipticContext& ctx, const GreenCoefficients& co, int grid_n) {
  if (grid_n < 64) {
    throw std::invalid_argument("count_oracle requires grid_n >= 64");
  }
  const int n = grid_n;
  std::vector<double> mag(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Complex z = from_cell_coords({(i + 0.5) / n, (j + 0.5) / n}, ctx.lattice);
      mag[static_cast<std::size_t>(j) * n + i] = std::abs(field(z, ctx, co));
    }
  }

  // Every zero has a grid sample within |b| (m_max + 1) * cell_diag / n of it;
  // 20 |b| cell_diag / n clears that for every multiplier the window produces
  // while skipping most saddle minima.
  const double cell_diag = std::abs(ctx.lattice.omega1) + std::abs(ctx.lattice.omega2);
  const double threshold = 20.0 * std::abs(co.b) * cell_diag / n;

  std::vector<Complex> zeros;
  auto value = [&](int i, int j) {
    return mag[static_cast<std::size_t>((j + n) % n) * n + ((i + n) % n)];
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = value(i, j);
      if (v >= threshold) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          if (value(i + di, j + dj) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;
      const Complex seed = from_cell_coords({(i + 0.5) / n, (j + 0.5) / n}, ctx.lattice);
      const auto zopt = newton_polish(seed, ctx, co);
      if (!zopt || std::abs(field(*zopt, ctx, co)) > 1e-8) {
        throw OracleInconclusiveError("grid candidate did not polish to a zero");
      }
      const Complex z = reduce_mod_lattice(*zopt, ctx.lattice);
      const bool dup = std::any_of(zeros.begin(), zeros.end(), [&](Complex p) {
        return equal_mod_lattice(z, p, ctx.lattice);
      });
      if (!dup) zeros.push_back(z);
    }
  }
  return static_cast<int>(zeros.size());
}

}  // namespace torusgreen
