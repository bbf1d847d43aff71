#pragma once

#include <array>
#include <vector>

#include "torusgreen/green.hpp"
#include "torusgreen/raster.hpp"

namespace torusgreen {

// The antiholomorphic fixed-point map
//   g(z) = -(1/b) (conj(zeta(z)) + conj(a z)),
// whose fixed points are exactly the zeros of F. Satisfies
// g(z + omega) = g(z) + omega for omega in the lattice.
Complex g_map(Complex z, const EllipticContext& ctx, const GreenCoefficients& co);

// |wp(z) - a| / |b|; at a fixed point of g this is the modulus of the
// antiholomorphic multiplier, and its square is the (real, non-negative)
// multiplier of g composed with itself.
double multiplier_modulus(Complex z, const EllipticContext& ctx,
                          const GreenCoefficients& co);

struct FixedPointInfo {
  Complex z;  // reduced to the fundamental cell
  double multiplier_modulus;
  StabilityClass cls;
  bool is_half_period;
};

// Fixed points of g, located through the critical-point search and verified
// against |g(z) - z| modulo the lattice.
std::vector<FixedPointInfo> fixed_points(const EllipticContext& ctx,
                                         const GreenCoefficients& co);

struct OrbitSummary {
  Complex start;
  bool converged = false;
  Complex limit;  // reduced fixed point reached; valid when converged
  int iterations = 0;
};

// Solves wp(c) = a and iterates g from +-c. Each summary reports the fixed
// point the orbit reached, or non-convergence after max_iter (expected only
// near boundary parameters).
std::array<OrbitSummary, 2> critical_orbits(const EllipticContext& ctx,
                                            const GreenCoefficients& co,
                                            int max_iter);

// Basin classification over a cell-coordinate viewport (x axis: multiples of
// omega1, y axis: multiples of omega2). Code 0 marks pixels that never
// converged (the rendered approximation of the Julia set); code k >= 1 is the
// basin of the k-th attracting or neutral fixed point, ordered by (Im, Re) of
// the reduced location.
RasterImage render_julia(const EllipticContext& ctx, const GreenCoefficients& co,
                         const Viewport& viewport, int px_w, int px_h,
                         int max_iter);

}  // namespace torusgreen
