#pragma once

#include <vector>

#include "torusgreen/elliptic.hpp"

namespace torusgreen {

// Coefficients making F(z) = zeta(z) + a z + b conj(z) doubly periodic:
//   b = -pi / (|omega1|^2 Im tau),   a = pi / (omega1^2 Im tau) - eta1/omega1,
// equivalently eta_j + a omega_j + b conj(omega_j) = 0 for j = 1, 2.
struct GreenCoefficients {
  Complex a;
  Complex b;  // real and negative
};

GreenCoefficients coefficients(const EllipticContext& ctx);

// F(z); its zeros are the critical points of the torus Green's function.
Complex field(Complex z, const EllipticContext& ctx, const GreenCoefficients& co);

// F together with its holomorphic derivative dF/dz = a - wp(z). The
// antiholomorphic derivative is the constant b.
struct FieldJet {
  Complex f;
  Complex df;
};

FieldJet field_jet(Complex z, const EllipticContext& ctx, const GreenCoefficients& co);

// Green's function of the torus C/(Z + tau Z):
//   G(z) = -(1/2pi) log|theta1(z|tau)| + (Im z)^2 / (2 Im tau) [+ C(tau)]
// With normalize set, the additive constant is estimated by midpoint
// quadrature on a kGreenNormGrid^2 cell grid so that the cell mean vanishes.
double green_value(Complex z, Complex tau, bool normalize = false);

inline constexpr int kGreenNormGrid = 256;

// G sampled on a px_w x px_h midpoint grid over the fundamental cell
// (row-major, row 0 at t near 0). One normalization pass is shared.
std::vector<double> green_render(Complex tau, int px_w, int px_h, bool normalize);

// Dichotomy criterion. m_j = |(e_j omega1^2 + eta1 omega1) Im(tau) / pi - 1|;
// three critical points iff min_j m_j <= 1, five otherwise. m_j is also the
// multiplier modulus of the fixed-point map at the half-period omega_j/2.
struct CriterionReport {
  Complex tau;
  std::array<double, 3> m;
  int predicted_count;  // 3 or 5
  bool on_boundary;     // |min_j m_j - 1| < kBoundaryTol
};

inline constexpr double kBoundaryTol = 1e-9;

CriterionReport criterion(Complex tau);

enum class StabilityClass { attracting, neutral, repelling };

const char* to_string(StabilityClass c);

// Multiplier moduli within kNeutralBand of 1 classify as neutral.
inline constexpr double kNeutralBand = 1e-9;

struct CriticalPoint {
  Complex z;                  // reduced to the half-open fundamental cell
  double residual;            // |F(z)|
  double multiplier_modulus;  // |wp(z) - a| / |b|
  StabilityClass cls;
  bool is_half_period;
};

struct CriticalPointSet {
  std::vector<CriticalPoint> points;  // sorted by (Im, Re) of the location
  bool boundary_warning;              // some point is neutral
};

// Newton search seeded at the half-periods, +-(omega1+omega2)/3 and a 64x64
// cell grid; converged points are deduplicated modulo the lattice.
CriticalPointSet find_critical_points(const EllipticContext& ctx,
                                      const GreenCoefficients& co);

// Independent count: scans |F| on a grid_n x grid_n cell grid (grid_n >= 64),
// polishes every sufficiently low local minimum and counts the distinct
// zeros. Does not consult criterion(). Throws OracleInconclusiveError if a
// candidate cannot be polished below residual 1e-8.
int count_oracle(const EllipticContext& ctx, const GreenCoefficients& co,
                 int grid_n);

}  // namespace torusgreen
