#pragma once

#include <vector>

#include "torusgreen/lattice.hpp"
#include "torusgreen/theta.hpp"

namespace torusgreen {

// Precomputed data for evaluating the Weierstrass functions on one lattice.
//
// eta1 satisfies eta1*omega1 = -theta1'''(0) / (3*theta1'(0)); eta2 follows
// from the Legendre relation eta1*omega2 - eta2*omega1 = 2 pi i. The array e
// holds e1 = wp(omega1/2), e2 = wp((omega1+omega2)/2), e3 = wp(omega2/2),
// obtained from e_j*omega1^2 + eta1*omega1 = -theta_k''(0)/theta_k(0) with the
// pairing e1 <-> theta2, e2 <-> theta3, e3 <-> theta0.
struct EllipticContext {
  Lattice lattice;
  ThetaConstants constants;
  Complex eta1;
  Complex eta2;
  std::array<Complex, 3> e;
  std::vector<Complex> th1_coeff;  // (-1)^n q^{(n+1/2)^2}, internal
};

// Evaluations closer than kPoleGuard * |omega1| to a lattice point raise
// PoleInputError.
inline constexpr double kPoleGuard = 1e-6;

EllipticContext build_context(const Lattice& lat);

// theta1 and its first two v-derivatives evaluated together; the quotients
// feed both zeta and wp, and the Newton steps want all three at once.
struct Theta1Block {
  Complex t;
  Complex d1;
  Complex d2;
};

// v is expected reduced so that |Im v| <= Im(tau)/2 (zeta/wp reduce first).
Theta1Block theta1_block(Complex v, const EllipticContext& ctx);

// zeta(z) = (eta1/omega1) z + (1/omega1) theta1'(z/omega1)/theta1(z/omega1),
// extended by quasi-periodicity zeta(z + omega_j) = zeta(z) + eta_j.
Complex zeta(Complex z, const EllipticContext& ctx);

// wp = -zeta', doubly periodic.
Complex wp(Complex z, const EllipticContext& ctx);

}  // namespace torusgreen
