#pragma once

#include <array>

#include "torusgreen/defs.hpp"
#include "torusgreen/errors.hpp"

namespace torusgreen {

// Jacobi theta functions with quasi-periods 1 and tau in the variable v and
// nome q = exp(i pi tau):
//
//   theta1(v) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
//   theta2(v) = 2 sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1) pi v)
//   theta3(v) = 1 + 2 sum_{n>=1}        q^{n^2} cos(2 n pi v)
//   theta0(v) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2 n pi v)
//
// Index k = 0 names the last series (written theta4 in many references).

// Minimum Im(tau); below this the caller must apply a modular transformation
// before evaluating. At the minimum, |q| ~ 0.85 and the series still converge
// well within the term budget.
inline constexpr double kMinImTau = 0.05;

// Relative term tolerance: summation stops once consecutive terms fall below
// kTermTol * (|partial sum| + 1).
inline constexpr double kTermTol = 1e-16;

// Hard cap on series length; exceeding it raises PrecisionLossError rather
// than returning a half-converged value.
inline constexpr int kMaxTerms = 256;

// Values at v = 0 needed by the elliptic layer. The even-theta arrays are
// indexed in the order (theta0, theta2, theta3).
struct ThetaConstants {
  Complex tau;
  Complex q;
  Complex th1p0;                    // theta1'(0), derivative in v
  Complex th1ppp0;                  // theta1'''(0)
  std::array<Complex, 3> even_at0;  // theta0(0), theta2(0), theta3(0)
  std::array<Complex, 3> even_dd0;  // theta0''(0), theta2''(0), theta3''(0)
  int terms_used = 0;
};

// Position of theta_k (k in {0,2,3}) inside the even-theta arrays.
constexpr int even_index(int k) { return k == 0 ? 0 : (k == 2 ? 1 : 2); }

// theta_k(v | tau), k in {0,1,2,3}. Throws PrecisionLossError when
// Im(tau) < kMinImTau or the series does not converge within kMaxTerms.
Complex theta(int k, Complex v, Complex tau);

ThetaConstants theta_constants(Complex tau);

}  // namespace torusgreen
