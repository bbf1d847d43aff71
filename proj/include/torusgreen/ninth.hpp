#pragma once

namespace torusgreen {

// lambda is the smallest positive root of
//   S(x) = sum_{k>=0} (2k+1)^2 (-x)^{k(k+1)/2},
// the "one-ninth" constant of approximation theory. The interval endpoints
// for the tau = 1/2 + i b half-line follow as b0 = -ln(lambda)/(2 pi) and
// b1 = 1/(4 b0).
struct NinthReport {
  double lambda;
  double b0;
  double b1;
  double residual;  // |S(lambda)|
};

// Partial sums of S until the term magnitude drops below 1e-18. Domain [0, 1).
double series_S(double x);

// Term-wise derivative of S, used by the Newton refinement.
double series_S_prime(double x);

// Bisection on (0, 0.2) to width 1e-4, then Newton. Verifies the bracketing
// signs S(0) > 0 > S(0.2) first and throws RootNotBracketedError otherwise.
NinthReport solve_lambda();

}  // namespace torusgreen
