#include "torusgreen/ninth.hpp"

#include <cmath>
#include <stdexcept>

#include "torusgreen/defs.hpp"
#include "torusgreen/errors.hpp"

namespace torusgreen {

namespace {
constexpr double kSeriesTol = 1e-18;
constexpr int kSeriesCap = 512;
}  // namespace

double series_S(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::invalid_argument("series_S requires 0 <= x < 1");
  }
  // (-x)^{k(k+1)/2}: exponents grow by k+1 per step.
  double sum = 0.0;
  double pw = 1.0;
  double inc = 1.0;  // (-x)^{k} after k steps
  const double mx = -x;
  for (int k = 0; k < kSeriesCap; ++k) {
    const double f = 2.0 * k + 1.0;
    const double term = f * f * pw;
    sum += term;
    if (std::abs(term) < kSeriesTol && k > 0) break;
    inc *= mx;
    pw *= inc;
  }
  return sum;
}

double series_S_prime(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::invalid_argument("series_S_prime requires 0 < x < 1");
  }
  // d/dx (-x)^{T} = T * (-x)^{T} / x for x > 0, T = k(k+1)/2
  double sum = 0.0;
  double pw = 1.0;
  double inc = 1.0;
  const double mx = -x;
  for (int k = 0; k < kSeriesCap; ++k) {
    const double f = 2.0 * k + 1.0;
    const double tk = 0.5 * k * (k + 1.0);
    if (k >= 1) {
      const double term = f * f * tk * pw / x;
      sum += term;
      if (std::abs(term) < kSeriesTol) break;
    }
    inc *= mx;
    pw *= inc;
  }
  return sum;
}

NinthReport solve_lambda() {
  if (!(series_S(0.0) > 0.0) || !(series_S(0.2) < 0.0)) {
    throw RootNotBracketedError("S does not change sign on (0, 0.2)");
  }
  double lo = 0.0, hi = 0.2;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    (series_S(mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 40; ++it) {
    const double f = series_S(x);
    const double fp = series_S_prime(x);
    const double step = f / fp;
    x -= step;
    if (!(x > 0.0 && x < 0.5)) {
      throw RootNotBracketedError("Newton left the bracketing interval");
    }
    if (std::abs(step) < 1e-15) break;
  }
  NinthReport rep;
  rep.lambda = x;
  rep.b0 = -std::log(x) / (2.0 * kPi);
  rep.b1 = 1.0 / (4.0 * rep.b0);
  rep.residual = std::abs(series_S(x));
  return rep;
}

}  // namespace torusgreen
