#include "torusgreen/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace torusgreen {

namespace {

void require_tau(Complex tau) {
  if (!(tau.imag() >= kMinImTau)) {
    throw PrecisionLossError("Im(tau) below the supported minimum 0.05; apply a modular transformation first");
  }
}

// Nome through the quarter power to keep the branch tied to tau itself:
// q = q4^4 with q4 = exp(i pi tau / 4).
Complex quarter_nome(Complex tau) { return std::exp(Complex{0.0, kPi / 4.0} * tau); }

bool small_term(Complex term, Complex sum) {
  return std::abs(term) <= kTermTol * (std::abs(sum) + 1.0);
}

// Series over odd multiples: sum of sign_n * q^{(n+1/2)^2} * trig((2n+1) pi v)
// where trig is sin for theta1 and cos for theta2.
Complex odd_series(Complex v, Complex q4, bool alternating, bool use_sin) {
  const Complex q2 = std::pow(q4, 8);  // q^2
  const Complex arg = kPi * v;
  Complex sn = std::sin(arg);
  Complex cn = std::cos(arg);
  const Complex s2 = 2.0 * sn * cn;       // sin(2 pi v)
  const Complex c2 = cn * cn - sn * sn;   // cos(2 pi v)
  Complex p = q4;                         // q^{(n+1/2)^2} at n = 0
  Complex r = q2;                         // ratio q^{2n+2}
  double sign = 1.0;
  Complex sum = 0.0;
  int quiet = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const Complex term = sign * p * (use_sin ? sn : cn);
    sum += term;
    quiet = small_term(term, sum) ? quiet + 1 : 0;
    if (quiet >= 2 && n >= 2) return 2.0 * sum;
    if (alternating) sign = -sign;
    p *= r;
    r *= q2;
    const Complex ns = sn * c2 + cn * s2;
    cn = cn * c2 - sn * s2;
    sn = ns;
  }
  throw PrecisionLossError("theta series did not converge within the term budget");
}

// Series over even multiples: 1 + 2 sum sign_n * q^{n^2} * cos(2 n pi v).
Complex even_series(Complex v, Complex q4, bool alternating) {
  const Complex q = std::pow(q4, 4);
  const Complex q2 = q * q;
  const Complex arg = 2.0 * kPi * v;
  const Complex s2 = std::sin(arg);
  const Complex c2 = std::cos(arg);
  Complex sn = s2;
  Complex cn = c2;
  Complex p = q;       // q^{n^2} at n = 1
  Complex r = q * q2;  // ratio q^{2n+1}
  double sign = alternating ? -1.0 : 1.0;
  Complex sum = 0.5;   // halved so the final doubling yields 1 + 2*...
  int quiet = 0;
  for (int n = 1; n < kMaxTerms; ++n) {
    const Complex term = sign * p * cn;
    sum += term;
    quiet = small_term(term, sum) ? quiet + 1 : 0;
    if (quiet >= 2 && n >= 3) return 2.0 * sum;
    if (alternating) sign = -sign;
    p *= r;
    r *= q2;
    const Complex ns = sn * c2 + cn * s2;
    cn = cn * c2 - sn * s2;
    sn = ns;
  }
  throw PrecisionLossError("theta series did not converge within the term budget");
}

}  // namespace

Complex theta(int k, Complex v, Complex tau) {
  require_tau(tau);
  const Complex q4 = quarter_nome(tau);
  switch (k) {
    case 1:
      return odd_series(v, q4, /*alternating=*/true, /*use_sin=*/true);
    case 2:
      return odd_series(v, q4, /*alternating=*/false, /*use_sin=*/false);
    case 3:
      return even_series(v, q4, /*alternating=*/false);
    case 0:
      return even_series(v, q4, /*alternating=*/true);
    default:
      throw std::invalid_argument("theta index must be 0, 1, 2 or 3");
  }
}

ThetaConstants theta_constants(Complex tau) {
  require_tau(tau);
  ThetaConstants out;
  out.tau = tau;
  const Complex q4 = quarter_nome(tau);
  const Complex q = std::pow(q4, 4);
  out.q = q;
  const Complex q2 = q * q;

  // Odd-index family at v = 0: coefficients q^{(n+1/2)^2}.
  Complex th1p = 0.0, th1ppp = 0.0, th2 = 0.0, th2pp = 0.0;
  {
    Complex p = q4;
    Complex r = q2;
    double sign = 1.0;
    int n = 0;
    for (; n < kMaxTerms; ++n) {
      const double f = 2.0 * n + 1.0;
      th1p += sign * f * p;
      th1ppp += sign * (f * f * f) * p;
      th2 += p;
      th2pp += (f * f) * p;
      if (n >= 2 && std::abs(p) * f * f * f <= kTermTol * (std::abs(th1p) + 1.0)) {
        ++n;
        break;
      }
      sign = -sign;
      p *= r;
      r *= q2;
    }
    if (n >= kMaxTerms) {
      throw PrecisionLossError("theta constant series did not converge");
    }
    out.terms_used = n;
  }
  // Even-index family at v = 0: coefficients q^{n^2}.
  Complex th3 = 1.0, th3pp = 0.0, th0 = 1.0, th0pp = 0.0;
  {
    Complex p = q;
    Complex r = q * q2;
    double sign = -1.0;
    int n = 1;
    for (; n < kMaxTerms; ++n) {
      const double nn = static_cast<double>(n) * n;
      th3 += 2.0 * p;
      th3pp += nn * p;
      th0 += 2.0 * sign * p;
      th0pp += sign * nn * p;
      if (n >= 3 && std::abs(p) * nn <= kTermTol * (std::abs(th3) + 1.0)) {
        ++n;
        break;
      }
      sign = -sign;
      p *= r;
      r *= q2;
    }
    if (n >= kMaxTerms) {
      throw PrecisionLossError("theta constant series did not converge");
    }
    if (n > out.terms_used) out.terms_used = n;
  }

  out.th1p0 = 2.0 * kPi * th1p;
  out.th1ppp0 = -2.0 * kPi * kPi * kPi * th1ppp;
  out.even_at0[even_index(0)] = th0;
  out.even_at0[even_index(2)] = 2.0 * th2;
  out.even_at0[even_index(3)] = th3;
  out.even_dd0[even_index(0)] = -8.0 * kPi * kPi * th0pp;
  out.even_dd0[even_index(2)] = -2.0 * kPi * kPi * th2pp;
  out.even_dd0[even_index(3)] = -8.0 * kPi * kPi * th3pp;
  return out;
}

}  // namespace torusgreen
