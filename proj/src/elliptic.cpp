#include "torusgreen/elliptic.hpp"

#include <cmath>

namespace torusgreen {

namespace {

// Series table (-1)^n q^{(n+1/2)^2} for theta1 and its first two derivatives
// at reduced arguments (|Im v| <= Im(tau)/2). The truncation envelope bounds
// |sin((2n+1) pi v)| by exp((2n+1) pi Im(tau)/2) and includes the (2n+1)^2
// derivative factor.
std::vector<Complex> build_theta1_table(Complex tau) {
  const Complex q4 = std::exp(Complex{0.0, kPi / 4.0} * tau);
  const Complex q2 = std::pow(q4, 8);
  const double decay = -kPi * tau.imag();  // log|q|
  std::vector<Complex> coeff;
  Complex p = q4;
  Complex r = q2;
  double sign = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    coeff.push_back(sign * p);
    const double f = 2.0 * n + 1.0;
    const double envelope =
        std::exp(((n + 0.5) * (n + 0.5) - 0.5 * f) * decay) * f * f * kPi * kPi;
    if (n >= 2 && envelope < 1e-18) return coeff;
    sign = -sign;
    p *= r;
    r *= q2;
  }
  throw PrecisionLossError("theta1 series table did not converge");
}

}  // namespace

EllipticContext build_context(const Lattice& lat) {
  EllipticContext ctx;
  ctx.lattice = lat;
  ctx.constants = theta_constants(lat.tau);

  const Complex w1 = lat.omega1;
  const Complex eta1_w1 = -ctx.constants.th1ppp0 / (3.0 * ctx.constants.th1p0);
  ctx.eta1 = eta1_w1 / w1;
  ctx.eta2 = (ctx.eta1 * lat.omega2 - Complex{0.0, 2.0 * kPi}) / w1;

  // e_j*omega1^2 + eta1*omega1 = -theta_k''(0)/theta_k(0),
  // pairing e1 <-> theta2, e2 <-> theta3, e3 <-> theta0.
  const int pairing[3] = {2, 3, 0};
  for (int j = 0; j < 3; ++j) {
    const int idx = even_index(pairing[j]);
    const Complex w = -ctx.constants.even_dd0[idx] / ctx.constants.even_at0[idx];
    ctx.e[j] = (w - eta1_w1) / (w1 * w1);
  }

  ctx.th1_coeff = build_theta1_table(lat.tau);
  return ctx;
}

Theta1Block theta1_block(Complex v, const EllipticContext& ctx) {
  // sin/cos(pi v) by hand from real libm calls; the arguments stay bounded
  // because callers reduce to the cell first.
  const double x = kPi * v.real();
  const double y = kPi * v.imag();
  const double sx = std::sin(x), cx = std::cos(x);
  const double e = std::exp(y), einv = 1.0 / e;
  const double ch = 0.5 * (e + einv), sh = 0.5 * (e - einv);
  Complex sn{sx * ch, cx * sh};
  Complex cn{cx * ch, -sx * sh};
  const Complex s2 = 2.0 * sn * cn;
  const Complex c2 = cn * cn - sn * sn;
  Complex t = 0.0, d1 = 0.0, d2 = 0.0;
  for (std::size_t n = 0; n < ctx.th1_coeff.size(); ++n) {
    const Complex c = ctx.th1_coeff[n];
    const double f = 2.0 * static_cast<double>(n) + 1.0;
    t += c * sn;
    d1 += (c * f) * cn;
    d2 += (c * (f * f)) * sn;
    const Complex ns = sn * c2 + cn * s2;
    cn = cn * c2 - sn * s2;
    sn = ns;
  }
  return Theta1Block{2.0 * t, 2.0 * kPi * d1, -2.0 * kPi * kPi * d2};
}

namespace {

Complex reduce_for_eval(Complex z, const EllipticContext& ctx, long* m, long* n) {
  const Complex z0 = reduce_centered(z, ctx.lattice, m, n);
  if (std::abs(z0) < kPoleGuard * std::abs(ctx.lattice.omega1)) {
    throw PoleInputError("evaluation point too close to a lattice point");
  }
  return z0;
}

}  // namespace

Complex zeta(Complex z, const EllipticContext& ctx) {
  long m = 0, n = 0;
  const Complex z0 = reduce_for_eval(z, ctx, &m, &n);
  const Complex w1 = ctx.lattice.omega1;
  const Theta1Block b = theta1_block(z0 / w1, ctx);
  return (ctx.eta1 / w1) * z0 + b.d1 / b.t / w1 +
         static_cast<double>(m) * ctx.eta1 + static_cast<double>(n) * ctx.eta2;
}

Complex wp(Complex z, const EllipticContext& ctx) {
  const Complex z0 = reduce_for_eval(z, ctx, nullptr, nullptr);
  const Complex w1 = ctx.lattice.omega1;
  const Theta1Block b = theta1_block(z0 / w1, ctx);
  return -ctx.eta1 / w1 - (b.d2 * b.t - b.d1 * b.d1) / (b.t * b.t) / (w1 * w1);
}

}  // namespace torusgreen
