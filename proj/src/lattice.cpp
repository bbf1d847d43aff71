#include "torusgreen/lattice.hpp"

#include <cmath>

namespace torusgreen {

Lattice make_lattice(Complex omega1, Complex omega2) {
  if (omega1 == Complex{0.0, 0.0}) {
    throw DegenerateLatticeError("lattice generator omega1 is zero");
  }
  const Complex tau = omega2 / omega1;
  if (!(tau.imag() > 0.0)) {
    throw DegenerateLatticeError("Im(omega2/omega1) must be positive");
  }
  return Lattice{omega1, omega2, tau};
}

CellCoords cell_coords(Complex z, const Lattice& lat) {
  // Solve z = s*omega1 + t*omega2 for real s, t: with v = z/omega1 we have
  // v = s + t*tau, so t = Im(v)/Im(tau).
  const Complex v = z / lat.omega1;
  const double t = v.imag() / lat.tau.imag();
  const double s = v.real() - t * lat.tau.real();
  return CellCoords{s, t};
}

Complex from_cell_coords(CellCoords c, const Lattice& lat) {
  return c.s * lat.omega1 + c.t * lat.omega2;
}

Complex reduce_mod_lattice(Complex z, const Lattice& lat) {
  CellCoords c = cell_coords(z, lat);
  c.s -= std::floor(c.s);
  c.t -= std::floor(c.t);
  // floor can leave exactly 1.0 for inputs just below an integer
  if (c.s >= 1.0) c.s -= 1.0;
  if (c.t >= 1.0) c.t -= 1.0;
  return from_cell_coords(c, lat);
}

Complex reduce_centered(Complex z, const Lattice& lat, long* m, long* n) {
  const CellCoords c = cell_coords(z, lat);
  const double ms = std::floor(c.s + 0.5);
  const double nt = std::floor(c.t + 0.5);
  if (m) *m = static_cast<long>(ms);
  if (n) *n = static_cast<long>(nt);
  return from_cell_coords(CellCoords{c.s - ms, c.t - nt}, lat);
}

Complex diff_mod_lattice(Complex z1, Complex z2, const Lattice& lat) {
  return reduce_centered(z1 - z2, lat);
}

double dist_to_lattice(Complex z, const Lattice& lat) {
  return std::abs(reduce_centered(z, lat));
}

bool equal_mod_lattice(Complex z1, Complex z2, const Lattice& lat, double tol) {
  CellCoords c = cell_coords(z1 - z2, lat);
  c.s -= std::floor(c.s + 0.5);
  c.t -= std::floor(c.t + 0.5);
  return std::hypot(c.s, c.t) < tol;
}

Complex modular_apply(ModularMap map, Complex tau) {
  switch (map) {
    case ModularMap::T:
      return tau + 1.0;
    case ModularMap::S:
      return -1.0 / tau;
    case ModularMap::T2:
      return (tau - 1.0) / (2.0 * tau - 1.0);
  }
  return tau;  // unreachable
}

}  // namespace torusgreen
