#pragma once

#include "torusgreen/defs.hpp"
#include "torusgreen/errors.hpp"

namespace torusgreen {

// Lattice {m*omega1 + n*omega2 : m,n integer} with tau = omega2/omega1 in the
// upper half-plane. Values are immutable after construction.
struct Lattice {
  Complex omega1;
  Complex omega2;
  Complex tau;
};

// Coordinates of z in the generator basis: z = s*omega1 + t*omega2, s,t real.
struct CellCoords {
  double s;
  double t;
};

// Tolerance for point identity modulo the lattice, measured in (s,t) space.
inline constexpr double kPointTol = 1e-8;

// Throws DegenerateLatticeError unless omega1 != 0 and Im(omega2/omega1) > 0.
Lattice make_lattice(Complex omega1, Complex omega2);

CellCoords cell_coords(Complex z, const Lattice& lat);
Complex from_cell_coords(CellCoords c, const Lattice& lat);

// Representative of z in the half-open cell {s*omega1 + t*omega2 : s,t in [0,1)}.
Complex reduce_mod_lattice(Complex z, const Lattice& lat);

// Representative with s,t in [-1/2,1/2); optionally reports the integer
// multiples removed, z = result + m*omega1 + n*omega2.
Complex reduce_centered(Complex z, const Lattice& lat, long* m = nullptr,
                        long* n = nullptr);

// Shortest representative of z1 - z2 modulo the lattice.
Complex diff_mod_lattice(Complex z1, Complex z2, const Lattice& lat);

// Distance from z to the nearest lattice point (exact for cells that are not
// strongly sheared, which covers every lattice this library builds contexts for).
double dist_to_lattice(Complex z, const Lattice& lat);

bool equal_mod_lattice(Complex z1, Complex z2, const Lattice& lat,
                       double tol = kPointTol);

// The three transformations used by the invariance tests:
// T: tau + 1,  S: -1/tau,  T2: (tau-1)/(2*tau-1).
enum class ModularMap { T, S, T2 };

Complex modular_apply(ModularMap map, Complex tau);

}  // namespace torusgreen
