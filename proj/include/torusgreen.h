/*
 * torusgreen C API.
 *
 * Critical points of the Green's function of a torus C/L, the three-vs-five
 * dichotomy criterion, the associated antiholomorphic fixed-point dynamics,
 * parameter-plane and Julia-set rasters, and the one-ninth constant.
 *
 * All functions return tg_status; TG_OK is 0. Handles are opaque and must be
 * released with the matching destroy function. The library is thread-safe:
 * handles are immutable after creation and may be shared across threads.
 */
#ifndef TORUSGREEN_H
#define TORUSGREEN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_DEGENERATE_LATTICE = 1,
  TG_ERR_PRECISION_LOSS = 2,
  TG_ERR_POLE_INPUT = 3,
  TG_ERR_ROOT_NOT_BRACKETED = 4,
  TG_ERR_ORACLE_INCONCLUSIVE = 5,
  TG_ERR_IO = 6,
  TG_ERR_INVALID_ARGUMENT = 7,
  TG_ERR_BUFFER_TOO_SMALL = 8,
  TG_ERR_INTERNAL = 9
} tg_status;

/* Static description of a status code. */
const char* tg_status_message(tg_status status);

typedef struct tg_complex {
  double re;
  double im;
} tg_complex;

/* ------------------------------------------------------------------ */
/* Torus handle: one lattice plus everything derived from it.          */

typedef struct tg_torus tg_torus;

/* Lattice from generators; requires omega1 != 0, Im(omega2/omega1) > 0
 * and Im(tau) >= 0.05. */
tg_status tg_torus_create(tg_complex omega1, tg_complex omega2, tg_torus** out);

/* Convenience for the normalized lattice (1, tau). */
tg_status tg_torus_create_tau(tg_complex tau, tg_torus** out);

void tg_torus_destroy(tg_torus* torus);

tg_complex tg_torus_tau(const tg_torus* torus);
tg_complex tg_torus_eta1(const tg_torus* torus);
tg_complex tg_torus_eta2(const tg_torus* torus);
/* j in {1,2,3}: values of wp at the half-periods. */
tg_complex tg_torus_e(const tg_torus* torus, int j);
/* Coefficients of the periodic field F(z) = zeta(z) + a z + b conj(z). */
tg_complex tg_torus_a(const tg_torus* torus);
tg_complex tg_torus_b(const tg_torus* torus);

/* ------------------------------------------------------------------ */
/* Function evaluation.                                                */

tg_status tg_zeta(const tg_torus* torus, tg_complex z, tg_complex* out);
tg_status tg_wp(const tg_torus* torus, tg_complex z, tg_complex* out);
tg_status tg_field(const tg_torus* torus, tg_complex z, tg_complex* out);
tg_status tg_g_map(const tg_torus* torus, tg_complex z, tg_complex* out);
tg_status tg_multiplier_modulus(const tg_torus* torus, tg_complex z, double* out);

/* Green's function value for the normalized lattice (1, tau); when normalize
 * is nonzero an additive constant makes the cell mean vanish. */
tg_status tg_green_value(tg_complex tau, tg_complex z, int normalize, double* out);

/* G on a px_w x px_h midpoint grid over the cell, row-major, row 0 at t near
 * 0. values must hold px_w*px_h doubles. */
tg_status tg_green_render(tg_complex tau, int px_w, int px_h, int normalize,
                          double* values);

/* ------------------------------------------------------------------ */
/* Critical points and the dichotomy criterion.                        */

typedef struct tg_criterion_report {
  double m[3];         /* |(e_j + eta1) Im(tau)/pi - 1| for omega1 = 1 */
  int predicted_count; /* 3 or 5 */
  int on_boundary;
} tg_criterion_report;

tg_status tg_criterion(tg_complex tau, tg_criterion_report* out);

typedef enum tg_stability {
  TG_ATTRACTING = 0,
  TG_NEUTRAL = 1,
  TG_REPELLING = 2
} tg_stability;

typedef struct tg_critical_point {
  tg_complex z;              /* reduced to the fundamental cell */
  double residual;           /* |F(z)| */
  double multiplier_modulus; /* |wp(z) - a| / |b| */
  tg_stability stability;
  int is_half_period;
} tg_critical_point;

/* Fills up to capacity points, sets *count to the number found (3 or 5).
 * boundary_warning (optional) is set when a point is neutral. Returns
 * TG_ERR_BUFFER_TOO_SMALL when capacity < count; 8 is always enough. */
tg_status tg_find_critical_points(const tg_torus* torus, tg_critical_point* points,
                                  int capacity, int* count, int* boundary_warning);

/* Independent count from a grid_n x grid_n scan of |F| (grid_n >= 64). */
tg_status tg_count_oracle(const tg_torus* torus, int grid_n, int* count);

typedef struct tg_orbit_summary {
  tg_complex start;
  int converged;
  tg_complex limit;
  int iterations;
} tg_orbit_summary;

/* Orbits of g from the two solutions of wp(c) = a; out must hold 2 entries. */
tg_status tg_critical_orbits(const tg_torus* torus, int max_iter,
                             tg_orbit_summary out[2]);

/* ------------------------------------------------------------------ */
/* Rasters.                                                            */

typedef struct tg_image tg_image;

int tg_image_width(const tg_image* img);
int tg_image_height(const tg_image* img);
/* Row-major width*height class codes; owned by the image. */
const unsigned char* tg_image_codes(const tg_image* img);
void tg_image_destroy(tg_image* img);

/* format is "ppm" or "pgm". */
tg_status tg_image_write(const tg_image* img, const char* format, const char* path);

/* tau-plane scan; codes 1 = three critical points, 2 = five, 0 = boundary
 * band. Pass boundary_band <= 0 for the default 0.002. min_m, when non-null,
 * receives px_w*px_h values of min_j m_j. */
tg_status tg_render_region(double re_lo, double re_hi, double im_lo, double im_hi,
                           int px_w, int px_h, double boundary_band,
                           tg_image** out, double* min_m);

/* Basin classification over a cell-coordinate rectangle; code 0 = not
 * converged, code k >= 1 = basin of the k-th attracting/neutral fixed point. */
tg_status tg_render_julia(const tg_torus* torus, double s_lo, double s_hi,
                          double t_lo, double t_hi, int px_w, int px_h,
                          int max_iter, tg_image** out);

/* ------------------------------------------------------------------ */
/* One-ninth constant and the half-line boundary scan.                 */

typedef struct tg_ninth_report {
  double lambda;
  double b0;
  double b1;
  double residual;
} tg_ninth_report;

tg_status tg_ninth(tg_ninth_report* out);

/* Bisection for the two dichotomy boundary crossings on tau = 1/2 + i b. */
tg_status tg_boundary_scan(double b_lo, double b_hi, double tol,
                           double* b0, double* b1);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TORUSGREEN_H */
