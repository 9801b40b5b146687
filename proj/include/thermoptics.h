/* C API for the thermoptics shared library.
 *
 * All entry points return a tp_status code (TP_OK on success) and write
 * results through out-pointers. Opaque handles own their resources and are
 * released with the matching *_free call. The library is thread-safe: a
 * tp_context is immutable once configured and may be shared across threads.
 */
#ifndef THERMOPTICS_H
#define THERMOPTICS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
    TP_OK = 0,
    TP_ERR_ARG = 1,           /* invalid argument / precondition violated */
    TP_ERR_NONCONVERGENT = 2, /* quadrature tolerance unmet at max_panels */
    TP_ERR_NONFINITE = 3,     /* a function evaluation was not finite */
    TP_ERR_OVERFLOW = 4,      /* result exceeds double range; rescale */
    TP_ERR_CAP = 5,           /* chain length above the hard cap */
    TP_ERR_DEGENERATE = 6,    /* scan shows no interior feature */
    TP_ERR_INVALID_MAP = 7,   /* slit map applied to a coupled model */
    TP_ERR_INTERNAL = 8
} tp_status;

const char* tp_status_string(int status);

/* ---- context: numerical tolerances shared by the integral-backed calls -- */

typedef struct tp_context tp_context;

tp_context* tp_context_new(void);
void tp_context_free(tp_context* ctx);
int tp_context_set_quadrature(tp_context* ctx, double abs_tol, int max_panels,
                              int endpoint_refinement);
int tp_context_set_diff(tp_context* ctx, double step, int richardson);
int tp_context_set_threads(tp_context* ctx, int threads);

/* ---- thermodynamic models ------------------------------------------------
 * Conventions: XY takes K = J/2kT, TI and ISING take K = J/kT; C = muB/kT.
 */

typedef struct tp_observables {
    double f_density; /* -F/NkT */
    double m;         /* normalized magnetization */
    double s;         /* normalized susceptibility */
} tp_observables;

int tp_free_spin(double x, tp_observables* out);
int tp_xy(const tp_context* ctx, double K, double C, tp_observables* out);
/* gap_flag (optional) is set when the dispersion minimum is below 1e-8. */
int tp_ti(const tp_context* ctx, double K, double C, tp_observables* out,
          int* gap_flag);
int tp_ising_transfer(double K, double C, double* lambda_plus,
                      double* lambda_minus, double* f_density);
int tp_ti_gap(double K, double C, double* gap);
int tp_ising_ratio(double K, double C, long n_sites, double threshold,
                   double* ratio, double* gap, int* double_slit);
int tp_detect_critical_field(const tp_context* ctx, double J, double kT,
                             double b_min, double b_max, double b_step,
                             double* b_star, double* chi_peak, int* sharp);

/* ---- optics -------------------------------------------------------------- */

/* phase is the value of phi at this y; envelope scale multiplies the result */
int tp_double_slit_intensity(double y, double d, double sigma, double phase,
                             double envelope_scale, double* out);
int tp_visibility_predictability(double y, double d, double sigma, double* V,
                                 double* P, double* p1, double* p2);
/* variant: 0 maps E to the detector position, 1 maps E/T. */
int tp_thermo_slit_map(double E, double kT, int variant, double* y, double* d,
                       double* sigma);
int tp_slit_array_analog(const tp_context* ctx, double K, double* s_analog);
int tp_slit_array_visibility(double K, double omega, double* out);

/* ---- duality law f^2(x/a) + a f'(x/a) = b -------------------------------- */

typedef double (*tp_real_fn)(double x, void* user);

int tp_tanh_solution(double alpha, double beta, double c, double x, double* out);
int tp_law_residual(const tp_context* ctx, tp_real_fn f, void* user,
                    double alpha, double beta, double x, double* out);
int tp_law_inequality_check(const tp_context* ctx, tp_real_fn f, void* user,
                            double alpha, const double* xs, long n, int* pass,
                            double* worst, double* worst_x);

/* ---- exact-diagonalization oracle --------------------------------------- */

typedef struct tp_spectrum tp_spectrum;

enum { TP_CHAIN_FREE = 0, TP_CHAIN_XY = 1, TP_CHAIN_TI = 2 };

int tp_ed_run(int model, int n_sites, double J, double mu_B, double kT,
              int periodic, tp_spectrum** out);
long tp_spectrum_size(const tp_spectrum* sp);
double tp_spectrum_eigenvalue(const tp_spectrum* sp, long i);
int tp_spectrum_observables(const tp_spectrum* sp, tp_observables* out,
                            double* Z);
void tp_spectrum_free(tp_spectrum* sp);

int tp_enumerate_classical_z(int n_sites, double K, double C, double* Z);

/* ---- verification -------------------------------------------------------- */

/* Prints one pass/fail line per invariant group to stdout.
 * Returns 0 if all pass, 1 otherwise. full != 0 adds ED runs up to N=10. */
int tp_verify(int full);

#ifdef __cplusplus
}
#endif

#endif /* THERMOPTICS_H */
