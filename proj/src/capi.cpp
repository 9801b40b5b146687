#include "thermoptics.h"

#include <cmath>
#include <iostream>
#include <limits>
#include <memory>
#include <new>
#include <vector>

#include "thermoptics/duality.hpp"
#include "thermoptics/observables.hpp"
#include "thermoptics/optics.hpp"
#include "thermoptics/oracle.hpp"
#include "thermoptics/verify.hpp"

using namespace thermoptics;

struct tp_context {
    QuadratureSpec quad;
    DiffSpec diff;
    int threads = 0;
};

struct tp_spectrum {
    SpectrumResult result;
    int n_sites;
};

namespace {

const tp_context kDefaultContext{};

const tp_context& ctx_or_default(const tp_context* ctx) {
    return ctx ? *ctx : kDefaultContext;
}

template <class Fn>
int guarded(Fn fn) {
    try {
        fn();
        return TP_OK;
    } catch (const NonConvergent&) {
        return TP_ERR_NONCONVERGENT;
    } catch (const NonFinite&) {
        return TP_ERR_NONFINITE;
    } catch (const Overflow&) {
        return TP_ERR_OVERFLOW;
    } catch (const CapExceeded&) {
        return TP_ERR_CAP;
    } catch (const DegenerateScan&) {
        return TP_ERR_DEGENERATE;
    } catch (const InvalidMap&) {
        return TP_ERR_INVALID_MAP;
    } catch (const Error&) {
        return TP_ERR_ARG;
    } catch (const std::bad_alloc&) {
        return TP_ERR_INTERNAL;
    } catch (...) {
        return TP_ERR_INTERNAL;
    }
}

tp_observables to_c(const ObservableTriple& t) {
    return {t.f_density, t.m, t.s};
}

}  // namespace

extern "C" {

const char* tp_status_string(int status) {
    switch (status) {
        case TP_OK: return "ok";
        case TP_ERR_ARG: return "invalid argument";
        case TP_ERR_NONCONVERGENT: return "quadrature not convergent";
        case TP_ERR_NONFINITE: return "non-finite evaluation";
        case TP_ERR_OVERFLOW: return "overflow";
        case TP_ERR_CAP: return "size cap exceeded";
        case TP_ERR_DEGENERATE: return "degenerate scan";
        case TP_ERR_INVALID_MAP: return "map undefined for coupled models";
        default: return "internal error";
    }
}

tp_context* tp_context_new(void) {
    return new (std::nothrow) tp_context{};
}

void tp_context_free(tp_context* ctx) {
    delete ctx;
}

int tp_context_set_quadrature(tp_context* ctx, double abs_tol, int max_panels,
                              int endpoint_refinement) {
    if (!ctx || !(abs_tol > 0.0) || max_panels < 1) return TP_ERR_ARG;
    ctx->quad = {abs_tol, max_panels, endpoint_refinement != 0};
    return TP_OK;
}

int tp_context_set_diff(tp_context* ctx, double step, int richardson) {
    if (!ctx || step < 0.0) return TP_ERR_ARG;
    ctx->diff = {step, richardson ? DiffScheme::Richardson : DiffScheme::Central2};
    return TP_OK;
}

int tp_context_set_threads(tp_context* ctx, int threads) {
    if (!ctx || threads < 0) return TP_ERR_ARG;
    ctx->threads = threads;
    return TP_OK;
}

int tp_free_spin(double x, tp_observables* out) {
    if (!out || !std::isfinite(x)) return TP_ERR_ARG;
    return guarded([&] { *out = to_c(free_spin_observables(x)); });
}

int tp_xy(const tp_context* ctx, double K, double C, tp_observables* out) {
    if (!out) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] {
        *out = to_c(xy_observables({K, C, Convention::XY}, c.quad));
    });
}

int tp_ti(const tp_context* ctx, double K, double C, tp_observables* out,
          int* gap_flag) {
    if (!out) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] {
        bool flag = false;
        *out = to_c(ti_observables({K, C, Convention::TI}, c.quad, c.diff, &flag));
        if (gap_flag) *gap_flag = flag ? 1 : 0;
    });
}

int tp_ising_transfer(double K, double C, double* lambda_plus,
                      double* lambda_minus, double* f_density) {
    if (!lambda_plus || !lambda_minus || !f_density) return TP_ERR_ARG;
    return guarded([&] {
        const auto tm = ising_transfer({K, C, Convention::Ising});
        *lambda_plus = tm.lambda_plus;
        *lambda_minus = tm.lambda_minus;
        *f_density = tm.f_density;
    });
}

int tp_ti_gap(double K, double C, double* gap) {
    if (!gap) return TP_ERR_ARG;
    return guarded([&] { *gap = ti_gap({K, C, Convention::TI}); });
}

int tp_ising_ratio(double K, double C, long n_sites, double threshold,
                   double* ratio, double* gap, int* double_slit) {
    if (!ratio) return TP_ERR_ARG;
    return guarded([&] {
        const auto diag =
            ising_interference_ratio({K, C, Convention::Ising}, n_sites, threshold);
        *ratio = diag.ratio;
        if (gap) *gap = diag.gap;
        if (double_slit) *double_slit = diag.regime == SlitRegime::DoubleSlit;
    });
}

int tp_detect_critical_field(const tp_context* ctx, double J, double kT,
                             double b_min, double b_max, double b_step,
                             double* b_star, double* chi_peak, int* sharp) {
    if (!b_star) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] {
        const auto res = detect_critical_field(J, kT, b_min, b_max, b_step, c.quad,
                                               c.diff, c.threads);
        *b_star = res.b_star;
        if (chi_peak) *chi_peak = res.chi_peak;
        if (sharp) *sharp = res.sharp ? 1 : 0;
    });
}

int tp_double_slit_intensity(double y, double d, double sigma, double phase,
                             double envelope_scale, double* out) {
    if (!out) return TP_ERR_ARG;
    return guarded([&] {
        SlitGeometry g{d, sigma, [phase](double) { return phase; }, envelope_scale};
        if (!(d > 0.0) || !(sigma > 0.0))
            throw Error("slit separation and width must be positive");
        *out = double_slit_intensity(y, g);
    });
}

int tp_visibility_predictability(double y, double d, double sigma, double* V,
                                 double* P, double* p1, double* p2) {
    if (!V || !P) return TP_ERR_ARG;
    return guarded([&] {
        const auto vp = visibility_predictability(y, make_slit_geometry(d, sigma));
        *V = vp.V;
        *P = vp.P;
        if (p1) *p1 = vp.probs.p1;
        if (p2) *p2 = vp.probs.p2;
    });
}

int tp_thermo_slit_map(double E, double kT, int variant, double* y, double* d,
                       double* sigma) {
    if (!y || !d || !sigma || (variant != 0 && variant != 1)) return TP_ERR_ARG;
    return guarded([&] {
        const auto res =
            thermo_slit_map(E, kT, variant == 0 ? MapVariant::A : MapVariant::B);
        *y = res.y;
        *d = res.geometry.d;
        *sigma = res.geometry.sigma;
    });
}

int tp_slit_array_analog(const tp_context* ctx, double K, double* s_analog) {
    if (!s_analog) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] { *s_analog = slit_array_analog(K, c.quad).s_analog; });
}

int tp_slit_array_visibility(double K, double omega, double* out) {
    if (!out) return TP_ERR_ARG;
    return guarded([&] {
        *out = std::sqrt(tanh_sech2(2.0 * K * std::cos(omega)).sech2_x);
    });
}

int tp_tanh_solution(double alpha, double beta, double c, double x, double* out) {
    if (!out) return TP_ERR_ARG;
    return guarded([&] { *out = tanh_solution({alpha, beta, c})(x); });
}

int tp_law_residual(const tp_context* ctx, tp_real_fn f, void* user,
                    double alpha, double beta, double x, double* out) {
    if (!f || !out) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] {
        *out = law_residual([f, user](double u) { return f(u, user); },
                            {alpha, beta, 0.0}, x, c.diff);
    });
}

int tp_law_inequality_check(const tp_context* ctx, tp_real_fn f, void* user,
                            double alpha, const double* xs, long n, int* pass,
                            double* worst, double* worst_x) {
    if (!f || !xs || n < 1 || !pass) return TP_ERR_ARG;
    const auto& c = ctx_or_default(ctx);
    return guarded([&] {
        const std::vector<double> grid(xs, xs + n);
        const auto res = law_inequality_check(
            [f, user](double u) { return f(u, user); }, alpha, grid, c.diff);
        *pass = res.pass ? 1 : 0;
        if (worst) *worst = res.worst_violation;
        if (worst_x) *worst_x = res.worst_x;
    });
}

int tp_ed_run(int model, int n_sites, double J, double mu_B, double kT,
              int periodic, tp_spectrum** out) {
    if (!out || model < TP_CHAIN_FREE || model > TP_CHAIN_TI) return TP_ERR_ARG;
    return guarded([&] {
        ChainSpec spec;
        spec.model = static_cast<ChainModel>(model);
        spec.n_sites = n_sites;
        spec.J = J;
        spec.mu_B = mu_B;
        spec.boundary = periodic ? Boundary::Periodic : Boundary::Open;
        auto sp = std::make_unique<tp_spectrum>();
        sp->result = ed_observables(spec, kT, DiffSpec{});
        sp->n_sites = n_sites;
        *out = sp.release();
    });
}

long tp_spectrum_size(const tp_spectrum* sp) {
    return sp ? static_cast<long>(sp->result.eigenvalues.size()) : 0;
}

double tp_spectrum_eigenvalue(const tp_spectrum* sp, long i) {
    if (!sp || i < 0 || i >= tp_spectrum_size(sp))
        return std::numeric_limits<double>::quiet_NaN();
    return sp->result.eigenvalues[static_cast<size_t>(i)];
}

int tp_spectrum_observables(const tp_spectrum* sp, tp_observables* out,
                            double* Z) {
    if (!sp || !out) return TP_ERR_ARG;
    *out = {sp->result.f_density, sp->result.m, sp->result.s};
    if (Z) *Z = sp->result.Z;
    return TP_OK;
}

void tp_spectrum_free(tp_spectrum* sp) {
    delete sp;
}

int tp_enumerate_classical_z(int n_sites, double K, double C, double* Z) {
    if (!Z) return TP_ERR_ARG;
    return guarded([&] {
        *Z = enumerate_classical_Z(n_sites, {K, C, Convention::Ising});
    });
}

int tp_verify(int full) {
    const bool ok = run_verification(full ? VerifyLevel::Full : VerifyLevel::Fast,
                                     std::cout);
    return ok ? 0 : 1;
}

}  // extern "C"
