#include "thermoptics/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "thermoptics/duality.hpp"
#include "thermoptics/observables.hpp"
#include "thermoptics/optics.hpp"
#include "thermoptics/oracle.hpp"

namespace thermoptics {

namespace {

struct Reporter {
    std::ostream& os;
    bool all_ok = true;

    // worst is the largest residual seen by the group; tol its bound.
    void group(const char* name, double worst, double tol) {
        const bool ok = worst <= tol;
        all_ok = all_ok && ok;
        os << (ok ? "[PASS] " : "[FAIL] ") << name << "  worst=" << worst
           << "  tol=" << tol << "\n";
    }
};

double check_hyperbolic_identities() {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -50.0 + 0.1 * i;
        const auto [t, s2] = tanh_sech2(x);
        worst = std::max(worst, std::abs(t * t + s2 - 1.0));
        worst = std::max(worst, std::abs(log_cosh(x) - log_cosh(-x)));
        if (log_cosh(x) < 0.0) worst = std::max(worst, -log_cosh(x));
    }
    return worst;
}

double check_quadrature() {
    QuadratureSpec q;
    double worst = std::abs(integrate_unit_pi([](double) { return 1.0; }, q) - 1.0);
    worst = std::max(
        worst, std::abs(integrate_unit_pi([](double w) { return std::cos(w); }, q)));
    // (1/pi) int cos^2 = 1/2
    worst = std::max(worst, std::abs(integrate_unit_pi(
                                [](double w) { return std::cos(w) * std::cos(w); }, q) -
                            0.5));
    return worst;
}

double check_derivatives() {
    DiffSpec d;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        worst = std::max(worst, std::abs(central_difference(
                                    [](double v) { return std::sin(v); }, x, d) -
                                std::cos(x)));
    }
    return worst;
}

double check_model_symmetries(const QuadratureSpec& q, const DiffSpec& d) {
    double worst = 0.0;
    for (double K : {0.3, 1.0, 2.5}) {
        for (double C : {0.2, 0.7, 1.8}) {
            const auto xp = xy_observables({K, C, Convention::XY}, q);
            const auto xm = xy_observables({K, -C, Convention::XY}, q);
            worst = std::max(worst, std::abs(xp.m + xm.m));
            worst = std::max(worst, std::abs(xp.s - xm.s));
            const auto tp = ti_observables({K, C, Convention::TI}, q, d);
            const auto tm = ti_observables({K, -C, Convention::TI}, q, d);
            worst = std::max(worst, std::abs(tp.m + tm.m));
            worst = std::max(worst, std::abs(tp.s - tm.s));
        }
    }
    return worst;
}

double check_complementarity(const QuadratureSpec& q, const DiffSpec& d) {
    double worst = -1.0;
    for (double K : {0.0, 0.5, 1.0, 2.0}) {
        for (double C : {0.0, 0.5, 1.5, 3.0}) {
            worst = std::max(worst,
                             complementarity_sum(xy_observables(
                                 {K, C, Convention::XY}, q)) - 1.0);
            if (K != 0.0 || C != 0.0)
                worst = std::max(worst,
                                 complementarity_sum(ti_observables(
                                     {K, C, Convention::TI}, q, d)) - 1.0);
        }
    }
    for (double x : {-5.0, -1.0, 0.0, 0.5, 2.0, 10.0})
        worst = std::max(
            worst, std::abs(complementarity_sum(free_spin_observables(x)) - 1.0));
    return worst;
}

double check_saturation(const QuadratureSpec& q, const DiffSpec& d) {
    double worst = 0.0;
    for (double K : {0.5, 1.0, 2.0}) {
        const auto xy = xy_observables({K, 50.0, Convention::XY}, q);
        worst = std::max(worst, std::abs(xy.m - 1.0));
        worst = std::max(worst, xy.s);
        const auto ti = ti_observables({K, 50.0, Convention::TI}, q, d);
        worst = std::max(worst, std::abs(ti.m - 1.0));
        worst = std::max(worst, ti.s);
    }
    return worst;
}

double check_ti_derivative_consistency(const QuadratureSpec& q, const DiffSpec& d) {
    QuadratureSpec tight = q;
    tight.abs_tol = 1e-13;
    double worst = 0.0;
    for (double K : {0.4, 1.0, 2.2}) {
        for (double C : {0.3, 0.9, 1.7}) {
            if (std::abs(K - C) < 0.2) continue;
            const auto obs = ti_observables({K, C, Convention::TI}, tight, d);
            const double m_fd = central_difference(
                [&](double c) {
                    return ti_observables({K, c, Convention::TI}, tight, d).f_density;
                },
                C, d);
            worst = std::max(worst, std::abs(obs.m - m_fd) / std::abs(obs.m));
        }
    }
    return worst;
}

double check_transfer_identity() {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dk(-1.5, 1.5), dc(-1.5, 1.5);
    double worst = 0.0;
    for (int n = 3; n <= 12; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            ReducedCouplings rc{dk(rng), dc(rng), Convention::Ising};
            const auto tm = ising_transfer(rc);
            const double z_tm = std::pow(tm.lambda_plus, n) +
                                std::pow(tm.lambda_minus, n);
            const double z = enumerate_classical_Z(n, rc);
            worst = std::max(worst, std::abs(z - z_tm) / z);
        }
    }
    return worst;
}

double check_ti_gap_grid() {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        for (int j = 0; j < 100; ++j) {
            const double K = -2.0 + 0.04 * i;
            const double C = -2.0 + 0.04 * j;
            const double g = ti_gap({K, C, Convention::TI});
            const bool closed = std::abs(std::abs(K) - std::abs(C)) <= 1e-12;
            if (closed != (g <= 1e-12)) worst = std::max(worst, 1.0);
        }
    }
    return worst;
}

double check_interference_monotone() {
    ReducedCouplings rc{1.0, 0.0, Convention::Ising};
    double prev = 2.0;
    double worst = 0.0;
    for (long n : {1L, 2L, 5L, 10L, 50L, 100L, 500L}) {
        const double r = ising_interference_ratio(rc, n).ratio;
        if (r >= prev) worst = 1.0;
        prev = r;
    }
    return worst;
}

double check_optics(const QuadratureSpec& q) {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dy(-5.0, 5.0), dd(0.2, 3.0),
        ds(0.3, 2.0), dp(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double y = dy(rng), d = dd(rng), sg = ds(rng), kappa = dp(rng);
        const auto g = make_slit_geometry(d, sg, kappa);
        const auto vp = visibility_predictability(y, g);
        worst = std::max(worst, std::abs(vp.V * vp.V + vp.P * vp.P - 1.0));
        worst = std::max(worst, std::abs(vp.probs.p1 + vp.probs.p2 - 1.0));
        worst = std::max(worst,
                         std::abs(std::abs(vp.probs.p1 - vp.probs.p2) - vp.P));
        // amplitude form vs cosh-factored form
        const double s2 = sg * sg;
        const double a1 = std::exp(-(y - d / 2) * (y - d / 2) / (2 * s2));
        const double a2 = std::exp(-(y + d / 2) * (y + d / 2) / (2 * s2));
        const double phi = kappa * y;
        const double amp2 = a1 * a1 + a2 * a2 + 2 * a1 * a2 * std::cos(phi);
        worst = std::max(worst, std::abs(double_slit_intensity(y, g) - amp2));
    }
    for (double K : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double s_xy = xy_observables({K, 0.0, Convention::XY}, q).s;
        worst = std::max(worst,
                         std::abs(slit_array_analog(K, q).s_analog - s_xy));
    }
    return worst;
}

double check_duality(const DiffSpec& d) {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> da(0.1, 10.0), db(0.1, 4.0),
        dc(-2.0, 2.0), dx(-5.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        LawParams p{da(rng), db(rng), dc(rng)};
        const auto f = tanh_solution(p);
        for (int j = 0; j < 50; ++j)
            worst = std::max(worst, std::abs(law_residual(f, p, dx(rng), d)));
    }
    return worst;
}

double check_ed(VerifyLevel level, const DiffSpec& diff) {
    QuadratureSpec q;
    double worst = 0.0;
    const int n_max = level == VerifyLevel::Full ? 10 : 6;

    // Hermiticity and spectrum symmetry at small N.
    for (ChainModel model : {ChainModel::Free, ChainModel::XY, ChainModel::TI}) {
        ChainSpec spec{model, 4, 1.0, 0.5, Boundary::Periodic};
        const auto H = build_hamiltonian(spec);
        worst = std::max(worst, (H - H.transpose()).cwiseAbs().maxCoeff());
    }

    const double f_ti_inf =
        ti_observables({1.0, 0.5, Convention::TI}, q, diff).f_density;
    const double f_xy_inf =
        xy_observables({0.5, 0.3, Convention::XY}, q).f_density;
    double prev_err = 1e30;
    for (int n = 4; n <= n_max; n += 2) {
        const auto ti = ed_observables({ChainModel::TI, n, 1.0, 0.5}, 1.0, diff);
        const double err = std::abs(ti.f_density - f_ti_inf);
        if (err >= prev_err) worst = std::max(worst, 1.0);
        prev_err = err;
        worst = std::max(worst, complementarity_sum({ti.f_density, ti.m, ti.s}) -
                                    1.0 - 1e-6);
        const auto xy = ed_observables({ChainModel::XY, n, 1.0, 0.3}, 1.0, diff);
        worst = std::max(worst, std::abs(xy.f_density - f_xy_inf) /
                                    std::abs(f_xy_inf) - 0.25);
    }
    if (n_max >= 10) worst = std::max(worst, prev_err / std::abs(f_ti_inf) - 0.05);
    return worst;
}

double check_critical_scan(VerifyLevel level, const QuadratureSpec& q,
                           const DiffSpec& d) {
    const double step = level == VerifyLevel::Full ? 0.01 : 0.05;
    const auto res = detect_critical_field(3.0, 0.05, 0.0, 6.0, step, q, d);
    double worst = std::abs(res.b_star - 3.0) - 0.05;
    if (!res.sharp) worst = std::max(worst, 1.0);
    return worst;
}

}  // namespace

bool run_verification(VerifyLevel level, std::ostream& os) {
    Reporter r{os};
    QuadratureSpec q;
    DiffSpec d;

    r.group("numerics/hyperbolic-identities", check_hyperbolic_identities(), 1e-12);
    r.group("numerics/quadrature-polynomials", check_quadrature(), 1e-12);
    r.group("numerics/richardson-vs-analytic", check_derivatives(), 1e-9);
    r.group("models/field-parity", check_model_symmetries(q, d), 1e-9);
    r.group("models/complementarity-bound", check_complementarity(q, d), 1e-9);
    // TI saturates algebraically, m ~ 1 - K^2/(4 C^2) at C = 50
    r.group("models/saturation", check_saturation(q, d), 1e-3);
    r.group("models/ti-derivative-consistency",
            check_ti_derivative_consistency(q, d), 1e-6);
    r.group("models/transfer-vs-enumeration", check_transfer_identity(), 1e-12);
    r.group("observables/gap-closing-locus", check_ti_gap_grid(), 0.0);
    r.group("observables/ratio-monotone", check_interference_monotone(), 0.0);
    r.group("observables/critical-scan", check_critical_scan(level, q, d), 0.0);
    r.group("optics/complementarity-and-intensity", check_optics(q), 1e-10);
    r.group("duality/tanh-solution-residual", check_duality(d), 1e-9);
    r.group("oracle/ed-cross-checks", check_ed(level, d), 0.0);

    os << (r.all_ok ? "verification: all groups passed\n"
                    : "verification: FAILURES present\n");
    return r.all_ok;
}

}  // namespace thermoptics
