#include <doctest.h>

#include <cmath>
#include <string>

#include "thermoptics.h"

TEST_CASE("context lifecycle and validation") {
    tp_context* ctx = tp_context_new();
    REQUIRE(ctx != nullptr);
    CHECK(tp_context_set_quadrature(ctx, 1e-11, 2048, 0) == TP_OK);
    CHECK(tp_context_set_quadrature(ctx, -1.0, 2048, 0) == TP_ERR_ARG);
    CHECK(tp_context_set_diff(ctx, 0.0, 1) == TP_OK);
    CHECK(tp_context_set_threads(ctx, 2) == TP_OK);
    CHECK(tp_context_set_threads(ctx, -1) == TP_ERR_ARG);
    tp_context_free(ctx);
    tp_context_free(nullptr);  // must be a no-op
}

TEST_CASE("model calls through the C surface") {
    tp_observables obs{};
    REQUIRE(tp_free_spin(1.0, &obs) == TP_OK);
    CHECK(obs.m == doctest::Approx(std::tanh(1.0)).epsilon(1e-12));
    CHECK(obs.m * obs.m + obs.s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tp_free_spin(1.0, nullptr) == TP_ERR_ARG);

    // null context falls back to default tolerances
    REQUIRE(tp_xy(nullptr, 0.0, 0.7, &obs) == TP_OK);
    tp_observables fs{};
    tp_free_spin(0.7, &fs);
    CHECK(obs.m == doctest::Approx(fs.m).epsilon(1e-10));

    int flag = -1;
    REQUIRE(tp_ti(nullptr, 2.0, 2.0, &obs, &flag) == TP_OK);
    CHECK(flag == 1);

    double gap;
    REQUIRE(tp_ti_gap(2.0, 1.0, &gap) == TP_OK);
    CHECK(gap == doctest::Approx(1.0));

    double lp, lm, f;
    REQUIRE(tp_ising_transfer(1.0, 0.0, &lp, &lm, &f) == TP_OK);
    CHECK(lp == doctest::Approx(2.0 * std::cosh(1.0)));
    CHECK(tp_ising_transfer(500.0, 500.0, &lp, &lm, &f) == TP_ERR_OVERFLOW);

    double ratio, rgap;
    int dslit;
    REQUIRE(tp_ising_ratio(1.0, 0.0, 10, 0.01, &ratio, &rgap, &dslit) == TP_OK);
    CHECK(ratio == doctest::Approx(std::pow(std::tanh(1.0), 10)));
    CHECK(dslit == 1);
}

TEST_CASE("critical scan through the C surface") {
    double b_star, peak;
    int sharp;
    REQUIRE(tp_detect_critical_field(nullptr, 3.0, 0.05, 0.0, 6.0, 0.05, &b_star,
                                     &peak, &sharp) == TP_OK);
    CHECK(std::abs(b_star - 3.0) < 0.05);
    CHECK(sharp == 1);
    CHECK(tp_detect_critical_field(nullptr, 0.0, 0.5, 0.0, 6.0, 0.1, &b_star, &peak,
                                   &sharp) == TP_ERR_DEGENERATE);
}

TEST_CASE("optics through the C surface") {
    double V, P, p1, p2;
    REQUIRE(tp_visibility_predictability(1.0, 1.0, 1.0, &V, &P, &p1, &p2) == TP_OK);
    CHECK(V * V + P * P == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p1 + p2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tp_visibility_predictability(1.0, -1.0, 1.0, &V, &P, &p1, &p2) ==
          TP_ERR_ARG);

    double I;
    REQUIRE(tp_double_slit_intensity(0.0, 1.0, 1.0, 0.0, 1.0, &I) == TP_OK);
    CHECK(I == doctest::Approx(4.0 * std::exp(-0.25)));

    double y, d, sigma;
    REQUIRE(tp_thermo_slit_map(2.0, 0.5, 0, &y, &d, &sigma) == TP_OK);
    CHECK(y * d / (sigma * sigma) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(tp_thermo_slit_map(2.0, 0.5, 7, &y, &d, &sigma) == TP_ERR_ARG);

    double s_analog, vis;
    REQUIRE(tp_slit_array_analog(nullptr, 1.0, &s_analog) == TP_OK);
    tp_observables xy{};
    tp_xy(nullptr, 1.0, 0.0, &xy);
    CHECK(s_analog == doctest::Approx(xy.s).epsilon(1e-10));
    REQUIRE(tp_slit_array_visibility(1.0, 0.0, &vis) == TP_OK);
    CHECK(vis == doctest::Approx(1.0 / std::cosh(2.0)).epsilon(1e-14));
}

namespace {
double scaled_tanh(double x, void* user) {
    return *static_cast<double*>(user) * std::tanh(x);
}
}

TEST_CASE("duality law through callbacks") {
    double out;
    REQUIRE(tp_tanh_solution(2.0, 4.0, 0.0, 1.0, &out) == TP_OK);
    CHECK(out == doctest::Approx(2.0 * std::tanh(1.0)).epsilon(1e-12));

    double scale = 1.0;
    REQUIRE(tp_law_residual(nullptr, scaled_tanh, &scale, 1.0, 1.0, 0.5, &out) ==
            TP_OK);
    CHECK(std::abs(out) <= 1e-9);

    double xs[41];
    for (int i = 0; i <= 40; ++i) xs[i] = -4.0 + 0.2 * i;
    int pass;
    double worst, worst_x;
    REQUIRE(tp_law_inequality_check(nullptr, scaled_tanh, &scale, 1.0, xs, 41,
                                    &pass, &worst, &worst_x) == TP_OK);
    CHECK(pass == 1);
    scale = 1.2;
    REQUIRE(tp_law_inequality_check(nullptr, scaled_tanh, &scale, 1.0, xs, 41,
                                    &pass, &worst, &worst_x) == TP_OK);
    CHECK(pass == 0);
    CHECK(worst > 0.1);
}

TEST_CASE("exact diagonalization through opaque spectra") {
    tp_spectrum* sp = nullptr;
    REQUIRE(tp_ed_run(TP_CHAIN_FREE, 3, 0.0, 1.0, 1.0, 1, &sp) == TP_OK);
    REQUIRE(sp != nullptr);
    CHECK(tp_spectrum_size(sp) == 8);
    CHECK(tp_spectrum_eigenvalue(sp, 0) == doctest::Approx(-3.0));
    CHECK(std::isnan(tp_spectrum_eigenvalue(sp, 99)));
    tp_observables obs{};
    double Z;
    REQUIRE(tp_spectrum_observables(sp, &obs, &Z) == TP_OK);
    CHECK(obs.m == doctest::Approx(std::tanh(1.0)).epsilon(1e-7));
    CHECK(Z > 0.0);
    tp_spectrum_free(sp);

    CHECK(tp_ed_run(TP_CHAIN_TI, 13, 1.0, 1.0, 1.0, 1, &sp) == TP_ERR_CAP);
    CHECK(tp_ed_run(9, 4, 1.0, 1.0, 1.0, 1, &sp) == TP_ERR_ARG);

    double Z10;
    REQUIRE(tp_enumerate_classical_z(10, 1.0, 0.0, &Z10) == TP_OK);
    const double expected =
        std::pow(2.0 * std::cosh(1.0), 10) + std::pow(2.0 * std::sinh(1.0), 10);
    CHECK(Z10 == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("status strings") {
    CHECK(std::string(tp_status_string(TP_OK)) == "ok");
    CHECK(std::string(tp_status_string(TP_ERR_CAP)).find("cap") != std::string::npos);
}
