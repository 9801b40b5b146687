#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "thermoptics/numerics.hpp"
#include "trapezoid_oracle.hpp"

using namespace thermoptics;

TEST_CASE("integrate_unit_pi on elementary integrands") {
    QuadratureSpec q;
    CHECK(integrate_unit_pi([](double) { return 1.0; }, q) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(integrate_unit_pi([](double w) { return std::cos(w); }, q)) < 1e-12);
}

TEST_CASE("integrate_unit_pi matches the trapezoid oracle") {
    QuadratureSpec q;
    auto f = [](double w) { return std::log(std::cosh(2.0 * std::cos(w))); };
    const double oracle = trapezoid_unit_pi(f);
    // frozen oracle value, trapezoid at 10^6 points
    CHECK(oracle == doctest::Approx(0.7220604592863162).epsilon(1e-12));
    CHECK(integrate_unit_pi(f, q) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("integrate_unit_pi is exact for low-degree polynomials in cos") {
    QuadratureSpec q;
    // (1/pi) int cos^2 = 1/2, (1/pi) int cos^4 = 3/8
    CHECK(std::abs(integrate_unit_pi([](double w) { return std::pow(std::cos(w), 2); }, q) - 0.5) < 1e-12);
    CHECK(std::abs(integrate_unit_pi([](double w) { return std::pow(std::cos(w), 4); }, q) - 0.375) < 1e-12);
}

TEST_CASE("integrate_unit_pi error paths") {
    QuadratureSpec q;
    q.max_panels = 1;
    q.abs_tol = 1e-16;
    CHECK_THROWS_AS(
        integrate_unit_pi([](double w) { return std::log(std::cosh(2.0 * std::cos(w))); }, q),
        NonConvergent);

    QuadratureSpec q2;
    CHECK_THROWS_AS(integrate_unit_pi(
                        [](double) { return std::numeric_limits<double>::infinity(); }, q2),
                    NonFinite);
}

TEST_CASE("endpoint refinement handles an endpoint kink") {
    // sqrt-like behavior at w = 0, typical of a closing dispersion
    auto f = [](double w) { return std::sqrt(2.0 - 2.0 * std::cos(w)); };
    QuadratureSpec q;
    q.endpoint_refinement = true;
    const double oracle = trapezoid_unit_pi(f, 4000000);
    CHECK(integrate_unit_pi(f, q) == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("central_difference") {
    DiffSpec d;
    CHECK(central_difference([](double v) { return v * v; }, 1.0, d) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(central_difference([](double v) { return std::tanh(v); }, 0.0, d) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(central_difference([](double v) { return log_cosh(v); }, 1.0, d) ==
          doctest::Approx(std::tanh(1.0)).epsilon(1e-7));
    CHECK_THROWS_AS(central_difference(
                        [](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, d),
                    NonFinite);
}

TEST_CASE("richardson derivative of sin matches cos at random points") {
    DiffSpec d;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        CHECK(std::abs(central_difference([](double v) { return std::sin(v); }, x, d) -
                       std::cos(x)) < 1e-9);
    }
}

TEST_CASE("log_cosh") {
    CHECK(log_cosh(0.0) == 0.0);
    CHECK(log_cosh(1000.0) == doctest::Approx(1000.0 - std::log(2.0)).epsilon(1e-12));
    for (double x : {-30.0, -2.5, -0.1, 0.3, 7.0, 700.0}) {
        CHECK(log_cosh(x) == log_cosh(-x));
        CHECK(log_cosh(x) >= 0.0);
    }
    // convexity: discrete second difference stays non-negative
    for (double x = -50.0; x <= 50.0; x += 0.5) {
        const double h = 1e-3;
        const double dd = log_cosh(x + h) - 2.0 * log_cosh(x) + log_cosh(x - h);
        CHECK(dd >= -1e-10);
    }
}

TEST_CASE("tanh_sech2") {
    const auto at0 = tanh_sech2(0.0);
    CHECK(at0.tanh_x == 0.0);
    CHECK(at0.sech2_x == 1.0);

    const auto at1 = tanh_sech2(1.0);
    CHECK(at1.tanh_x == doctest::Approx(0.761594).epsilon(1e-6));
    CHECK(at1.sech2_x == doctest::Approx(0.419974).epsilon(1e-6));

    // monotone saturation toward (1, 0)
    double prev_t = 0.0, prev_s = 1.0;
    for (double x = 0.5; x < 40.0; x += 0.5) {
        const auto v = tanh_sech2(x);
        CHECK(v.tanh_x >= prev_t);
        CHECK(v.sech2_x <= prev_s);
        prev_t = v.tanh_x;
        prev_s = v.sech2_x;
    }
    CHECK(tanh_sech2(500.0).tanh_x == 1.0);
    CHECK(tanh_sech2(500.0).sech2_x == doctest::Approx(0.0));

    for (double x = -50.0; x <= 50.0; x += 0.1) {
        const auto v = tanh_sech2(x);
        CHECK(std::abs(v.tanh_x * v.tanh_x + v.sech2_x - 1.0) <= 1e-12);
    }
}
