#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "thermoptics/oracle.hpp"

using namespace thermoptics;

namespace {
const DiffSpec d{};

std::vector<double> eigenvalues_of(const ChainSpec& spec) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_hamiltonian(spec),
                                                          Eigen::EigenvaluesOnly);
    const auto& e = solver.eigenvalues();
    return {e.data(), e.data() + e.size()};
}
}

TEST_CASE("hamiltonian construction") {
    SUBCASE("single free spin") {
        const auto H = build_hamiltonian({ChainModel::Free, 1, 0.0, 1.0});
        CHECK(H(0, 0) == -1.0);
        CHECK(H(1, 1) == 1.0);
        CHECK(H(0, 1) == 0.0);
    }
    SUBCASE("single transverse spin") {
        const auto e = eigenvalues_of({ChainModel::TI, 1, 5.0, 1.0});
        CHECK(e[0] == doctest::Approx(-1.0));
        CHECK(e[1] == doctest::Approx(1.0));
    }
    SUBCASE("two-site open XY bond") {
        // single bond -(1/2)(sx sx + sy sy): spectrum {-1, 0, 0, 1}
        const auto e = eigenvalues_of({ChainModel::XY, 2, 1.0, 0.0, Boundary::Open});
        CHECK(e[0] == doctest::Approx(-1.0));
        CHECK(e[1] == doctest::Approx(0.0));
        CHECK(e[2] == doctest::Approx(0.0));
        CHECK(e[3] == doctest::Approx(1.0));
    }
    SUBCASE("symmetry of every built matrix") {
        for (ChainModel model : {ChainModel::Free, ChainModel::XY, ChainModel::TI})
            for (Boundary b : {Boundary::Periodic, Boundary::Open}) {
                const auto H = build_hamiltonian({model, 5, 0.9, 0.4, b});
                CHECK((H - H.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
            }
    }
    SUBCASE("spectrum symmetric about zero for free and J=0 TI chains") {
        for (const ChainSpec spec :
             {ChainSpec{ChainModel::Free, 4, 0.0, 0.7},
              ChainSpec{ChainModel::TI, 4, 0.0, 0.7}}) {
            auto e = eigenvalues_of(spec);
            std::vector<double> neg(e.size());
            std::transform(e.rbegin(), e.rend(), neg.begin(),
                           [](double v) { return -v; });
            for (size_t i = 0; i < e.size(); ++i)
                CHECK(e[i] == doctest::Approx(neg[i]).epsilon(1e-12));
        }
    }
    SUBCASE("cap enforcement") {
        CHECK_THROWS_AS(build_hamiltonian({ChainModel::TI, 13, 1.0, 1.0}), CapExceeded);
        CHECK_THROWS_AS(build_hamiltonian({ChainModel::TI, 0, 1.0, 1.0}), CapExceeded);
    }
}

TEST_CASE("ed observables") {
    SUBCASE("free spins factorize") {
        const auto res = ed_observables({ChainModel::Free, 3, 0.0, 1.0}, 1.0, d);
        const auto fs = free_spin_observables(1.0);
        CHECK(res.f_density == doctest::Approx(fs.f_density).epsilon(1e-9));
        CHECK(res.m == doctest::Approx(fs.m).epsilon(1e-7));
        CHECK(res.s == doctest::Approx(fs.s).epsilon(1e-5));
        CHECK(res.eigenvalues.size() == 8);
        CHECK(res.Z > 0.0);
    }
    SUBCASE("finite-N complementarity bound") {
        for (int n : {2, 4, 6}) {
            const auto ti = ed_observables({ChainModel::TI, n, 1.0, 0.5}, 1.0, d);
            CHECK(ti.m * ti.m + ti.s <= 1.0 + 1e-6);
            const auto xy = ed_observables({ChainModel::XY, n, 1.0, 0.3}, 1.0, d);
            CHECK(xy.m * xy.m + xy.s <= 1.0 + 1e-6);
        }
    }
    SUBCASE("overflow-safe at very low temperature") {
        const auto res = ed_observables({ChainModel::TI, 4, 1.0, 0.5}, 1e-3, d);
        CHECK(std::isfinite(res.f_density));
    }
    CHECK_THROWS_AS(ed_observables({ChainModel::TI, 4, 1.0, 0.5}, 0.0, d), Error);
}

TEST_CASE("classical configuration sum") {
    SUBCASE("uncoupled chain counts states") {
        CHECK(enumerate_classical_Z(3, {0.0, 0.0, Convention::Ising}) ==
              doctest::Approx(8.0).epsilon(1e-14));
    }
    SUBCASE("matches the transfer matrix") {
        const auto tm = ising_transfer({0.7, 0.3, Convention::Ising});
        const double z = enumerate_classical_Z(4, {0.7, 0.3, Convention::Ising});
        CHECK(z == doctest::Approx(std::pow(tm.lambda_plus, 4) +
                                   std::pow(tm.lambda_minus, 4))
                       .epsilon(1e-12));
    }
    SUBCASE("closed-form eigenvalues at zero field") {
        const double expected =
            std::pow(2.0 * std::cosh(1.0), 10) + std::pow(2.0 * std::sinh(1.0), 10);
        CHECK(enumerate_classical_Z(10, {1.0, 0.0, Convention::Ising}) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("random couplings across lengths") {
        std::mt19937 rng(8080);
        std::uniform_real_distribution<double> dist(-1.2, 1.2);
        for (int n = 3; n <= 12; ++n) {
            const ReducedCouplings rc{dist(rng), dist(rng), Convention::Ising};
            const auto tm = ising_transfer(rc);
            const double z_tm =
                std::pow(tm.lambda_plus, n) + std::pow(tm.lambda_minus, n);
            CHECK(enumerate_classical_Z(n, rc) ==
                  doctest::Approx(z_tm).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(enumerate_classical_Z(21, {1.0, 0.0, Convention::Ising}),
                    CapExceeded);
}
