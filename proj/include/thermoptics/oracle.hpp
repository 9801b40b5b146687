#pragma once

#include <Eigen/Dense>
#include <vector>

#include "thermoptics/models.hpp"

namespace thermoptics {

enum class ChainModel { Free, XY, TI };
enum class Boundary { Periodic, Open };

struct ChainSpec {
    ChainModel model = ChainModel::Free;
    int n_sites = 1;
    double J = 0.0;
    double mu_B = 0.0;  // the mu*B product
    Boundary boundary = Boundary::Periodic;
};

inline constexpr int kChainSiteCap = 12;

struct SpectrumResult {
    std::vector<double> eigenvalues;  // ascending
    double Z;
    double f_density;  // (1/N) ln Z
    double m;
    double s;
};

// Dense 2^N x 2^N real-symmetric Hamiltonian in the computational z-basis.
// XY: -(J/2) sum (sx sx + sy sy) - muB sum sz
// TI: -J sum sz sz - muB sum sx
// Free: -muB sum sz
Eigen::MatrixXd build_hamiltonian(const ChainSpec& spec);

// Full-spectrum thermodynamics at temperature kT; m and s by central
// differences of f_density in the reduced field C = muB/kT.
SpectrumResult ed_observables(const ChainSpec& spec, double kT, const DiffSpec& diff);

// Exhaustive 2^N configuration sum of the classical Ising chain (periodic).
double enumerate_classical_Z(int n_sites, const ReducedCouplings& rc);

}  // namespace thermoptics
