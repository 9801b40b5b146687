#pragma once

#include "thermoptics/numerics.hpp"

namespace thermoptics {

// Dimensionless coupling conventions: K = J/2kT for the XY chain,
// K = J/kT for the classical and transverse-field Ising chains.
enum class Convention { XY, TI, Ising };

struct ReducedCouplings {
    double K = 0.0;
    double C = 0.0;
    Convention convention = Convention::XY;

    static ReducedCouplings from_raw(Convention conv, double J, double mu,
                                     double B, double T, double k = 1.0);
};

struct ObservableTriple {
    double f_density;  // -F/NkT
    double m;          // normalized magnetization, in [-1, 1]
    double s;          // normalized susceptibility, in [0, 1]
};

struct TransferResult {
    double lambda_plus;
    double lambda_minus;
    double f_density;  // ln(lambda_plus), large-N limit
};

// Free two-level spins, x = E/kT. Satisfies m^2 + s = 1 identically.
ObservableTriple free_spin_observables(double x);

// Eigenvalues of the 2x2 transfer matrix [[e^{K+C}, e^{-K}], [e^{-K}, e^{K-C}]].
TransferResult ising_transfer(const ReducedCouplings& rc);

ObservableTriple xy_observables(const ReducedCouplings& rc,
                                const QuadratureSpec& quad);

// Transverse-field Ising in the thermodynamic limit. When the dispersion
// minimum falls below 1e-8 the quadrature switches to endpoint refinement
// and *gap_singularity (if given) is set.
ObservableTriple ti_observables(const ReducedCouplings& rc,
                                const QuadratureSpec& quad,
                                const DiffSpec& diff,
                                bool* gap_singularity = nullptr);

}  // namespace thermoptics
