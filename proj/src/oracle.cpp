#include "thermoptics/oracle.hpp"

#include <cmath>

namespace thermoptics {

namespace {

std::vector<std::pair<int, int>> chain_bonds(const ChainSpec& spec) {
    std::vector<std::pair<int, int>> bonds;
    const int n = spec.n_sites;
    if (n < 2) return bonds;
    const int last = (spec.boundary == Boundary::Periodic && n > 2) ? n : n - 1;
    for (int i = 0; i < last; ++i) bonds.emplace_back(i, (i + 1) % n);
    return bonds;
}

// sz eigenvalue of site i in basis state `state` (bit 0 means spin up).
inline int sz_of(long state, int site) {
    return (state >> site) & 1 ? -1 : 1;
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const ChainSpec& spec) {
    if (spec.n_sites < 1 || spec.n_sites > kChainSiteCap)
        throw CapExceeded("chain length outside [1, 12]");
    const long dim = 1L << spec.n_sites;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    const auto bonds = chain_bonds(spec);

    for (long state = 0; state < dim; ++state) {
        double diag = 0.0;
        switch (spec.model) {
            case ChainModel::Free:
                for (int i = 0; i < spec.n_sites; ++i)
                    diag += -spec.mu_B * sz_of(state, i);
                break;
            case ChainModel::XY:
                for (int i = 0; i < spec.n_sites; ++i)
                    diag += -spec.mu_B * sz_of(state, i);
                // -(J/2)(sx sx + sy sy) flips antiparallel neighbors with
                // amplitude -J.
                for (auto [i, j] : bonds) {
                    if (sz_of(state, i) != sz_of(state, j)) {
                        const long flipped = state ^ (1L << i) ^ (1L << j);
                        H(flipped, state) += -spec.J;
                    }
                }
                break;
            case ChainModel::TI:
                for (auto [i, j] : bonds)
                    diag += -spec.J * sz_of(state, i) * sz_of(state, j);
                for (int i = 0; i < spec.n_sites; ++i)
                    H(state ^ (1L << i), state) += -spec.mu_B;
                break;
        }
        H(state, state) += diag;
    }
    return H;
}

namespace {

// (1/N) ln Z from the full spectrum, max-shifted for overflow safety.
double f_density_of(const Eigen::VectorXd& evals, int n_sites, double kT,
                    double* Z_out = nullptr) {
    const double e_min = evals.minCoeff();
    double acc = 0.0;
    for (long i = 0; i < evals.size(); ++i)
        acc += std::exp(-(evals[i] - e_min) / kT);
    if (Z_out) *Z_out = acc * std::exp(-e_min / kT);  // may overflow; Z is advisory
    return (-e_min / kT + std::log(acc)) / n_sites;
}

double f_density_at(ChainSpec spec, double C, double kT) {
    spec.mu_B = C * kT;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        build_hamiltonian(spec), Eigen::EigenvaluesOnly);
    return f_density_of(solver.eigenvalues(), spec.n_sites, kT);
}

}  // namespace

SpectrumResult ed_observables(const ChainSpec& spec, double kT, const DiffSpec& diff) {
    if (kT <= 0.0) throw Error("temperature must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        build_hamiltonian(spec), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd evals = solver.eigenvalues();

    SpectrumResult out;
    out.eigenvalues.assign(evals.data(), evals.data() + evals.size());
    out.f_density = f_density_of(evals, spec.n_sites, kT, &out.Z);

    const double C = spec.mu_B / kT;
    const double h = diff.step > 0.0 ? diff.step : 1e-4 * (1.0 + std::abs(C));
    const double f_hi = f_density_at(spec, C + h, kT);
    const double f_lo = f_density_at(spec, C - h, kT);
    out.m = (f_hi - f_lo) / (2.0 * h);
    out.s = (f_hi - 2.0 * out.f_density + f_lo) / (h * h);
    return out;
}

double enumerate_classical_Z(int n_sites, const ReducedCouplings& rc) {
    if (rc.convention != Convention::Ising)
        throw Error("enumerate_classical_Z requires the ISING convention");
    if (n_sites < 1 || n_sites > 20)
        throw CapExceeded("configuration enumeration capped at 20 sites");
    const long dim = 1L << n_sites;
    double Z = 0.0;
    for (long state = 0; state < dim; ++state) {
        double e = 0.0;
        for (int i = 0; i < n_sites; ++i) {
            const int si = sz_of(state, i);
            const int sj = sz_of(state, (i + 1) % n_sites);
            e += rc.K * si * sj + rc.C * si;
        }
        Z += std::exp(e);
    }
    return Z;
}

}  // namespace thermoptics
