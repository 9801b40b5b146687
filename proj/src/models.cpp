#include "thermoptics/models.hpp"

#include <cmath>

namespace thermoptics {

ReducedCouplings ReducedCouplings::from_raw(Convention conv, double J, double mu,
                                            double B, double T, double k) {
    if (T <= 0.0) throw Error("temperature must be positive");
    const double kT = k * T;
    ReducedCouplings rc;
    rc.convention = conv;
    rc.K = (conv == Convention::XY) ? J / (2.0 * kT) : J / kT;
    rc.C = mu * B / kT;
    return rc;
}

ObservableTriple free_spin_observables(double x) {
    const auto [t, s2] = tanh_sech2(x);
    return {0.6931471805599453 + log_cosh(x), t, s2};
}

TransferResult ising_transfer(const ReducedCouplings& rc) {
    if (rc.convention != Convention::Ising)
        throw Error("ising_transfer requires the ISING coupling convention");
    const double K = rc.K;
    const double C = rc.C;
    if (K + std::abs(C) > 700.0)
        throw Overflow("transfer matrix entries exceed double range; rescale couplings");

    const double mean = std::exp(K) * std::cosh(C);
    const double disc = std::sqrt(std::exp(2.0 * K) * std::sinh(C) * std::sinh(C) +
                                  std::exp(-2.0 * K));
    // lambda_plus dominates in magnitude for every real (K, C):
    // lambda_plus - |lambda_minus| = 2 e^K cosh C > 0.
    const double lp = mean + disc;
    const double lm = mean - disc;
    return {lp, lm, std::log(lp)};
}

ObservableTriple xy_observables(const ReducedCouplings& rc,
                                const QuadratureSpec& quad) {
    if (rc.convention != Convention::XY)
        throw Error("xy_observables requires the XY coupling convention");
    const double K = rc.K;
    const double C = rc.C;
    auto arg = [=](double w) { return C - 2.0 * K * std::cos(w); };

    ObservableTriple out;
    out.f_density = 0.6931471805599453 +
                    integrate_unit_pi([&](double w) { return log_cosh(arg(w)); }, quad);
    out.m = integrate_unit_pi([&](double w) { return std::tanh(arg(w)); }, quad);
    out.s = integrate_unit_pi([&](double w) { return tanh_sech2(arg(w)).sech2_x; }, quad);
    return out;
}

namespace {

double ti_dispersion(double K, double C, double w) {
    const double e2 = K * K + C * C - 2.0 * K * C * std::cos(w);
    return std::sqrt(e2 > 0.0 ? e2 : 0.0);
}

// Analytic integrand of dF/dC: tanh(eps) * d(eps)/dC, with the removable
// eps -> 0 limit taken explicitly.
double ti_magnetization(double K, double C, const QuadratureSpec& quad) {
    return integrate_unit_pi(
        [=](double w) {
            const double eps = ti_dispersion(K, C, w);
            const double num = C - K * std::cos(w);
            if (eps < 1e-12) return num;
            return std::tanh(eps) * num / eps;
        },
        quad);
}

}  // namespace

ObservableTriple ti_observables(const ReducedCouplings& rc,
                                const QuadratureSpec& quad,
                                const DiffSpec& diff,
                                bool* gap_singularity) {
    if (rc.convention != Convention::TI)
        throw Error("ti_observables requires the TI coupling convention");
    const double K = rc.K;
    const double C = rc.C;

    const double gap = std::abs(std::abs(K) - std::abs(C));
    QuadratureSpec q = quad;
    const bool near_closing = gap < 1e-8;
    if (near_closing) q.endpoint_refinement = true;
    if (gap_singularity) *gap_singularity = near_closing;

    ObservableTriple out;
    out.f_density = 0.6931471805599453 +
                    integrate_unit_pi(
                        [=](double w) { return log_cosh(ti_dispersion(K, C, w)); }, q);
    out.m = ti_magnetization(K, C, q);
    out.s = central_difference(
        [&](double c) { return ti_magnetization(K, c, q); }, C, diff);
    return out;
}

}  // namespace thermoptics
