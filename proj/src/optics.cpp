#include "thermoptics/optics.hpp"

#include <cmath>

namespace thermoptics {

SlitGeometry make_slit_geometry(double d, double sigma, double kappa,
                                double envelope_scale) {
    if (!(d > 0.0) || !(sigma > 0.0))
        throw Error("slit separation and width must be positive");
    return {d, sigma, [kappa](double y) { return kappa * y; }, envelope_scale};
}

double double_slit_intensity(double y, const SlitGeometry& g) {
    const double s2 = g.sigma * g.sigma;
    const double u = y * g.d / s2;
    const double au = std::abs(u);
    // envelope * 2cosh(u) folded into one exponential so neither factor
    // overflows: exp(-(y^2+d^2/4)/s2 + |u|) = exp(-(|y|-d/2)^2/s2).
    const double r = std::abs(y) - 0.5 * g.d;
    const double base = std::exp(-r * r / s2) * (1.0 + std::exp(-2.0 * au));
    const double e = std::exp(-au);
    const double sech_u = 2.0 * e / (1.0 + e * e);
    return g.envelope_scale * base * (1.0 + std::cos(g.phase(y)) * sech_u);
}

VisibilityPredictability visibility_predictability(double y, const SlitGeometry& g) {
    const double u = y * g.d / (g.sigma * g.sigma);
    const auto [t, s2] = tanh_sech2(u);
    // |a1|^2 / |a2|^2 = exp(2u) for the two Gaussian amplitudes.
    const double p1 = 1.0 / (1.0 + std::exp(-2.0 * u));
    return {std::sqrt(s2), std::abs(t), {p1, 1.0 - p1}};
}

SlitMapResult thermo_slit_map(double E, double kT, MapVariant variant) {
    if (kT <= 0.0) throw Error("temperature must be positive");
    // Boltzmann constant k = 1: both variants give yd/sigma^2 = E/kT.
    if (variant == MapVariant::A)
        return {make_slit_geometry(1.0, std::sqrt(kT)), E};
    return {make_slit_geometry(1.0, 1.0), E / kT};
}

SlitMapResult thermo_slit_map(const ReducedCouplings& rc, double kT,
                              MapVariant variant) {
    if (rc.K != 0.0)
        throw InvalidMap("the slit correspondence is defined for free spins only");
    return thermo_slit_map(rc.C * kT, kT, variant);
}

SlitArrayResult slit_array_analog(double K, const QuadratureSpec& quad) {
    auto vis = [K](double w) { return tanh_sech2(2.0 * K * std::cos(w)); };
    SlitArrayResult out;
    out.s_analog =
        integrate_unit_pi([&](double w) { return vis(w).sech2_x; }, quad);
    out.per_omega_visibility = [vis](double w) {
        return std::sqrt(vis(w).sech2_x);
    };
    return out;
}

}  // namespace thermoptics
