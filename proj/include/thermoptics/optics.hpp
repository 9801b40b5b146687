#pragma once

#include <functional>

#include "thermoptics/models.hpp"

namespace thermoptics {

struct SlitGeometry {
    double d;      // slit separation
    double sigma;  // effective Gaussian width of each slit
    std::function<double(double)> phase;  // path phase phi(y)
    double envelope_scale = 1.0;
};

// phi(y) = kappa * y, the default linear phase.
SlitGeometry make_slit_geometry(double d, double sigma, double kappa = 0.0,
                                double envelope_scale = 1.0);

struct PathProbabilities {
    double p1;
    double p2;
};

struct VisibilityPredictability {
    double V;
    double P;
    PathProbabilities probs;
};

enum class MapVariant {
    A,  // E <-> y, 1/k <-> d, T <-> sigma^2
    B,  // E/T <-> y, 1/k <-> d/sigma^2
};

struct SlitMapResult {
    SlitGeometry geometry;
    double y;  // detector position realizing the thermodynamic point
};

// Intensity of the Gaussian double slit at detector position y.
double double_slit_intensity(double y, const SlitGeometry& g);

// V = sech(yd/sigma^2), P = |tanh(yd/sigma^2)|; V^2 + P^2 = 1.
VisibilityPredictability visibility_predictability(double y, const SlitGeometry& g);

// Maps a free-spin point (E, kT) onto a slit geometry and detector position
// such that P(y) = m and V(y)^2 = s. Defined for the two-level ensemble only.
SlitMapResult thermo_slit_map(double E, double kT, MapVariant variant);
SlitMapResult thermo_slit_map(const ReducedCouplings& rc, double kT, MapVariant variant);

struct SlitArrayResult {
    double s_analog;  // (1/pi) integral of sech^2(2K cos w)
    std::function<double(double)> per_omega_visibility;
};

// Continuum double-slit array analog of the XY susceptibility at C = 0.
SlitArrayResult slit_array_analog(double K, const QuadratureSpec& quad);

}  // namespace thermoptics
