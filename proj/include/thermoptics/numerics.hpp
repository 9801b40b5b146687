#pragma once

#include <functional>

#include "thermoptics/errors.hpp"

namespace thermoptics {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_panels = 4096;
    bool endpoint_refinement = false;
};

enum class DiffScheme { Central2, Richardson };

struct DiffSpec {
    // step <= 0 means automatic: h = 1e-5 * (1 + |x|)
    double step = 0.0;
    DiffScheme scheme = DiffScheme::Richardson;

    double step_at(double x) const;
};

using RealFn = std::function<double(double)>;

// (1/pi) * integral of f over [0, pi], composite 16-point Gauss-Legendre
// with panel doubling until the estimate changes by less than abs_tol.
// endpoint_refinement grades the mesh geometrically toward 0 and pi.
double integrate_unit_pi(const RealFn& f, const QuadratureSpec& spec);

double central_difference(const RealFn& f, double x, const DiffSpec& spec);

// ln cosh(x) without overflow for any representable x.
double log_cosh(double x);

struct TanhSech2 {
    double tanh_x;
    double sech2_x;
};

// (tanh x, sech^2 x), sech^2 evaluated in exponential form so it stays
// accurate down to its underflow rather than cancelling against 1 - tanh^2.
TanhSech2 tanh_sech2(double x);

}  // namespace thermoptics
