#include "thermoptics/numerics.hpp"

#include <cmath>
#include <vector>

namespace thermoptics {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], positive half.
constexpr int kHalfOrder = 8;
constexpr double kNodes[kHalfOrder] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kWeights[kHalfOrder] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

double gl16(const RealFn& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < kHalfOrder; ++i) {
        const double dx = half * kNodes[i];
        const double y = f(mid + dx) + f(mid - dx);
        if (!std::isfinite(y))
            throw NonFinite("integrand evaluated to a non-finite value");
        acc += kWeights[i] * y;
    }
    return acc * half;
}

// Panel boundaries for n uniform panels on [0, pi]; with refinement the
// first and last panel are further split geometrically toward the endpoint.
std::vector<double> panel_mesh(int n, bool refine) {
    constexpr double pi = 3.14159265358979323846;
    std::vector<double> pts;
    pts.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) pts.push_back(pi * i / n);

    if (refine && n >= 1) {
        constexpr int kLevels = 40;
        std::vector<double> refined;
        const double h = pts[1] - pts[0];
        for (int l = kLevels; l >= 1; --l) refined.push_back(h * std::ldexp(1.0, -l));
        std::vector<double> out;
        out.push_back(0.0);
        out.insert(out.end(), refined.begin(), refined.end());
        out.insert(out.end(), pts.begin() + 1, pts.end() - 1);
        for (auto it = refined.rbegin(); it != refined.rend(); ++it)
            out.push_back(pi - *it);
        out.push_back(pi);
        return out;
    }
    return pts;
}

double composite(const RealFn& f, int n, bool refine) {
    const auto mesh = panel_mesh(n, refine);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < mesh.size(); ++i) acc += gl16(f, mesh[i], mesh[i + 1]);
    return acc;
}

}  // namespace

double integrate_unit_pi(const RealFn& f, const QuadratureSpec& spec) {
    constexpr double inv_pi = 1.0 / 3.14159265358979323846;
    double prev = composite(f, 1, spec.endpoint_refinement) * inv_pi;
    for (int n = 2; n <= spec.max_panels; n *= 2) {
        const double cur = composite(f, n, spec.endpoint_refinement) * inv_pi;
        if (std::abs(cur - prev) <= spec.abs_tol) return cur;
        prev = cur;
    }
    throw NonConvergent("quadrature did not reach abs_tol within max_panels");
}

double DiffSpec::step_at(double x) const {
    return step > 0.0 ? step : 1e-5 * (1.0 + std::abs(x));
}

namespace {

double central2(const RealFn& f, double x, double h) {
    const double hi = f(x + h);
    const double lo = f(x - h);
    if (!std::isfinite(hi) || !std::isfinite(lo))
        throw NonFinite("derivative stencil evaluated to a non-finite value");
    return (hi - lo) / (2.0 * h);
}

}  // namespace

double central_difference(const RealFn& f, double x, const DiffSpec& spec) {
    const double h = spec.step_at(x);
    const double d1 = central2(f, x, h);
    if (spec.scheme == DiffScheme::Central2) return d1;
    const double d2 = central2(f, x, 0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

double log_cosh(double x) {
    const double a = std::abs(x);
    return a - 0.6931471805599453 + std::log1p(std::exp(-2.0 * a));
}

TanhSech2 tanh_sech2(double x) {
    const double t = std::tanh(x);
    const double e = std::exp(-std::abs(x));
    const double sech = 2.0 * e / (1.0 + e * e);
    return {t, sech * sech};
}

}  // namespace thermoptics
