#pragma once

#include <vector>

#include "thermoptics/numerics.hpp"

namespace thermoptics {

// Parameters of the complementarity law f^2(x/alpha) + alpha f'(x/alpha) = beta.
struct LawParams {
    double alpha = 1.0;
    double beta = 1.0;
    double c = 0.0;
};

// The solution family x -> sqrt(beta) * tanh(sqrt(beta) * (x/alpha + c)).
RealFn tanh_solution(const LawParams& p);

// f^2(u) + alpha f'(u) - beta at u = x/alpha, with f' by central difference.
double law_residual(const RealFn& f, const LawParams& p, double x,
                    const DiffSpec& diff);

struct InequalityCheck {
    bool pass;  // max(f^2 + alpha f' - 1) <= 1e-9 over the grid
    double worst_violation;
    double worst_x;
};

InequalityCheck law_inequality_check(const RealFn& f, double alpha,
                                     const std::vector<double>& x_grid,
                                     const DiffSpec& diff);

}  // namespace thermoptics
