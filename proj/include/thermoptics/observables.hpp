#pragma once

#include <vector>

#include "thermoptics/models.hpp"

namespace thermoptics {

struct CriticalScanResult {
    double b_star;
    double chi_peak;
    double grid_resolution;
    bool sharp;  // peak exceeds 1.5x the grid median (heuristic diagnostic)
};

enum class SlitRegime { SingleSlit, DoubleSlit };

struct InterferenceDiagnostic {
    double ratio;  // (|lambda_minus| / lambda_plus)^N
    double gap;    // ln lambda_plus - ln |lambda_minus|
    SlitRegime regime;
};

double complementarity_sum(const ObservableTriple& obs);

// Scans the transverse-Ising susceptibility over B on [b_min, b_max] and
// refines the discrete argmax with a 3-point parabola. Throws DegenerateScan
// when the grid shows no interior peak. threads = 0 picks hardware
// concurrency; results are independent of the thread count.
CriticalScanResult detect_critical_field(double J, double kT, double b_min,
                                         double b_max, double b_step,
                                         const QuadratureSpec& quad,
                                         const DiffSpec& diff, int threads = 0);

InterferenceDiagnostic ising_interference_ratio(const ReducedCouplings& rc,
                                                long n_sites,
                                                double threshold = 0.01);

// Minimum of the dispersion sqrt(K^2 + C^2 - 2KC cos w) over [0, pi];
// closed form ||K| - |C||. Zero exactly at criticality.
double ti_gap(const ReducedCouplings& rc);

}  // namespace thermoptics
