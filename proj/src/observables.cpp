#include "thermoptics/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace thermoptics {

double complementarity_sum(const ObservableTriple& obs) {
    return obs.m * obs.m + obs.s;
}

namespace {

template <class Fn>
void parallel_for(long n, int threads, Fn fn) {
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = static_cast<int>(std::min<long>(nthreads, n));
    if (nthreads <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mutex;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (long i = t; i < n; i += nthreads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

CriticalScanResult detect_critical_field(double J, double kT, double b_min,
                                         double b_max, double b_step,
                                         const QuadratureSpec& quad,
                                         const DiffSpec& diff, int threads) {
    if (kT <= 0.0) throw Error("temperature must be positive");
    if (!(b_step > 0.0) || !(b_min < b_max))
        throw Error("scan grid must be strictly increasing");
    const long n = static_cast<long>(std::floor((b_max - b_min) / b_step + 0.5)) + 1;
    if (n < 5) throw Error("scan grid needs at least 5 points");

    std::vector<double> b(n), s(n);
    for (long i = 0; i < n; ++i) b[i] = b_min + b_step * i;
    parallel_for(n, threads, [&](long i) {
        ReducedCouplings rc{J / kT, b[i] / kT, Convention::TI};
        s[i] = ti_observables(rc, quad, diff).s;
    });

    const auto it = std::max_element(s.begin(), s.end());
    const long peak = it - s.begin();
    const double range = *it - *std::min_element(s.begin(), s.end());
    if (range < 1e-12 || peak == 0 || peak == n - 1)
        throw DegenerateScan("susceptibility has no interior peak on the grid");

    // Vertex of the parabola through the three points bracketing the maximum.
    const double denom = s[peak - 1] - 2.0 * s[peak] + s[peak + 1];
    double b_star = b[peak];
    if (std::abs(denom) > 0.0)
        b_star += 0.5 * b_step * (s[peak - 1] - s[peak + 1]) / denom;

    std::vector<double> sorted = s;
    std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
    const double median = sorted[n / 2];

    return {b_star, s[peak], b_step, s[peak] > 1.5 * median};
}

InterferenceDiagnostic ising_interference_ratio(const ReducedCouplings& rc,
                                                long n_sites, double threshold) {
    if (n_sites < 1) throw Error("chain length must be at least 1");
    const auto tm = ising_transfer(rc);
    const double abs_lm = std::abs(tm.lambda_minus);

    InterferenceDiagnostic out;
    out.ratio = abs_lm == 0.0
                    ? 0.0
                    : std::exp(n_sites * (std::log(abs_lm) - std::log(tm.lambda_plus)));
    out.gap = abs_lm == 0.0 ? std::numeric_limits<double>::infinity()
                            : std::log(tm.lambda_plus) - std::log(abs_lm);
    out.regime = out.ratio > threshold ? SlitRegime::DoubleSlit : SlitRegime::SingleSlit;
    return out;
}

double ti_gap(const ReducedCouplings& rc) {
    if (rc.convention != Convention::TI)
        throw Error("ti_gap requires the TI coupling convention");
    return std::abs(std::abs(rc.K) - std::abs(rc.C));
}

}  // namespace thermoptics
