#pragma once

#include <cstdint>
#include <vector>

#include "zll/zeta_core.hpp"

namespace zll {

// Ordinate with theta(t_bar) = pi*nu + pi/2.
struct NuPoint {
    std::int64_t nu = 0;
    double t_bar = 0;
    double theta_residual = 0;
};

// Newton root of theta(t) - (pi*nu + pi/2); residual < 1e-9.  nu >= 1.
NuPoint nu_point(std::int64_t nu, const EvaluatorConfig& cfg);

struct SumReport {
    double T = 0;
    double H = 0;            // T^delta * ln T
    double delta = 0;
    double sum_even = 0;     // sum of Z' over even-nu points in [T, T+H]
    double sum_odd = 0;
    double main_term = 0;    // (1/4pi) H ln^2(T/2pi)
    std::int64_t count_even = 0;
    std::int64_t count_odd = 0;
};

// Z' sums over the nu-point grid in [T, T+H].  10^3 <= T <= 10^6,
// 0 < delta <= 1/6.
SumReport zprime_sums(double T, double delta, const EvaluatorConfig& cfg, int threads = 1);

enum class ScanTarget { Z, ZPrime };

struct ZeroHit {
    double ordinate = 0;
    double residual = 0;  // half-width of the final bisection bracket
};

// Odd-order zeros (certified sign changes) of Z or Z' on [lo, hi], found by
// sampling at the local wavelength over step_per_wavelength and refined by
// bisection to 1e-9.  Chunk boundaries are independent of the worker count
// and overlap by one wavelength; duplicates are merged by proximity (1e-7).
std::vector<ZeroHit> scan_odd_zeros(ScanTarget which, double lo, double hi,
                                    int step_per_wavelength, const EvaluatorConfig& cfg,
                                    int threads = 1);

}  // namespace zll
