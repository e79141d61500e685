#pragma once

namespace zll::detail {

// Chebyshev series on [0,1] (Clenshaw argument u = 2p - 1).
struct ChebSeries {
    const double* a;
    int n;
};

inline constexpr int kMaxRsCorrection = 17;

// Correction function C_k(p) of the Riemann-Siegel asymptotic expansion,
// 0 <= k <= kMaxRsCorrection.  Tables generated by scripts/gen_rs_coeffs.py.
const ChebSeries& rs_correction_series(int k);

}  // namespace zll::detail
