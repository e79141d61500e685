#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace zll::roots {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton iteration safeguarded by bisection on a bracketing interval of a
// monotone function.  `df` may be empty, in which case pure
// bisection/secant steps are used.  Converges to |hi-lo| <= rel_tol*|root|.
inline double solve_monotone(const std::function<double(double)>& f,
                             const std::function<double(double)>& df,
                             double lo, double hi, double rel_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw BracketError("solve_monotone: endpoints do not bracket a root");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double fx = f(x);
        if (fx == 0) return x;
        if ((fx > 0) == (fhi > 0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= rel_tol * std::abs(x)) return 0.5 * (lo + hi);

        double next = 0;
        bool ok = false;
        if (df) {
            double d = df(x);
            if (d != 0) {
                next = x - fx / d;
                ok = next > lo && next < hi;
            }
        }
        if (!ok) {
            // secant through the bracket, falling back to bisection
            next = lo - flo * (hi - lo) / (fhi - flo);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            // keep bisection progress guaranteed every other step
            if (it % 2 == 1) next = 0.5 * (lo + hi);
        }
        x = next;
    }
    return 0.5 * (lo + hi);
}

inline double solve_monotone(const std::function<double(double)>& f,
                             double lo, double hi, double rel_tol) {
    return solve_monotone(f, nullptr, lo, hi, rel_tol);
}

}  // namespace zll::roots
