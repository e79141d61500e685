#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "zll/zeta_core.hpp"

namespace zll {

inline constexpr double kEulerC = 0.5772156649015328606;

struct QuadratureSpec {
    double rel_tol = 1e-6;             // 1e-4 is plenty for oscillatory work
    double points_per_wavelength = 8;  // sampling density of initial panels
    std::int64_t max_panels = std::int64_t{1} << 22;
    int threads = 1;                   // worker count for top-level panels

    void validate() const;
};

struct IntegralResult {
    double value = 0;
    double error_estimate = 0;
    std::int64_t evaluations = 0;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive panel integration of f over [lo, hi].  Initial panels are sized so
// the 15-point Gauss-Legendre rule places points_per_wavelength nodes per
// local_wavelength(t); each panel's error is estimated against the embedded
// 7-point rule and the panel is split until it meets its share of the
// tolerance.
// Panels may be evaluated on spec.threads workers; the reduction is in fixed
// index order (pairwise), so the result is independent of the worker count.
IntegralResult integrate(const std::function<double(double)>& f, double lo, double hi,
                         const std::function<double(double)>& local_wavelength,
                         const QuadratureSpec& spec);

// J(t, H) = integral of X(u) over [t, t+H].  Requires t >= 100, 0 <= H <= t/2.
IntegralResult inner_j(double t, double H, const EvaluatorConfig& cfg,
                       const QuadratureSpec& spec);

// integral over [T, T+U] of J(t, H)^2 dt.  Requires T >= 1e3,
// sqrt(T) < U <= T^0.95, 0 <= H <= T^(1/3).
IntegralResult lemma18_lhs(double T, double U, double H, const EvaluatorConfig& cfg,
                           const QuadratureSpec& spec);

enum class JMode { asymptotic, quadrature };

// Hardy-Littlewood integral of Z^2 from 0 to T.  Quadrature mode integrates
// from t = 1 (the [0,1] contribution is below every tolerance in play) with
// the Euler-Maclaurin oracle below t = 10; asymptotic mode returns
// T ln T + (2c - 1 - ln 2pi) T.
IntegralResult hardy_littlewood_J(double T, JMode mode, const EvaluatorConfig& cfg,
                                  const QuadratureSpec& spec);

}  // namespace zll
