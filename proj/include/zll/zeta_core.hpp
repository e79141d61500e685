#pragma once

#include <complex>
#include <cstdint>

namespace zll {

// Precision/truncation knobs for the critical-line evaluators.
// Immutable after construction; all evaluators are pure functions.
struct EvaluatorConfig {
    // Number of correction functions C_1..C_k added to the Riemann-Siegel
    // main sum (C_0 is always included when >= 0).  Depth 2 gives ~2e-4
    // absolute accuracy at t = 10 improving rapidly with t; depth 14 gives
    // better than 1e-8 everywhere on [10, 1e6].
    int rs_correction_terms = 2;
    // t above which the direct Stirling series is used for log|Gamma(1/4+it/2)|;
    // below it a shifted (argument-recurrence) series is used.
    double stirling_threshold = 50.0;
    double oracle_tolerance = 1e-9;

    void validate() const;
};

struct CriticalLineValue {
    double t = 0;
    double z = 0;              // Z(t)
    double theta = 0;          // Riemann-Siegel theta
    double x_hl = 0;           // Hardy-Littlewood X(t)
    double log_abs_gamma = 0;  // ln|Gamma(1/4 + it/2)|
};

// Riemann-Siegel theta via its asymptotic expansion.  Absolute error < 1e-10
// for t >= 10.  Throws std::domain_error for t <= 0.
double theta(double t);

// d(theta)/dt, same validity range.
double theta_derivative(double t);

// theta computed independently through the complex log-gamma
// (Im ln Gamma(1/4 + it/2) - t/2 ln pi).  Valid for all t > 0; used by the
// oracle path and as a cross-check of theta().
double theta_reference(double t);

// Z(t) by the Riemann-Siegel formula: main sum over n <= floor(sqrt(t/2pi))
// plus cfg.rs_correction_terms correction terms.  Requires t >= 10.
double riemann_siegel_z(double t, const EvaluatorConfig& cfg);

// Independent slow reference for Z(t) via Euler-Maclaurin summation of
// zeta(1/2 + it).  Valid for 0.1 <= t <= 1e5, absolute error < 1e-10.
// Shares no code with riemann_siegel_z beyond theta_reference.
double zeta_oracle(double t);

// ln|Gamma(1/4 + it/2)|, t > 0.
double log_abs_gamma_quarter(double t, const EvaluatorConfig& cfg);

// pi*t/4 + ln|Gamma(1/4 + it/2)|, computed without forming the two large
// cancelling terms (the pi*t/4 exponent is fused analytically).  This is the
// quantity every X/Xi formula actually needs; it stays O(log t) for all t.
double log_abs_gamma_quarter_scaled(double t, const EvaluatorConfig& cfg);

// Hardy-Littlewood X(t) = 1/2 pi^{-1/4} t^{1/4} e^{pi t/4} |Gamma(1/4+it/2)| Z(t),
// evaluated in log space (overflow-free for all t).  Requires t >= 10.
double hl_x(double t, const EvaluatorConfig& cfg);

// Xi(t) on the critical line, recovered from Z(t).  Decays like e^{-pi t/4};
// underflows to 0 in double beyond t ~ 650 (use log_abs_xi there).
double xi_from_z(double t, const EvaluatorConfig& cfg);

// ln|Xi(t)|; -inf at zeros of Z.
double log_abs_xi(double t, const EvaluatorConfig& cfg);

// Z'(t): the oscillator sum -2 sum_{n<P0} n^{-1/2} (theta'(t) - ln n)
// sin(theta - t ln n) plus the analytic derivative of the correction block.
double z_prime(double t, const EvaluatorConfig& cfg);

CriticalLineValue critical_line_value(double t, const EvaluatorConfig& cfg);

struct TrigSumReport {
    std::complex<double> sum;  // S(a,b) = sum_{a<=n<b} n^{it}
    double magnitude = 0;
    std::int64_t terms = 0;
    double delta = 0;          // exponent used for the normalized ratio
    double normalized = 0;     // |S| / (sqrt(a) * t^delta)
};

// Exact direct summation of S(a,b).  Preconditions: 0 < a <= b <= 2a and
// b <= sqrt(t/2pi).  Default delta is Kolesnik's exponent 35/216.
TrigSumReport trig_sum(double a, double b, double t, double delta = 35.0 / 216.0);

// Local oscillation wavelength 2*pi/theta'(t) of Z-type integrands
// (floored away from the theta' sign change near t = 2pi).
double z_wavelength(double t);

namespace detail {
// Complex log-gamma (principal branch, continuous for Re z > 0) via the
// Stirling series with argument recurrence.
std::complex<double> log_gamma(std::complex<double> z);
}  // namespace detail

}  // namespace zll
