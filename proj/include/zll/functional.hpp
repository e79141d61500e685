#pragma once

#include "zll/ladder.hpp"

namespace zll {

// Parameter bundle (x, a, alpha, rho) of the limit functional.
struct FunctionalParams {
    double x = 1;        // > 0
    double a = 0.9;      // in (1/2, 1)
    double alpha = 1;    // > 0
    double rho = 1e3;    // >= 100, and x*rho >= 100

    void validate() const;
};

// Window width 2*l1 = (2 pi^3)^{1/(2 alpha)} / a.
double window_halfwidth(double a, double alpha);

// integral of Z^2 between phi1^{-1}(x rho) and phi1^{-1}(x rho + 2 l1).
// Asymptotic mode uses the J-difference identity (the value is
// F(tau + 2 l1) - F(tau), exact within the model); quadrature mode
// integrates Z^2 between the quadrature-mode inverse images.
IntegralResult z_sq_window(const FunctionalParams& params, const LadderModel& model,
                           const EvaluatorConfig& cfg, const QuadratureSpec& spec);

// Outer integral of inner_j(t, a^{-alpha} (ln x rho)^alpha)^2 over
// [(x rho)^{1/a}, (x rho)^{1/a} + x rho].
IntegralResult double_integral(const FunctionalParams& params, const EvaluatorConfig& cfg,
                               const QuadratureSpec& spec);

struct PhiResult {
    double value = 0;
    double uncertainty = 0;  // propagated quadrature error estimates only;
                             // the truncation-in-rho error is not quantified
};

// The finite-rho functional
//   Phi = (1/rho) * z_sq_window^{-alpha} * double_integral,
// which tends to x as rho grows.  Both factors depend on the product
// tau = x*rho only, so Phi(x,a,alpha,rho) = x * Phi(1,a,alpha,x*rho) holds
// to rounding.
PhiResult functional_phi(const FunctionalParams& params, const LadderModel& model,
                         const EvaluatorConfig& cfg, const QuadratureSpec& spec);

}  // namespace zll
