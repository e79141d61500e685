#include "zll/functional.hpp"

#include <cmath>
#include <stdexcept>

namespace zll {

namespace {

constexpr double kTwoPiCubed = 62.012553360599640;  // 2 * pi^3

// Both factors of the functional depend on x and rho through tau = x*rho
// only; keeping them as functions of tau makes the scaling identity
// Phi(x,a,alpha,rho) = x * Phi(1,a,alpha,x*rho) hold to rounding.

IntegralResult window_tau(double tau, double a, double alpha, const LadderModel& model,
                          const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    double width = window_halfwidth(a, alpha);
    if (model.j_mode == JMode::asymptotic) {
        // J(phi1^{-1}(G)) = F(G) by definition of the inverse.
        IntegralResult r;
        r.value = ladder_F(tau + width, model) - ladder_F(tau, model);
        r.evaluations = 1;
        return r;
    }
    double y1 = phi1_inverse(tau, model, cfg, spec);
    double y2 = phi1_inverse(tau + width, model, cfg, spec);
    auto z2 = [&cfg](double t) {
        double z = riemann_siegel_z(t, cfg);
        return z * z;
    };
    return integrate(z2, y1, y2, [](double u) { return z_wavelength(u); }, spec);
}

IntegralResult double_integral_tau(double tau, double a, double alpha,
                                   const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    double inner_width = std::pow(a, -alpha) * std::pow(std::log(tau), alpha);
    double lo = std::pow(tau, 1.0 / a);
    double hi = lo + tau;
    if (!(hi <= 1e8)) throw std::domain_error("double_integral: (x rho)^{1/a} + x rho > 1e8");
    QuadratureSpec inner_spec = spec;
    inner_spec.threads = 1;
    auto integrand = [&](double t) {
        double j = inner_j(t, inner_width, cfg, inner_spec).value;
        return j * j;
    };
    return integrate(integrand, lo, hi, [](double u) { return z_wavelength(u); }, spec);
}

}  // namespace

void FunctionalParams::validate() const {
    if (!(x > 0)) throw std::domain_error("FunctionalParams: x must be positive");
    if (!(a > 0.5 && a < 1)) throw std::domain_error("FunctionalParams: a must be in (1/2, 1)");
    if (!(alpha > 0)) throw std::domain_error("FunctionalParams: alpha must be positive");
    if (!(rho >= 100)) throw std::domain_error("FunctionalParams: rho must be >= 100");
    if (!(x * rho >= 100)) throw std::domain_error("FunctionalParams: x*rho must be >= 100");
}

double window_halfwidth(double a, double alpha) {
    if (!(a > 0.5)) throw std::domain_error("window_halfwidth: a must exceed 1/2");
    if (!(alpha > 0)) throw std::domain_error("window_halfwidth: alpha must be positive");
    return std::pow(kTwoPiCubed, 1.0 / (2 * alpha)) / a;
}

IntegralResult z_sq_window(const FunctionalParams& params, const LadderModel& model,
                           const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    params.validate();
    return window_tau(params.x * params.rho, params.a, params.alpha, model, cfg, spec);
}

IntegralResult double_integral(const FunctionalParams& params, const EvaluatorConfig& cfg,
                               const QuadratureSpec& spec) {
    params.validate();
    return double_integral_tau(params.x * params.rho, params.a, params.alpha, cfg, spec);
}

PhiResult functional_phi(const FunctionalParams& params, const LadderModel& model,
                         const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    params.validate();
    double tau = params.x * params.rho;
    IntegralResult w = window_tau(tau, params.a, params.alpha, model, cfg, spec);
    IntegralResult d = double_integral_tau(tau, params.a, params.alpha, cfg, spec);
    PhiResult r;
    r.value = std::pow(w.value, -params.alpha) * d.value / params.rho;
    // Linear propagation of the two quadrature error estimates.
    double rel_w = w.value != 0 ? w.error_estimate / std::abs(w.value) : 0;
    double rel_d = d.value != 0 ? d.error_estimate / std::abs(d.value) : 0;
    r.uncertainty = std::abs(r.value) * (params.alpha * rel_w + rel_d);
    return r;
}

}  // namespace zll
