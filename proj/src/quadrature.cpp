#include "zll/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "zll/parallel.hpp"

namespace zll {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2 * kPi;

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
GaussRule make_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1 - x * x) * pp * pp);
    }
    return r;
}

const GaussRule& rule7() {
    static const GaussRule r = make_rule(7);
    return r;
}
const GaussRule& rule15() {
    static const GaussRule r = make_rule(15);
    return r;
}

struct PanelEval {
    double i15 = 0;
    double i7 = 0;
    std::int64_t evals = 0;
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b) {
    PanelEval p;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const auto& g15 = rule15();
    const auto& g7 = rule7();
    for (int i = 0; i < 15; ++i) p.i15 += g15.weights[i] * f(mid + half * g15.nodes[i]);
    for (int i = 0; i < 7; ++i) p.i7 += g7.weights[i] * f(mid + half * g7.nodes[i]);
    p.i15 *= half;
    p.i7 *= half;
    p.evals = 22;
    return p;
}

struct PanelResult {
    double value = 0;
    double error = 0;
    std::int64_t evals = 0;
};

// Depth-first refinement of one panel to an absolute tolerance share.
void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, std::int64_t budget, PanelResult& out) {
    PanelEval p = eval_panel(f, a, b);
    out.evals += p.evals;
    double err = std::abs(p.i15 - p.i7);
    if (err <= tol || depth >= 40 || out.evals >= budget) {
        if (err > tol && out.evals >= budget)
            throw BudgetExceeded("integrate: panel budget exhausted before tolerance");
        out.value += p.i15;
        out.error += err;
        return;
    }
    double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth + 1, budget, out);
    refine(f, mid, b, 0.5 * tol, depth + 1, budget, out);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0)) throw std::domain_error("rel_tol must be positive");
    if (!(points_per_wavelength >= 4))
        throw std::domain_error("points_per_wavelength must be >= 4");
    if (max_panels < 1) throw std::domain_error("max_panels must be >= 1");
}

IntegralResult integrate(const std::function<double(double)>& f, double lo, double hi,
                         const std::function<double(double)>& local_wavelength,
                         const QuadratureSpec& spec) {
    spec.validate();
    if (!(lo <= hi)) throw std::domain_error("integrate: requires lo <= hi");
    IntegralResult out;
    if (lo == hi) {
        out.evaluations = 1;
        return out;
    }

    // Initial panels sized by the local wavelength.
    std::vector<double> edges{lo};
    while (edges.back() < hi) {
        double t = edges.back();
        // A 15-point panel at the requested sampling density.
        double w = 15.0 * local_wavelength(t) / spec.points_per_wavelength;
        if (!(w > 0)) throw std::domain_error("integrate: local_wavelength must be positive");
        edges.push_back(std::min(hi, t + w));
        if (static_cast<std::int64_t>(edges.size()) > spec.max_panels)
            throw BudgetExceeded("integrate: initial panel count exceeds max_panels");
    }
    std::size_t n = edges.size() - 1;

    // Coarse pass for the tolerance scale.
    auto coarse = parallel_map(n, spec.threads, [&](std::size_t i) {
        return eval_panel(f, edges[i], edges[i + 1]);
    });
    std::vector<double> cv(n), ca(n);
    std::int64_t evals = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cv[i] = coarse[i].i15;
        ca[i] = std::abs(coarse[i].i15);
        evals += coarse[i].evals;
    }
    double scale = std::max(std::abs(pairwise_sum(cv)), 1e-3 * pairwise_sum(ca));
    double tol_total = spec.rel_tol * std::max(scale, 1e-300);
    std::int64_t budget_per_panel = std::max<std::int64_t>(1, 22 * spec.max_panels / n);

    // Refinement pass; per-panel tolerance is its width share of the total.
    double W = hi - lo;
    auto refined = parallel_map(n, spec.threads, [&](std::size_t i) {
        PanelResult r;
        double tol_i = tol_total * (edges[i + 1] - edges[i]) / W;
        double err0 = std::abs(coarse[i].i15 - coarse[i].i7);
        if (err0 <= tol_i) {
            r.value = coarse[i].i15;
            r.error = err0;
            return r;
        }
        refine(f, edges[i], edges[i + 1], tol_i, 0, budget_per_panel, r);
        return r;
    });

    std::vector<double> vals(n), errs(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = refined[i].value;
        errs[i] = refined[i].error;
        evals += refined[i].evals;
    }
    out.value = pairwise_sum(vals);
    out.error_estimate = pairwise_sum(errs);
    out.evaluations = std::max<std::int64_t>(1, evals);
    return out;
}

IntegralResult inner_j(double t, double H, const EvaluatorConfig& cfg,
                       const QuadratureSpec& spec) {
    if (!(t >= 100)) throw std::domain_error("inner_j: requires t >= 100");
    if (!(H >= 0 && H <= t / 2)) throw std::domain_error("inner_j: requires 0 <= H <= t/2");
    return integrate([&cfg](double u) { return hl_x(u, cfg); }, t, t + H,
                     [](double u) { return z_wavelength(u); }, spec);
}

IntegralResult lemma18_lhs(double T, double U, double H, const EvaluatorConfig& cfg,
                           const QuadratureSpec& spec) {
    if (!(T >= 1e3)) throw std::domain_error("lemma18_lhs: requires T >= 1e3");
    if (!(U > std::sqrt(T) && U <= std::pow(T, 0.95)))
        throw std::domain_error("lemma18_lhs: requires sqrt(T) < U <= T^0.95");
    if (!(H >= 0 && H <= std::cbrt(T)))
        throw std::domain_error("lemma18_lhs: requires 0 <= H <= cbrt(T)");
    if (H == 0) {
        IntegralResult r;
        r.evaluations = 1;
        return r;
    }
    QuadratureSpec inner_spec = spec;
    inner_spec.threads = 1;  // outer panels carry the parallelism
    auto integrand = [&](double t) {
        double j = inner_j(t, H, cfg, inner_spec).value;
        return j * j;
    };
    return integrate(integrand, T, T + U, [](double u) { return z_wavelength(u); }, spec);
}

IntegralResult hardy_littlewood_J(double T, JMode mode, const EvaluatorConfig& cfg,
                                  const QuadratureSpec& spec) {
    if (!(T >= 10)) throw std::domain_error("hardy_littlewood_J: requires T >= 10");
    if (mode == JMode::asymptotic) {
        IntegralResult r;
        r.value = T * std::log(T) + (2 * kEulerC - 1 - std::log(kTwoPi)) * T;
        r.evaluations = 1;
        return r;
    }
    if (!(T <= 1e5)) throw std::domain_error("hardy_littlewood_J: quadrature mode needs T <= 1e5");
    auto z2 = [&cfg](double t) {
        double z = t < 10 ? zeta_oracle(t) : riemann_siegel_z(t, cfg);
        return z * z;
    };
    return integrate(z2, 1.0, T, [](double u) { return z_wavelength(u); }, spec);
}

}  // namespace zll
