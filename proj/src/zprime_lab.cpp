#include "zll/zprime_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zll/parallel.hpp"
#include "zll/roots.hpp"

namespace zll {

namespace {

constexpr double kPi = 3.1415926535897932385;
constexpr double kTwoPi = 6.2831853071795864769;

// theta is strictly increasing for t > 2*pi; all grid work stays above that.
constexpr double kThetaMonotoneFloor = kTwoPi + 0.5;

// Solves theta(t) = target for t > 2*pi, starting from the inversion of the
// leading term (t/2)(ln(t/2pi) - 1).
double solve_theta_equals(double target, double warm_start = 0) {
    double guess = warm_start;
    if (!(guess > kThetaMonotoneFloor)) {
        guess = std::max(kThetaMonotoneFloor + 1.0, kTwoPi * std::exp(1.0));
        for (int i = 0; i < 64; ++i) {
            double g = 0.5 * guess * (std::log(guess / kTwoPi) - 1.0) - target;
            double dg = 0.5 * std::log(guess / kTwoPi);
            if (dg <= 0) break;
            double next = guess - g / dg;
            if (!(next > kThetaMonotoneFloor)) next = 0.5 * (guess + kThetaMonotoneFloor);
            if (std::abs(next - guess) < 1e-12 * guess) {
                guess = next;
                break;
            }
            guess = next;
        }
    }
    double lo = guess, hi = guess;
    double span = std::max(1.0, 2.0 * kPi / std::max(theta_derivative(guess), 0.5));
    while (theta(lo) > target && lo > kThetaMonotoneFloor) {
        lo = std::max(kThetaMonotoneFloor, lo - span);
        span *= 2;
    }
    span = std::max(1.0, 2.0 * kPi / std::max(theta_derivative(hi), 0.5));
    while (theta(hi) < target) {
        hi += span;
        span *= 2;
    }
    return roots::solve_monotone([target](double t) { return theta(t) - target; },
                          [](double t) { return theta_derivative(t); }, lo, hi, 1e-15);
}

double scan_function(ScanTarget which, double t, const EvaluatorConfig& cfg) {
    return which == ScanTarget::Z ? riemann_siegel_z(t, cfg) : z_prime(t, cfg);
}

}  // namespace

NuPoint nu_point(std::int64_t nu, const EvaluatorConfig& cfg) {
    (void)cfg;
    if (nu < 1) throw std::domain_error("nu_point: nu must be >= 1");
    double target = kPi * static_cast<double>(nu) + kPi / 2;
    NuPoint p;
    p.nu = nu;
    p.t_bar = solve_theta_equals(target);
    p.theta_residual = std::abs(theta(p.t_bar) - target);
    return p;
}

SumReport zprime_sums(double T, double delta, const EvaluatorConfig& cfg, int threads) {
    if (!(T >= 1e3 && T <= 1e6)) throw std::domain_error("zprime_sums: T must lie in [1e3, 1e6]");
    if (!(delta > 0 && delta <= 1.0 / 6.0))
        throw std::domain_error("zprime_sums: delta must lie in (0, 1/6]");
    SumReport report;
    report.T = T;
    report.delta = delta;
    report.H = std::pow(T, delta) * std::log(T);
    double lnq = std::log(T / kTwoPi);
    report.main_term = report.H * lnq * lnq / (4 * kPi);

    auto nu_lo = static_cast<std::int64_t>(std::ceil((theta(T) - kPi / 2) / kPi));
    auto nu_hi = static_cast<std::int64_t>(std::floor((theta(T + report.H) - kPi / 2) / kPi));
    nu_lo = std::max<std::int64_t>(nu_lo, 1);
    if (nu_hi < nu_lo) return report;

    auto count = static_cast<std::size_t>(nu_hi - nu_lo + 1);
    std::vector<double> grid = parallel_map(count, threads, [&](std::size_t i) {
        double target = kPi * static_cast<double>(nu_lo + static_cast<std::int64_t>(i)) + kPi / 2;
        // Warm-start from the uniform-in-theta estimate off T.
        double warm = T + (target - theta(T)) / theta_derivative(T);
        return solve_theta_equals(target, warm);
    });

    std::vector<double> even_terms, odd_terms;
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t nu = nu_lo + static_cast<std::int64_t>(i);
        double t_bar = grid[i];
        if (t_bar < T || t_bar > T + report.H) continue;
        double zp = z_prime(t_bar, cfg);
        if (nu % 2 == 0) {
            even_terms.push_back(zp);
            ++report.count_even;
        } else {
            odd_terms.push_back(zp);
            ++report.count_odd;
        }
    }
    report.sum_even = pairwise_sum(even_terms);
    report.sum_odd = pairwise_sum(odd_terms);
    return report;
}

std::vector<ZeroHit> scan_odd_zeros(ScanTarget which, double lo, double hi,
                                    int step_per_wavelength, const EvaluatorConfig& cfg,
                                    int threads) {
    if (!(lo >= 10)) throw std::domain_error("scan_odd_zeros: lo must be >= 10");
    if (!(hi > lo)) throw std::domain_error("scan_odd_zeros: hi must exceed lo");
    if (step_per_wavelength < 2)
        throw std::domain_error("scan_odd_zeros: step_per_wavelength must be >= 2");

    // Chunk layout is fixed by the range alone, so results do not depend on
    // the worker count.  Chunks overlap by one wavelength; duplicates from
    // the overlap are merged afterwards.
    double chunk_span = 32 * z_wavelength(hi);
    auto chunks = static_cast<std::size_t>(std::ceil((hi - lo) / chunk_span));
    chunks = std::max<std::size_t>(chunks, 1);
    double chunk_width = (hi - lo) / static_cast<double>(chunks);

    auto per_chunk = parallel_map(chunks, threads, [&](std::size_t c) {
        std::vector<ZeroHit> hits;
        double c_lo = lo + chunk_width * static_cast<double>(c);
        double c_hi = std::min(hi, c_lo + chunk_width + z_wavelength(hi));
        double t = c_lo;
        double f_prev = scan_function(which, t, cfg);
        while (t < c_hi) {
            double step = z_wavelength(t) / step_per_wavelength;
            double t_next = std::min(t + step, c_hi);
            double f_next = scan_function(which, t_next, cfg);
            if ((f_prev < 0) != (f_next < 0)) {
                double a = t, b = t_next, fa = f_prev;
                while (b - a > 2e-9) {
                    double m = 0.5 * (a + b);
                    double fm = scan_function(which, m, cfg);
                    if ((fa < 0) != (fm < 0)) {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                }
                hits.push_back({0.5 * (a + b), 0.5 * (b - a)});
            }
            t = t_next;
            f_prev = f_next;
        }
        return hits;
    });

    std::vector<ZeroHit> merged;
    for (const auto& hits : per_chunk)
        for (const auto& h : hits) {
            if (!merged.empty() && std::abs(h.ordinate - merged.back().ordinate) < 1e-7) continue;
            merged.push_back(h);
        }
    return merged;
}

}  // namespace zll
