#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "zll/zeta_core.hpp"

namespace {

zll::EvaluatorConfig deep_cfg() {
    zll::EvaluatorConfig cfg;
    cfg.rs_correction_terms = 12;
    return cfg;
}

// Root of f by bisection on a sign-change bracket.
template <typename F>
double bisect(F f, double a, double b, double tol = 1e-12) {
    double fa = f(a);
    REQUIRE(((fa < 0) != (f(b) < 0)));
    while (b - a > tol) {
        double m = 0.5 * (a + b);
        if ((fa < 0) != (f(m) < 0)) {
            b = m;
        } else {
            a = m;
            fa = f(m);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("config validation rejects out-of-range knobs") {
    zll::EvaluatorConfig cfg;
    cfg.rs_correction_terms = -1;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg.rs_correction_terms = 99;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    cfg.stirling_threshold = -3;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = {};
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("theta matches the log-gamma reference") {
    double worst = 0;
    for (double t = 10; t <= 1e4; t *= 1.37) {
        worst = std::max(worst, std::abs(zll::theta(t) - zll::theta_reference(t)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("theta derivative matches a central difference") {
    for (double t : {15.0, 100.0, 1234.5, 99000.0}) {
        double h = 1e-4;
        double fd = (zll::theta(t + h) - zll::theta(t - h)) / (2 * h);
        CHECK(std::abs(zll::theta_derivative(t) - fd) < 1e-6);
    }
}

TEST_CASE("theta rejects nonpositive ordinates") {
    CHECK_THROWS_AS(zll::theta(0), std::domain_error);
    CHECK_THROWS_AS(zll::theta(-5), std::domain_error);
}

TEST_CASE("riemann_siegel_z agrees with the Euler-Maclaurin oracle") {
    auto cfg = deep_cfg();
    double worst = 0;
    for (int i = 0; i < 120; ++i) {
        double t = 10 + (1000 - 10) * i / 119.0;
        worst = std::max(worst, std::abs(zll::riemann_siegel_z(t, cfg) - zll::zeta_oracle(t)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("correction depth improves accuracy monotonically in bulk") {
    zll::EvaluatorConfig shallow;
    shallow.rs_correction_terms = 0;
    auto deep = deep_cfg();
    double worst_shallow = 0, worst_deep = 0;
    for (double t = 30; t < 500; t += 7.03) {
        double z = zll::zeta_oracle(t);
        worst_shallow = std::max(worst_shallow, std::abs(zll::riemann_siegel_z(t, shallow) - z));
        worst_deep = std::max(worst_deep, std::abs(zll::riemann_siegel_z(t, deep) - z));
    }
    CHECK(worst_deep < worst_shallow / 100);
}

TEST_CASE("first critical-line zero sits where the oracle puts it") {
    double oracle_zero = bisect([](double t) { return zll::zeta_oracle(t); }, 14.0, 14.3);
    auto cfg = deep_cfg();
    double rs_zero =
        bisect([&](double t) { return zll::riemann_siegel_z(t, cfg); }, 14.0, 14.3);
    CHECK(std::abs(oracle_zero - rs_zero) < 1e-8);
    CHECK(oracle_zero == doctest::Approx(14.134725).epsilon(1e-7));
}

TEST_CASE("theta has its sign change at the classical ordinate") {
    double root = bisect([](double t) { return zll::theta_reference(t); }, 10.0, 20.0);
    CHECK(root == doctest::Approx(17.8455995).epsilon(1e-7));
    CHECK(std::abs(zll::theta(root)) < 1e-9);
}

TEST_CASE("z_prime matches a central finite difference") {
    auto cfg = deep_cfg();
    for (double t : {1000.0, 3162.0, 5000.0, 10000.0}) {
        double h = 1e-5;
        double fd = (zll::riemann_siegel_z(t + h, cfg) - zll::riemann_siegel_z(t - h, cfg)) /
                    (2 * h);
        CHECK(std::abs(zll::z_prime(t, cfg) - fd) < 1e-3);
    }
}

TEST_CASE("hl_x over z approaches (pi/2)^(1/4) and the gap shrinks") {
    auto cfg = deep_cfg();
    const double limit = std::pow(std::acos(-1.0) / 2, 0.25);
    // Sample points chosen away from zeros of Z.
    double lo_gap = std::abs(zll::hl_x(1000.3, cfg) / zll::riemann_siegel_z(1000.3, cfg) - limit);
    double hi_gap =
        std::abs(zll::hl_x(100000.2, cfg) / zll::riemann_siegel_z(100000.2, cfg) - limit);
    CHECK(lo_gap < 1e-2);
    CHECK(hi_gap < 1e-3);
    CHECK(hi_gap * 5 < lo_gap);
}

TEST_CASE("scaled log-gamma is continuous across the series switch") {
    zll::EvaluatorConfig cfg;
    double below = zll::log_abs_gamma_quarter_scaled(cfg.stirling_threshold - 1e-9, cfg);
    double above = zll::log_abs_gamma_quarter_scaled(cfg.stirling_threshold + 1e-9, cfg);
    CHECK(std::abs(below - above) < 1e-9);
}

TEST_CASE("log_abs_gamma_quarter matches direct log-gamma at moderate t") {
    zll::EvaluatorConfig cfg;
    for (double t : {12.0, 40.0, 90.0, 300.0}) {
        std::complex<double> z(0.25, 0.5 * t);
        double ref = zll::detail::log_gamma(z).real();
        CHECK(zll::log_abs_gamma_quarter(t, cfg) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("xi couples to z with the expected sign and magnitude") {
    auto cfg = deep_cfg();
    for (double t : {100.3, 250.7}) {
        double z = zll::riemann_siegel_z(t, cfg);
        double xi = zll::xi_from_z(t, cfg);
        CHECK(xi != 0);
        CHECK(std::abs(std::log(std::abs(xi)) - zll::log_abs_xi(t, cfg)) < 1e-9);
        // Opposite signs: the functional-equation prefactor is negative there.
        CHECK(std::signbit(xi) != std::signbit(z));
    }
}

TEST_CASE("critical_line_value is coherent with the scalar evaluators") {
    auto cfg = deep_cfg();
    double t = 512.25;
    auto v = zll::critical_line_value(t, cfg);
    CHECK(v.t == t);
    CHECK(v.z == zll::riemann_siegel_z(t, cfg));
    CHECK(v.theta == zll::theta(t));
    CHECK(v.x_hl == zll::hl_x(t, cfg));
    CHECK(v.log_abs_gamma == zll::log_abs_gamma_quarter(t, cfg));
}

TEST_CASE("trig_sum sums n^{it} exactly over short blocks") {
    double t = 1e6;
    auto r = zll::trig_sum(10, 20, t);
    std::complex<double> direct{0, 0};
    for (int n = 10; n < 20; ++n) {
        direct += std::exp(std::complex<double>(0, t * std::log(static_cast<double>(n))));
    }
    CHECK(std::abs(r.sum - direct) < 1e-9);
    CHECK(r.terms == 10);
    CHECK(r.magnitude == doctest::Approx(std::abs(direct)));
    CHECK(r.normalized ==
          doctest::Approx(r.magnitude / (std::sqrt(10.0) * std::pow(t, r.delta))));
}

TEST_CASE("trig_sum enforces the dyadic block preconditions") {
    CHECK_THROWS_AS(zll::trig_sum(10, 25, 1e6), std::domain_error);   // b > 2a
    CHECK_THROWS_AS(zll::trig_sum(10, 20, 100), std::domain_error);   // b > sqrt(t/2pi)
    CHECK_THROWS_AS(zll::trig_sum(0, 10, 1e6), std::domain_error);    // a <= 0
}

TEST_CASE("z_wavelength equals 2pi over theta-prime and stays bounded") {
    double t = 1000;
    CHECK(zll::z_wavelength(t) ==
          doctest::Approx(2 * std::acos(-1.0) / zll::theta_derivative(t)));
    CHECK(zll::z_wavelength(6.5) <= 2 * std::acos(-1.0) / 0.5 + 1e-12);
    CHECK(zll::z_wavelength(1e6) < zll::z_wavelength(1e3));
}
