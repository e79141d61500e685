#include <doctest.h>

#include <cmath>
#include <vector>

#include "zll/quadrature.hpp"
#include "zll/zeta_core.hpp"

namespace {

const auto kFlat = [](double) { return 1.0; };

zll::EvaluatorConfig deep_cfg() {
    zll::EvaluatorConfig cfg;
    cfg.rs_correction_terms = 12;
    return cfg;
}

}  // namespace

TEST_CASE("spec validation rejects nonsense knobs") {
    zll::QuadratureSpec spec;
    spec.rel_tol = 0;
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
    spec = {};
    spec.points_per_wavelength = 1;
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
    spec = {};
    spec.max_panels = 0;
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
}

TEST_CASE("integrate is near-exact on a smooth polynomial") {
    zll::QuadratureSpec spec;
    auto r = zll::integrate([](double x) { return x * x * x * x * x; }, 0, 1, kFlat, spec);
    CHECK(r.value == doctest::Approx(1.0 / 6).epsilon(1e-14));
    CHECK(r.evaluations > 0);
}

TEST_CASE("integrate handles an oscillatory integrand with an honest estimate") {
    zll::QuadratureSpec spec;
    double hi = 100 * std::acos(-1.0);
    auto r = zll::integrate([](double x) { return std::cos(x); }, 0.25, hi,
                            [](double) { return 2 * std::acos(-1.0); }, spec);
    double truth = std::sin(hi) - std::sin(0.25);
    CHECK(std::abs(r.value - truth) < 1e-9);
    CHECK(std::abs(r.value - truth) <= 10 * r.error_estimate + 1e-12);
}

TEST_CASE("integrate of Z^2 matches a dense trapezoid oracle") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    auto r = zll::integrate([&](double t) { double z = zll::riemann_siegel_z(t, cfg); return z * z; },
                            100, 110, [](double t) { return zll::z_wavelength(t); }, spec);
    // Independent oracle: composite trapezoid on the Euler-Maclaurin Z.
    const int n = 20000;
    double h = 10.0 / n, acc = 0;
    for (int i = 0; i <= n; ++i) {
        double z = zll::zeta_oracle(100 + i * h);
        acc += (i == 0 || i == n ? 0.5 : 1.0) * z * z;
    }
    acc *= h;
    CHECK(r.value == doctest::Approx(acc).epsilon(1e-6));
}

TEST_CASE("integrate over an empty interval is zero") {
    zll::QuadratureSpec spec;
    auto r = zll::integrate([](double) { return 3.0; }, 5, 5, kFlat, spec);
    CHECK(r.value == 0);
    CHECK_THROWS_AS(zll::integrate([](double) { return 1.0; }, 5, 4, kFlat, spec),
                    std::domain_error);
}

TEST_CASE("integrate throws BudgetExceeded when starved of panels") {
    zll::QuadratureSpec spec;
    spec.max_panels = 2;
    CHECK_THROWS_AS(zll::integrate([](double x) { return std::cos(100 * x); }, 0, 50,
                                   [](double) { return 0.0628; }, spec),
                    zll::BudgetExceeded);
}

TEST_CASE("integrate is worker-count invariant bit for bit") {
    auto cfg = deep_cfg();
    auto z2 = [&](double t) { double z = zll::riemann_siegel_z(t, cfg); return z * z; };
    auto wav = [](double t) { return zll::z_wavelength(t); };
    std::vector<double> values;
    for (int threads : {1, 4, 16}) {
        zll::QuadratureSpec spec;
        spec.threads = threads;
        values.push_back(zll::integrate(z2, 200, 240, wav, spec).value);
    }
    CHECK(values[0] == values[1]);
    CHECK(values[0] == values[2]);
}

TEST_CASE("inner_j is additive over adjacent windows") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    double t = 1000, h1 = 3.5, h2 = 4.25;
    double whole = zll::inner_j(t, h1 + h2, cfg, spec).value;
    double split = zll::inner_j(t, h1, cfg, spec).value + zll::inner_j(t + h1, h2, cfg, spec).value;
    CHECK(whole == doctest::Approx(split).epsilon(1e-9));
}

TEST_CASE("inner_j trivial window and preconditions") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    CHECK(zll::inner_j(500, 0, cfg, spec).value == 0);
    CHECK_THROWS_AS(zll::inner_j(50, 1, cfg, spec), std::domain_error);
    CHECK_THROWS_AS(zll::inner_j(500, 400, cfg, spec), std::domain_error);
}

TEST_CASE("inner_j is bounded by the window sup of |X|") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    double t = 1e4, H = std::log(1e4);
    double j = zll::inner_j(t, H, cfg, spec).value;
    double sup = 0;
    for (double u = t; u <= t + H; u += 1e-3) sup = std::max(sup, std::abs(zll::hl_x(u, cfg)));
    CHECK(std::abs(j) <= H * sup);
}

TEST_CASE("lemma18_lhs preconditions and trivial window") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    CHECK(zll::lemma18_lhs(1e3, 100, 0, cfg, spec).value == 0);
    CHECK_THROWS_AS(zll::lemma18_lhs(500, 100, 1, cfg, spec), std::domain_error);
    CHECK_THROWS_AS(zll::lemma18_lhs(1e3, 10, 1, cfg, spec), std::domain_error);   // U too small
    CHECK_THROWS_AS(zll::lemma18_lhs(1e3, 999, 1, cfg, spec), std::domain_error);  // U too large
    CHECK_THROWS_AS(zll::lemma18_lhs(1e3, 100, 50, cfg, spec), std::domain_error); // H too large
}

TEST_CASE("hardy_littlewood_J modes agree at the percent level") {
    auto cfg = deep_cfg();
    zll::QuadratureSpec spec;
    double asym = zll::hardy_littlewood_J(1e3, zll::JMode::asymptotic, cfg, spec).value;
    double quad = zll::hardy_littlewood_J(1e3, zll::JMode::quadrature, cfg, spec).value;
    CHECK(std::abs(quad / asym - 1) < 0.01);
    CHECK_THROWS_AS(zll::hardy_littlewood_J(5, zll::JMode::asymptotic, cfg, spec),
                    std::domain_error);
    CHECK_THROWS_AS(zll::hardy_littlewood_J(2e5, zll::JMode::quadrature, cfg, spec),
                    std::domain_error);
}
