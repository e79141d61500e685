#include <doctest.h>

#include <cmath>

#include "zll/ladder.hpp"

namespace {

const zll::EvaluatorConfig kCfg = [] {
    zll::EvaluatorConfig c;
    c.rs_correction_terms = 8;
    return c;
}();
const zll::QuadratureSpec kSpec;
const zll::LadderModel kAsym;

}  // namespace

TEST_CASE("model validation pins the Euler constant") {
    zll::LadderModel m;
    CHECK_NOTHROW(m.validate());
    m.euler_c = 0.6;
    CHECK_THROWS_AS(m.validate(), std::domain_error);
    m = {};
    m.solver_rel_tol = 0;
    CHECK_THROWS_AS(m.validate(), std::domain_error);
}

TEST_CASE("ladder F and J satisfy the defining relation in asymptotic mode") {
    for (double y : {150.0, 3333.0, 9.9e5}) {
        double f = zll::ladder_F(y, kAsym);
        double j = zll::ladder_J(y, kAsym, kCfg, kSpec);
        CHECK(j == doctest::Approx(f - (1 - kAsym.euler_c) * y).epsilon(1e-13));
    }
}

TEST_CASE("phi1 lags T by about (1-c) T / ln T") {
    for (double T : {1e3, 1e5, 1e6}) {
        double p = zll::phi1(T, kAsym, kCfg, kSpec);
        CHECK(p < T);
        double lag = (1 - kAsym.euler_c) * T / std::log(T);
        CHECK(T - p == doctest::Approx(lag).epsilon(0.25));
    }
}

TEST_CASE("phi1 round trip is tight in asymptotic mode") {
    for (double T : {500.0, 2.5e4, 1e6}) {
        double fwd = zll::phi1_inverse(zll::phi1(T, kAsym, kCfg, kSpec), kAsym, kCfg, kSpec);
        double bwd = zll::phi1(zll::phi1_inverse(T, kAsym, kCfg, kSpec), kAsym, kCfg, kSpec);
        CHECK(std::abs(fwd / T - 1) < 1e-10);
        CHECK(std::abs(bwd / T - 1) < 1e-10);
    }
}

TEST_CASE("phi1 round trip holds in quadrature mode too") {
    zll::LadderModel quad = kAsym;
    quad.j_mode = zll::JMode::quadrature;
    double T = 2000;
    double fwd = zll::phi1_inverse(zll::phi1(T, quad, kCfg, kSpec), quad, kCfg, kSpec);
    CHECK(std::abs(fwd / T - 1) < 1e-9);
}

TEST_CASE("phi1 enforces its domain") {
    CHECK_THROWS_AS(zll::phi1(50, kAsym, kCfg, kSpec), std::domain_error);
    CHECK_THROWS_AS(zll::phi1_inverse(50, kAsym, kCfg, kSpec), std::domain_error);
}

TEST_CASE("reverse iterates increase strictly and respect k") {
    auto chain = zll::reverse_iterates(1e5, 6, kAsym, kCfg, kSpec);
    CHECK(chain.k == 6);
    CHECK(chain.iterates.size() == 7);
    CHECK(chain.iterates.front() == 1e5);
    for (std::size_t i = 1; i < chain.iterates.size(); ++i) {
        CHECK(chain.iterates[i] > chain.iterates[i - 1]);
    }
    CHECK_THROWS_AS(zll::reverse_iterates(1e5, 0, kAsym, kCfg, kSpec), std::domain_error);
    CHECK_THROWS_AS(zll::reverse_iterates(1e5, 21, kAsym, kCfg, kSpec), std::domain_error);
}

TEST_CASE("asymptotic partition matches the almost-linear increment identity") {
    auto report = zll::partition_report(1e6, 5, kAsym, kCfg, kSpec);
    CHECK(report.rows.size() == 5);
    for (const auto& row : report.rows) {
        CHECK(row.spacing == row.t_cur - row.t_prev);
        CHECK(row.target == doctest::Approx((1 - kAsym.euler_c) * row.t_prev));
        CHECK(std::abs(row.ratio - 1) < 1e-8);
    }
    // Eq-style equidistance: consecutive ratios near 1.
    for (double q : report.spacing_ratios) CHECK(q == doctest::Approx(1.0).epsilon(0.05));
    for (double q : report.segment_ratios) CHECK(q == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("partition rows tile the chain") {
    auto report = zll::partition_report(2e5, 4, kAsym, kCfg, kSpec);
    CHECK(report.chain.iterates.size() == 5);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(report.rows[i].t_prev == report.chain.iterates[i]);
        CHECK(report.rows[i].t_cur == report.chain.iterates[i + 1]);
    }
    CHECK(report.spacing_ratios.size() == 3);
    CHECK(report.segment_ratios.size() == 3);
}
