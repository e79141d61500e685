#include <doctest.h>

#include <cmath>

#include "zll/zeta_core.hpp"
#include "zll/zprime_lab.hpp"

namespace {

const zll::EvaluatorConfig kCfg = [] {
    zll::EvaluatorConfig c;
    c.rs_correction_terms = 8;
    return c;
}();
constexpr double kPi = 3.1415926535897932385;

}  // namespace

TEST_CASE("nu points solve the theta equation to 1e-9") {
    double prev = 0;
    for (std::int64_t nu : {1, 2, 10, 100, 10000}) {
        auto p = zll::nu_point(nu, kCfg);
        CHECK(p.nu == nu);
        CHECK(p.theta_residual < 1e-9);
        CHECK(std::abs(zll::theta(p.t_bar) - (kPi * nu + kPi / 2)) < 1e-9);
        CHECK(p.t_bar > prev);
        prev = p.t_bar;
    }
    CHECK_THROWS_AS(zll::nu_point(0, kCfg), std::domain_error);
}

TEST_CASE("zprime_sums splits signs at the default window") {
    auto r = zll::zprime_sums(1e4, 1.0 / 6.0, kCfg);
    CHECK(r.H == doctest::Approx(std::pow(1e4, 1.0 / 6.0) * std::log(1e4)));
    CHECK(r.count_even >= 1);
    CHECK(r.count_odd >= 1);
    CHECK(r.sum_even < 0);
    CHECK(r.sum_odd > 0);
    double lnq = std::log(1e4 / (2 * kPi));
    CHECK(r.main_term == doctest::Approx(r.H * lnq * lnq / (4 * kPi)));
}

TEST_CASE("zprime_sums is worker-count invariant bit for bit") {
    auto r1 = zll::zprime_sums(2e3, 0.15, kCfg, 1);
    auto r4 = zll::zprime_sums(2e3, 0.15, kCfg, 4);
    CHECK(r1.sum_even == r4.sum_even);
    CHECK(r1.sum_odd == r4.sum_odd);
    CHECK(r1.count_even == r4.count_even);
    CHECK(r1.count_odd == r4.count_odd);
}

TEST_CASE("zprime_sums preconditions") {
    CHECK_THROWS_AS(zll::zprime_sums(100, 0.1, kCfg), std::domain_error);
    CHECK_THROWS_AS(zll::zprime_sums(1e4, 0.3, kCfg), std::domain_error);
    CHECK_THROWS_AS(zll::zprime_sums(1e4, 0, kCfg), std::domain_error);
}

TEST_CASE("scan_odd_zeros reproduces the oracle census on [10, 50]") {
    auto hits = zll::scan_odd_zeros(zll::ScanTarget::Z, 10, 50, 8, kCfg);
    // Independent census: dense sign scan of the Euler-Maclaurin oracle.
    int oracle_count = 0;
    double step = 0.01, prev = zll::zeta_oracle(10);
    for (double t = 10 + step; t <= 50; t += step) {
        double cur = zll::zeta_oracle(t);
        if ((prev < 0) != (cur < 0)) ++oracle_count;
        prev = cur;
    }
    CHECK(static_cast<int>(hits.size()) == oracle_count);
    REQUIRE(!hits.empty());
    CHECK(hits.front().ordinate == doctest::Approx(14.134725).epsilon(1e-7));
    for (const auto& h : hits) {
        CHECK(h.residual <= 1e-9);
        CHECK(std::abs(zll::riemann_siegel_z(h.ordinate, kCfg)) < 1e-6);
    }
}

TEST_CASE("scan_odd_zeros finds zeros of Z-prime between zeros of Z") {
    auto z_hits = zll::scan_odd_zeros(zll::ScanTarget::Z, 20, 40, 8, kCfg);
    auto zp_hits = zll::scan_odd_zeros(zll::ScanTarget::ZPrime, 20, 40, 8, kCfg);
    REQUIRE(z_hits.size() >= 2);
    // Rolle: at least one critical point between consecutive zeros.
    CHECK(zp_hits.size() + 1 >= z_hits.size());
}

TEST_CASE("scan_odd_zeros is worker-count invariant bit for bit") {
    auto a = zll::scan_odd_zeros(zll::ScanTarget::Z, 80, 120, 6, kCfg, 1);
    auto b = zll::scan_odd_zeros(zll::ScanTarget::Z, 80, 120, 6, kCfg, 4);
    auto c = zll::scan_odd_zeros(zll::ScanTarget::Z, 80, 120, 6, kCfg, 16);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].ordinate == b[i].ordinate);
        CHECK(a[i].ordinate == c[i].ordinate);
    }
}

TEST_CASE("scan_odd_zeros preconditions") {
    CHECK_THROWS_AS(zll::scan_odd_zeros(zll::ScanTarget::Z, 5, 50, 8, kCfg), std::domain_error);
    CHECK_THROWS_AS(zll::scan_odd_zeros(zll::ScanTarget::Z, 50, 40, 8, kCfg), std::domain_error);
    CHECK_THROWS_AS(zll::scan_odd_zeros(zll::ScanTarget::Z, 10, 50, 1, kCfg), std::domain_error);
}
