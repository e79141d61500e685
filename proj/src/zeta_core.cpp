#include "zll/zeta_core.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "zll/detail/rs_coeffs.hpp"

namespace zll {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2 * kPi;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// B_{2k} for the Stirling and Euler-Maclaurin tails.
constexpr double kBernoulli2k[] = {
    1.0 / 6,      -1.0 / 30,     1.0 / 42,      -1.0 / 30,      5.0 / 66,
    -691.0 / 2730, 7.0 / 6,      -3617.0 / 510, 43867.0 / 798,  -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6};

// ln n for the Riemann-Siegel main sum and the oscillator sums.
// Sized for t up to ~1e8 (main sum) and the oracle at t <= 1e5.
const std::vector<double>& log_table() {
    static std::vector<double> table;
    static std::once_flag flag;
    std::call_once(flag, [] {
        table.resize(1 << 18);
        table[0] = 0;
        for (std::size_t n = 1; n < table.size(); ++n)
            table[n] = std::log(static_cast<double>(n));
    });
    return table;
}

double clenshaw(const detail::ChebSeries& s, double u) {
    double b1 = 0, b2 = 0;
    for (int m = s.n - 1; m >= 1; --m) {
        double b0 = 2 * u * b1 - b2 + s.a[m];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + s.a[0];
}

// Chebyshev series of dC_k/dp (derivative w.r.t. p, i.e. 2*d/du).
const std::vector<std::vector<double>>& rs_derivative_tables() {
    static std::vector<std::vector<double>> tables;
    static std::once_flag flag;
    std::call_once(flag, [] {
        tables.resize(detail::kMaxRsCorrection + 1);
        for (int k = 0; k <= detail::kMaxRsCorrection; ++k) {
            const auto& s = detail::rs_correction_series(k);
            std::vector<double> d(std::max(1, s.n - 1), 0.0);
            // b_{m} from a_{m+1}: b_{n-2} = 2(n-1)a_{n-1}, b_{m-1} = b_{m+1} + 2m a_m
            std::vector<double> b(s.n + 1, 0.0);
            for (int m = s.n - 1; m >= 1; --m) b[m - 1] = b[m + 1] + 2 * m * s.a[m];
            b[0] *= 0.5;
            for (int m = 0; m + 1 < s.n; ++m) d[m] = 2 * b[m];  // d/dp = 2 d/du
            tables[k] = std::move(d);
        }
    });
    return tables;
}

double clenshaw(const std::vector<double>& a, double u) {
    double b1 = 0, b2 = 0;
    for (std::size_t m = a.size() - 1; m >= 1; --m) {
        double b0 = 2 * u * b1 - b2 + a[m];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + a[0];
}

int clamp_depth(const EvaluatorConfig& cfg) {
    if (cfg.rs_correction_terms < 0 || cfg.rs_correction_terms > detail::kMaxRsCorrection)
        throw std::domain_error("rs_correction_terms out of range");
    return cfg.rs_correction_terms;
}

}  // namespace

void EvaluatorConfig::validate() const {
    if (rs_correction_terms < 0 || rs_correction_terms > detail::kMaxRsCorrection)
        throw std::domain_error("rs_correction_terms out of range");
    if (!(stirling_threshold > kTwoPi))
        throw std::domain_error("stirling_threshold must exceed 2*pi");
    if (!(oracle_tolerance > 0)) throw std::domain_error("oracle_tolerance must be positive");
}

double theta(double t) {
    if (!(t > 0)) throw std::domain_error("theta: t must be positive");
    double it2 = 1.0 / (t * t);
    double tail = (1.0 / 48 + (7.0 / 5760 + (31.0 / 80640 + 127.0 / 430080 * it2) * it2) * it2) / t;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8 + tail;
}

double theta_derivative(double t) {
    if (!(t > 0)) throw std::domain_error("theta_derivative: t must be positive");
    double it2 = 1.0 / (t * t);
    double tail =
        -(1.0 / 48 + (21.0 / 5760 + (155.0 / 80640 + 889.0 / 430080 * it2) * it2) * it2) * it2;
    return 0.5 * std::log(t / kTwoPi) + tail;
}

namespace detail {

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() <= 0) throw std::domain_error("log_gamma: Re z must be positive");
    std::complex<double> shift = 0;
    while (std::abs(z) < 32) {
        shift += std::log(z);
        z += 1.0;
    }
    std::complex<double> r = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
    std::complex<double> zpow = z;
    std::complex<double> z2 = z * z;
    for (int k = 0; k < 8; ++k) {
        r += kBernoulli2k[k] / (static_cast<double>((2 * k + 1) * (2 * k + 2)) * zpow);
        zpow *= z2;
    }
    return r - shift;
}

}  // namespace detail

double theta_reference(double t) {
    if (!(t > 0)) throw std::domain_error("theta_reference: t must be positive");
    return detail::log_gamma({0.25, 0.5 * t}).imag() - 0.5 * t * kLogPi;
}

double riemann_siegel_z(double t, const EvaluatorConfig& cfg) {
    if (!(t >= 10)) throw std::domain_error("riemann_siegel_z: requires t >= 10");
    int depth = clamp_depth(cfg);
    const auto& logs = log_table();

    double q = std::sqrt(t / kTwoPi);
    int N = static_cast<int>(q);
    double p = q - N;
    double th = theta(t);

    double s = 0;
    for (int n = N; n >= 1; --n) s += std::cos(th - t * logs[n]) / std::sqrt(double(n));
    s *= 2;

    double u = 2 * p - 1;
    double x = 1.0 / q;
    double corr = 0;
    for (int k = depth; k >= 0; --k) corr = corr * x + clenshaw(detail::rs_correction_series(k), u);
    corr *= (N % 2 == 1 ? 1.0 : -1.0) / std::sqrt(q);
    return s + corr;
}

double zeta_oracle(double t) {
    if (!(t >= 0.1 && t <= 1e5)) throw std::domain_error("zeta_oracle: requires 0.1 <= t <= 1e5");
    const std::complex<double> s{0.5, t};
    const int N = std::max(32, static_cast<int>(std::ceil(1.3 * t)));

    std::complex<double> sum = 0;
    for (int n = 1; n < N; ++n) {
        double ln = std::log(static_cast<double>(n));
        sum += std::polar(std::exp(-0.5 * ln), -t * ln);
    }
    double lnN = std::log(static_cast<double>(N));
    std::complex<double> Ns = std::polar(std::exp(-0.5 * lnN), -t * lnN);  // N^{-s}
    sum += Ns * static_cast<double>(N) / (s - 1.0);                        // N^{1-s}/(s-1)
    sum += 0.5 * Ns;

    // Euler-Maclaurin tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    std::complex<double> rising = s;              // accumulates the rising product
    std::complex<double> npow = Ns / double(N);   // N^{-s-1}
    double fact = 2;                              // (2k)!
    for (int k = 1; k <= 12; ++k) {
        std::complex<double> term = kBernoulli2k[k - 1] / fact * rising * npow;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        npow /= double(N) * double(N);
        fact *= (2 * k + 1) * (2 * k + 2);
    }

    return (std::polar(1.0, theta_reference(t)) * sum).real();
}

double log_abs_gamma_quarter_scaled(double t, const EvaluatorConfig& cfg) {
    if (!(t > 0)) throw std::domain_error("log_abs_gamma_quarter: t must be positive");
    if (t <= cfg.stirling_threshold)
        return kPi * t / 4 + detail::log_gamma({0.25, 0.5 * t}).real();

    // Direct Stirling with the -pi*t/4 part of -Im z * arg z cancelled
    // analytically: pi*t/4 + Re lnGamma(z) =
    //   (Re z - 1/2) ln|z| + Im z * atan(1/(2t)) - Re z + 1/2 ln 2pi + tail.
    const double re = 0.25, im = 0.5 * t;
    double log_abs_z = 0.5 * std::log(re * re + im * im);
    double r = (re - 0.5) * log_abs_z + im * std::atan(1.0 / (2 * t)) - re + kHalfLog2Pi;

    std::complex<double> z{re, im};
    std::complex<double> zpow = z;
    std::complex<double> z2 = z * z;
    double tail = 0;
    for (int k = 0; k < 8; ++k) {
        tail += (kBernoulli2k[k] / ((2 * k + 1) * (2 * k + 2)) / zpow).real();
        zpow *= z2;
    }
    return r + tail;
}

double log_abs_gamma_quarter(double t, const EvaluatorConfig& cfg) {
    return log_abs_gamma_quarter_scaled(t, cfg) - kPi * t / 4;
}

double hl_x(double t, const EvaluatorConfig& cfg) {
    if (!(t >= 10)) throw std::domain_error("hl_x: requires t >= 10");
    double expo = log_abs_gamma_quarter_scaled(t, cfg) + 0.25 * std::log(t) -
                  std::log(2.0) - 0.25 * kLogPi;
    return std::exp(expo) * riemann_siegel_z(t, cfg);
}

double log_abs_xi(double t, const EvaluatorConfig& cfg) {
    if (!(t >= 10)) throw std::domain_error("xi_from_z: requires t >= 10");
    double z = riemann_siegel_z(t, cfg);
    return std::log(std::abs(z)) + std::log(0.25 + t * t) +
           (log_abs_gamma_quarter_scaled(t, cfg) - kPi * t / 4) - std::log(2.0) - 0.25 * kLogPi;
}

double xi_from_z(double t, const EvaluatorConfig& cfg) {
    if (!(t >= 10)) throw std::domain_error("xi_from_z: requires t >= 10");
    double z = riemann_siegel_z(t, cfg);
    if (z == 0) return 0;
    double mag = std::exp(std::log(std::abs(z)) + std::log(0.25 + t * t) +
                          log_abs_gamma_quarter(t, cfg) - std::log(2.0) - 0.25 * kLogPi);
    return z > 0 ? -mag : mag;  // Xi and Z have opposite signs
}

double z_prime(double t, const EvaluatorConfig& cfg) {
    if (!(t >= 10)) throw std::domain_error("z_prime: requires t >= 10");
    int depth = clamp_depth(cfg);
    const auto& logs = log_table();

    double q = std::sqrt(t / kTwoPi);
    int N = static_cast<int>(q);
    double p = q - N;
    double th = theta(t);
    double thp = theta_derivative(t);  // = ln P0 + O(1/t^2)

    double s = 0;
    for (int n = N; n >= 1; --n)
        s += (thp - logs[n]) * std::sin(th - t * logs[n]) / std::sqrt(double(n));
    s *= -2;

    // Analytic derivative of the correction block.
    double u = 2 * p - 1;
    double qp = q / (2 * t);  // dq/dt = dp/dt
    const auto& dtabs = rs_derivative_tables();
    double corr = 0;
    double qpow = std::sqrt(q);  // q^{k+1/2}
    for (int k = 0; k <= depth; ++k) {
        double ck = clenshaw(detail::rs_correction_series(k), u);
        double dck = clenshaw(dtabs[k], u);
        corr += qp / qpow * (dck - (k + 0.5) * ck / q);
        qpow *= q;
    }
    corr *= (N % 2 == 1 ? 1.0 : -1.0);
    return s + corr;
}

CriticalLineValue critical_line_value(double t, const EvaluatorConfig& cfg) {
    CriticalLineValue v;
    v.t = t;
    v.z = riemann_siegel_z(t, cfg);
    v.theta = theta(t);
    v.x_hl = hl_x(t, cfg);
    v.log_abs_gamma = log_abs_gamma_quarter(t, cfg);
    return v;
}

TrigSumReport trig_sum(double a, double b, double t, double delta) {
    if (!(a > 0 && a <= b && b <= 2 * a))
        throw std::domain_error("trig_sum: requires 0 < a <= b <= 2a");
    if (!(b <= std::sqrt(t / kTwoPi)))
        throw std::domain_error("trig_sum: requires b <= sqrt(t/2pi)");
    TrigSumReport r;
    r.delta = delta;
    std::int64_t lo = static_cast<std::int64_t>(std::ceil(a));
    for (std::int64_t n = lo; n < b; ++n) {
        r.sum += std::polar(1.0, t * std::log(static_cast<double>(n)));
        ++r.terms;
    }
    r.magnitude = std::abs(r.sum);
    r.normalized = r.magnitude / (std::sqrt(a) * std::pow(t, delta));
    return r;
}

double z_wavelength(double t) {
    return kTwoPi / std::max(theta_derivative(t), 0.5);
}

}  // namespace zll
