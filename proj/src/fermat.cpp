#include "zll/fermat.hpp"

#include <sstream>
#include <stdexcept>

namespace zll {

FermatRational fermat_rational(const mpz_class& x, const mpz_class& y, const mpz_class& z, int n) {
    if (x <= 0 || y <= 0 || z <= 0)
        throw std::invalid_argument("fermat_rational: x, y, z must be positive");
    if (n < 3) throw std::invalid_argument("fermat_rational: n must be >= 3");
    FermatRational r;
    r.x = x;
    r.y = y;
    r.z = z;
    r.n = n;
    mpz_class xn, yn, zn;
    mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(yn.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(zn.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n));
    r.value = mpq_class(xn + yn, zn);
    r.value.canonicalize();
    return r;
}

FermatProbeReport fermat_probe(const mpz_class& x, const mpz_class& y, const mpz_class& z, int n,
                               double a, double alpha, const std::vector<double>& rho_list,
                               const LadderModel& model, const EvaluatorConfig& cfg,
                               const QuadratureSpec& spec) {
    FermatRational rat = fermat_rational(x, y, z, n);
    FermatProbeReport report;
    report.exact_equal_one = rat.equals_one();
    report.rational_float = rat.to_double();

    for (double rho : rho_list) {
        FunctionalParams params;
        params.x = report.rational_float;
        params.a = a;
        params.alpha = alpha;
        params.rho = rho;
        report.trajectory.push_back({rho, functional_phi(params, model, cfg, spec)});
    }

    std::ostringstream verdict;
    verdict << "(" << x.get_str() << "^" << n << " + " << y.get_str() << "^" << n << ") / "
            << z.get_str() << "^" << n << " = " << rat.value.get_str() << " "
            << (report.exact_equal_one ? "==" : "!=") << " 1 (decided exactly); the triple "
            << (report.exact_equal_one ? "satisfies" : "violates")
            << " the degree-" << n << " equation.";
    report.verdict_text = verdict.str();
    return report;
}

}  // namespace zll
