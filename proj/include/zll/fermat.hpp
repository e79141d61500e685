#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "zll/functional.hpp"

namespace zll {

// Exact rational (x^n + y^n) / z^n for positive integers, n >= 3.
struct FermatRational {
    mpz_class x, y, z;
    int n = 3;
    mpq_class value;  // canonicalized; computed in exact integer arithmetic

    bool equals_one() const { return value == 1; }
    double to_double() const { return value.get_d(); }
};

// Throws std::invalid_argument for n < 3 or nonpositive inputs.
FermatRational fermat_rational(const mpz_class& x, const mpz_class& y,
                               const mpz_class& z, int n);

struct FermatProbeReport {
    bool exact_equal_one = false;    // decided exactly, before any float step
    double rational_float = 0;
    std::vector<std::pair<double, PhiResult>> trajectory;  // (rho, Phi)
    std::string verdict_text;
};

// Evaluates the finite-rho functional at x = (x^n + y^n)/z^n for each rho in
// the ascending rho_list.  The exact verdict is decided first; the finite-rho
// trajectory illustrates the limit statement, it does not decide it.
FermatProbeReport fermat_probe(const mpz_class& x, const mpz_class& y, const mpz_class& z,
                               int n, double a, double alpha,
                               const std::vector<double>& rho_list, const LadderModel& model,
                               const EvaluatorConfig& cfg, const QuadratureSpec& spec);

}  // namespace zll
