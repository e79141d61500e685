#include "zll/ladder.hpp"

#include <cmath>
#include <stdexcept>

#include "zll/roots.hpp"

namespace zll {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
}

void LadderModel::validate() const {
    if (std::abs(euler_c - kEulerC) > 1e-12)
        throw std::domain_error("LadderModel: euler_c is fixed to Euler's constant");
    if (!(solver_rel_tol > 0)) throw std::domain_error("LadderModel: solver_rel_tol must be positive");
}

double ladder_F(double y, const LadderModel& model) {
    return y * std::log(y) + (model.euler_c - kLog2Pi) * y + model.c0_offset;
}

double ladder_J(double T, const LadderModel& model, const EvaluatorConfig& cfg,
                const QuadratureSpec& spec) {
    return hardy_littlewood_J(T, model.j_mode, cfg, spec).value;
}

double phi1(double T, const LadderModel& model, const EvaluatorConfig& cfg,
            const QuadratureSpec& spec) {
    model.validate();
    if (!(T >= 100)) throw std::domain_error("phi1: requires T >= 100");
    double target = ladder_J(T, model, cfg, spec);
    double lag = 3 * (1 - model.euler_c) / std::log(T);
    double lo = T * (1 - lag);
    auto f = [&](double y) { return ladder_F(y, model) - target; };
    auto df = [&](double y) { return std::log(y) + 1 + model.euler_c - kLog2Pi; };
    return roots::solve_monotone(f, df, lo, T, model.solver_rel_tol);
}

double phi1_inverse(double G, const LadderModel& model, const EvaluatorConfig& cfg,
                    const QuadratureSpec& spec) {
    model.validate();
    if (!(G >= 100)) throw std::domain_error("phi1_inverse: requires G >= 100");
    double target = ladder_F(G, model);
    double hi = G * (1 + 3 * (1 - model.euler_c) / std::log(G));
    auto f = [&](double y) { return ladder_J(y, model, cfg, spec) - target; };
    if (model.j_mode == JMode::asymptotic) {
        auto df = [&](double y) { return std::log(y) + 2 * model.euler_c - kLog2Pi; };
        return roots::solve_monotone(f, df, G, hi, model.solver_rel_tol);
    }
    // Quadrature-mode J is evaluated from scratch per candidate (consistency
    // with phi1 requires J to be a deterministic function of its argument);
    // derivative-free solve keeps the evaluation count modest.
    return roots::solve_monotone(f, G, hi, model.solver_rel_tol);
}

ReverseIterateChain reverse_iterates(double T, int k, const LadderModel& model,
                                     const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    if (!(T >= 100)) throw std::domain_error("reverse_iterates: requires T >= 100");
    if (k < 1 || k > 20) throw std::domain_error("reverse_iterates: requires 1 <= k <= 20");
    ReverseIterateChain chain;
    chain.base_T = T;
    chain.k = k;
    chain.iterates.reserve(k + 1);
    chain.iterates.push_back(T);
    for (int r = 1; r <= k; ++r) {
        double next = phi1_inverse(chain.iterates.back(), model, cfg, spec);
        if (!(next > chain.iterates.back()))
            throw std::runtime_error("reverse_iterates: chain not strictly increasing");
        chain.iterates.push_back(next);
    }
    return chain;
}

PartitionReport partition_report(double T, int k, const LadderModel& model,
                                 const EvaluatorConfig& cfg, const QuadratureSpec& spec) {
    PartitionReport rep;
    rep.chain = reverse_iterates(T, k, model, cfg, spec);
    const auto& it = rep.chain.iterates;
    for (int r = 1; r <= k; ++r) {
        PartitionRow row;
        row.r = r;
        row.t_prev = it[r - 1];
        row.t_cur = it[r];
        row.spacing = it[r] - it[r - 1];
        if (model.j_mode == JMode::asymptotic) {
            row.delta_j = ladder_J(it[r], model, cfg, spec) - ladder_J(it[r - 1], model, cfg, spec);
        } else {
            auto z2 = [&cfg](double t) {
                double z = riemann_siegel_z(t, cfg);
                return z * z;
            };
            row.delta_j =
                integrate(z2, it[r - 1], it[r], [](double u) { return z_wavelength(u); }, spec)
                    .value;
        }
        row.target = (1 - model.euler_c) * it[r - 1];
        row.ratio = row.delta_j / row.target;
        rep.rows.push_back(row);
    }
    for (int r = 0; r + 1 < k; ++r) {
        rep.spacing_ratios.push_back(rep.rows[r + 1].spacing / rep.rows[r].spacing);
        rep.segment_ratios.push_back(rep.rows[r + 1].delta_j / rep.rows[r].delta_j);
    }
    return rep;
}

}  // namespace zll
