#pragma once

#include <vector>

#include "zll/quadrature.hpp"

namespace zll {

// Constants and mode defining the ladder map phi1 and its inverse.
// phi1 is defined operationally as the solution y of F(y) = J(T), where
// F(y) = y ln y + (c - ln 2pi) y + c0_offset and J is the Hardy-Littlewood
// integral in j_mode.  Since J(y) = F(y) - (1-c) y in asymptotic mode, this
// makes the almost-linear-increment identity exact within the model.
struct LadderModel {
    double euler_c = kEulerC;
    double c0_offset = 0;
    JMode j_mode = JMode::asymptotic;
    double solver_rel_tol = 1e-12;

    void validate() const;
};

// F(y) of the ladder's defining equation.
double ladder_F(double y, const LadderModel& model);

// J(T) in the model's mode.
double ladder_J(double T, const LadderModel& model, const EvaluatorConfig& cfg,
                const QuadratureSpec& spec);

// phi1(T): unique y with F(y) = J(T).  Requires T >= 100.
double phi1(double T, const LadderModel& model, const EvaluatorConfig& cfg,
            const QuadratureSpec& spec);

// phi1^{-1}(G): unique Y with J(Y) = F(G).  Requires G >= 100.
double phi1_inverse(double G, const LadderModel& model, const EvaluatorConfig& cfg,
                    const QuadratureSpec& spec);

struct ReverseIterateChain {
    double base_T = 0;
    std::vector<double> iterates;  // [T, T1, ..., Tk], strictly increasing
    int k = 0;
};

// Reverse iterates T_r = phi1^{-1}(T_{r-1}), r = 1..k.  1 <= k <= 20.
ReverseIterateChain reverse_iterates(double T, int k, const LadderModel& model,
                                     const EvaluatorConfig& cfg, const QuadratureSpec& spec);

struct PartitionRow {
    int r = 0;
    double t_prev = 0;     // T_{r-1}
    double t_cur = 0;      // T_r
    double spacing = 0;    // T_r - T_{r-1}
    double delta_j = 0;    // integral of Z^2 over the segment (or J-difference)
    double target = 0;     // (1-c) T_{r-1}
    double ratio = 0;      // delta_j / target
};

struct PartitionReport {
    ReverseIterateChain chain;
    std::vector<PartitionRow> rows;
    std::vector<double> spacing_ratios;   // consecutive spacings
    std::vector<double> segment_ratios;   // consecutive segment integrals
};

// Per-segment diagnostics for the partition generated by the reverse
// iterates.  Quadrature mode integrates Z^2 over each segment directly.
PartitionReport partition_report(double T, int k, const LadderModel& model,
                                 const EvaluatorConfig& cfg, const QuadratureSpec& spec);

}  // namespace zll
