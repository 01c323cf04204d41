#pragma once

#include <functional>
#include <vector>

#include "twofluid/errors.hpp"

namespace twofluid {

/// Linearized entropy-perturbation transport on two half-lines (-L, 0) and
/// (0, L), coupled through the jump [S] = g at x = 0. Both frozen normal
/// velocities are positive, so x = 0 is outflow for the minus side and
/// inflow for the plus side; compressive configurations additionally have
/// u_hat_minus > u_hat_plus.
struct LinearizedShockProblem {
    double u_hat_minus = 0.0;
    double u_hat_plus = 0.0;
    std::function<double(double, double)> f_minus;  // (t, x) interior source
    std::function<double(double, double)> f_plus;
    std::function<double(double)> g;         // boundary jump datum
    std::function<double(double)> s0_minus;  // initial data
    std::function<double(double)> s0_plus;
    double t_final = 0.0;
    double half_line_length = 0.0;
};

/// Discrete solution plus the running quadratures needed by the energy
/// identity and the a priori estimate. All integrals use cell sums in space
/// and the left-endpoint rule in time.
struct EntropySolution {
    int cells = 0;
    double dx = 0.0;
    double dt = 0.0;
    int steps = 0;

    std::vector<double> minus;  // final field on (-L, 0)
    std::vector<double> plus;   // final field on (0, L)

    std::vector<double> times;        // t_0 .. t_steps
    std::vector<double> energy;       // I(t_k)
    std::vector<double> trace_minus;  // S^-(t_k, 0)
    std::vector<double> trace_plus;   // inflow value S^-(t_k, 0) + g(t_k)
    std::vector<double> boundary_integral;  // cumulative boundary term
    std::vector<double> source_integral;    // cumulative 2 sum_pm int f S

    // Squared discrete norms for the a priori estimate.
    double spacetime_sq_minus = 0.0;  // ||S^-||^2 over time x space
    double spacetime_sq_plus = 0.0;
    double trace_sq_minus = 0.0;  // ||S^pm|_{x=0}||^2 over time
    double trace_sq_plus = 0.0;
    double initial_sq_minus = 0.0;  // ||S^pm(0)||^2
    double initial_sq_plus = 0.0;
    double source_sq_minus = 0.0;  // ||f^pm||^2 over time x space
    double source_sq_plus = 0.0;
    double jump_sq = 0.0;  // ||g||^2 over time

    double x_minus(int i) const;
    double x_plus(int i) const;
};

/// First-order upwind solve of the two coupled half-line transport
/// problems. Throws ConfigError unless both frozen velocities are positive.
EntropySolution solve_entropy_perturbation(const LinearizedShockProblem& prob,
                                           int cells, double cfl);

/// Defect of the discrete energy identity
/// I(T) - boundary term - I(0) - source term, in absolute value.
double energy_identity_residual(const LinearizedShockProblem& prob,
                                const EntropySolution& solution);

struct AprioriReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Trace-and-interior norm of the solution against the data norm. Requires
/// the compressive ordering u_hat_minus > u_hat_plus.
AprioriReport apriori_estimate_check(const LinearizedShockProblem& prob,
                                     const EntropySolution& solution);

}  // namespace twofluid
