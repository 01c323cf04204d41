#include "twofluid/energy.hpp"

#include <algorithm>
#include <cmath>

namespace twofluid {

double EntropySolution::x_minus(int i) const {
    return -dx * (cells - i - 0.5);
}

double EntropySolution::x_plus(int i) const { return dx * (i + 0.5); }

namespace {

double cell_sum_sq(const std::vector<double>& v, double dx) {
    double sum = 0.0;
    for (double s : v) sum += s * s;
    return sum * dx;
}

}  // namespace

EntropySolution solve_entropy_perturbation(const LinearizedShockProblem& prob,
                                           int cells, double cfl) {
    if (!(prob.u_hat_minus > 0.0) || !(prob.u_hat_plus > 0.0))
        throw ConfigError(
            "solve_entropy_perturbation: frozen velocities must be positive, "
            "otherwise the jump condition overdetermines the outflow side");
    if (cells < 1) throw ConfigError("solve_entropy_perturbation: cells must be >= 1");
    if (!(cfl > 0.0) || cfl > 1.0)
        throw ConfigError("solve_entropy_perturbation: cfl must be in (0, 1]");
    if (!(prob.t_final > 0.0) || !(prob.half_line_length > 0.0))
        throw ConfigError("solve_entropy_perturbation: t_final and L must be positive");

    EntropySolution sol;
    sol.cells = cells;
    sol.dx = prob.half_line_length / cells;
    const double u_max = std::max(prob.u_hat_minus, prob.u_hat_plus);
    sol.steps = std::max(1, static_cast<int>(std::ceil(prob.t_final * u_max /
                                                       (cfl * sol.dx) - 1e-12)));
    sol.dt = prob.t_final / sol.steps;

    sol.minus.resize(cells);
    sol.plus.resize(cells);
    for (int i = 0; i < cells; ++i) {
        sol.minus[i] = prob.s0_minus ? prob.s0_minus(sol.x_minus(i)) : 0.0;
        sol.plus[i] = prob.s0_plus ? prob.s0_plus(sol.x_plus(i)) : 0.0;
    }
    sol.initial_sq_minus = cell_sum_sq(sol.minus, sol.dx);
    sol.initial_sq_plus = cell_sum_sq(sol.plus, sol.dx);

    const double nu_minus = prob.u_hat_minus * sol.dt / sol.dx;
    const double nu_plus = prob.u_hat_plus * sol.dt / sol.dx;
    const double jump_u = prob.u_hat_plus - prob.u_hat_minus;

    std::vector<double> next_minus(cells), next_plus(cells);
    double boundary_acc = 0.0;
    double source_acc = 0.0;

    auto record_level = [&](double t) {
        sol.times.push_back(t);
        sol.energy.push_back(cell_sum_sq(sol.minus, sol.dx) +
                             cell_sum_sq(sol.plus, sol.dx));
        const double trace = sol.minus[cells - 1];
        sol.trace_minus.push_back(trace);
        sol.trace_plus.push_back(trace + (prob.g ? prob.g(t) : 0.0));
        sol.boundary_integral.push_back(boundary_acc);
        sol.source_integral.push_back(source_acc);
    };

    for (int k = 0; k < sol.steps; ++k) {
        const double t = k * sol.dt;
        record_level(t);

        const double g_now = prob.g ? prob.g(t) : 0.0;
        const double trace = sol.minus[cells - 1];
        const double inflow = trace + g_now;

        boundary_acc += sol.dt * (jump_u * trace * trace +
                                  2.0 * prob.u_hat_plus * trace * g_now +
                                  prob.u_hat_plus * g_now * g_now);

        sol.spacetime_sq_minus += sol.dt * cell_sum_sq(sol.minus, sol.dx);
        sol.spacetime_sq_plus += sol.dt * cell_sum_sq(sol.plus, sol.dx);
        sol.trace_sq_minus += sol.dt * trace * trace;
        sol.trace_sq_plus += sol.dt * inflow * inflow;
        sol.jump_sq += sol.dt * g_now * g_now;

        double source_step = 0.0;
        for (int i = 0; i < cells; ++i) {
            const double fm = prob.f_minus ? prob.f_minus(t, sol.x_minus(i)) : 0.0;
            const double fp = prob.f_plus ? prob.f_plus(t, sol.x_plus(i)) : 0.0;
            source_step += fm * sol.minus[i] + fp * sol.plus[i];
            sol.source_sq_minus += sol.dt * fm * fm * sol.dx;
            sol.source_sq_plus += sol.dt * fp * fp * sol.dx;

            const double upwind_minus = i == 0 ? 0.0 : sol.minus[i - 1];
            next_minus[i] =
                sol.minus[i] - nu_minus * (sol.minus[i] - upwind_minus) + sol.dt * fm;
            const double upwind_plus = i == 0 ? inflow : sol.plus[i - 1];
            next_plus[i] =
                sol.plus[i] - nu_plus * (sol.plus[i] - upwind_plus) + sol.dt * fp;
        }
        source_acc += 2.0 * sol.dt * source_step * sol.dx;

        sol.minus.swap(next_minus);
        sol.plus.swap(next_plus);
    }
    record_level(prob.t_final);
    return sol;
}

double energy_identity_residual(const LinearizedShockProblem&,
                                const EntropySolution& solution) {
    return std::abs(solution.energy.back() - solution.boundary_integral.back() -
                    solution.energy.front() - solution.source_integral.back());
}

AprioriReport apriori_estimate_check(const LinearizedShockProblem& prob,
                                     const EntropySolution& solution) {
    if (!(prob.u_hat_plus - prob.u_hat_minus < 0.0))
        throw ConfigError(
            "apriori_estimate_check: requires the compressive ordering "
            "u_hat_minus > u_hat_plus");

    AprioriReport report;
    report.lhs = std::sqrt(solution.spacetime_sq_minus) +
                 std::sqrt(solution.spacetime_sq_plus) +
                 std::sqrt(solution.trace_sq_minus) +
                 std::sqrt(solution.trace_sq_plus);
    report.rhs = std::sqrt(solution.initial_sq_minus) +
                 std::sqrt(solution.initial_sq_plus) +
                 std::sqrt(solution.source_sq_minus) +
                 std::sqrt(solution.source_sq_plus) + std::sqrt(solution.jump_sq);
    report.ratio = report.rhs > 0.0 ? report.lhs / report.rhs : 0.0;
    return report;
}

}  // namespace twofluid
