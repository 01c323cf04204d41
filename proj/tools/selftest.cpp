#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "twofluid/energy.hpp"
#include "twofluid/fvm.hpp"
#include "twofluid/hyperbolic.hpp"
#include "twofluid/rankine_hugoniot.hpp"
#include "twofluid/vortex.hpp"

namespace twofluid {

namespace {

bool eos_derivatives() {
    std::mt19937_64 rng(12001);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 200; ++k) {
            const auto [rho, s] = oracle::random_rho_s(law, rng);
            const double exact = dpressure_drho(law, rho, s);
            if (!(exact > 0.0)) return false;
            const double fd = oracle::fd_dpressure_drho(law, rho, s);
            if (std::abs(exact - fd) / exact > 1e-6) return false;
        }
    }
    return true;
}

bool eos_composition() {
    std::mt19937_64 rng(12002);
    std::uniform_real_distribution<double> unit(0.1, 4.0);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 200; ++k) {
            double m = unit(rng), n = unit(rng);
            if (law.kind() == LawKind::TwoPhaseLiquidFraction)
                n = 0.1 + 0.2 * n;  // keep n < rho_l
            const double direct = pressure_mn(law, m, n);
            const double rho = density_of(law.model(), m, n);
            const double via_rho_s = pressure_rho_s(law, rho, m / n);
            if (std::abs(direct - via_rho_s) > 1e-14 * std::abs(direct)) return false;
        }
    }
    return true;
}

bool state_roundtrip() {
    std::mt19937_64 rng(12003);
    std::uniform_real_distribution<double> vel(-3.0, 3.0);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 200; ++k) {
            const auto [rho, s] = oracle::random_rho_s(law, rng);
            const PrimitiveState prim =
                make_primitive(law, rho, Vec{3, {vel(rng), vel(rng), vel(rng)}}, s);
            const PrimitiveState back = to_primitive(law, to_conservative(law, prim));
            if (std::abs(back.rho - prim.rho) > 1e-12 * prim.rho) return false;
            if (std::abs(back.p - prim.p) > 1e-12 * prim.p) return false;
            if (std::abs(back.s - prim.s) > 1e-12 * std::max(prim.s, 1e-30))
                return false;
        }
    }
    return true;
}

bool characteristic_speed_oracle() {
    std::mt19937_64 rng(12004);
    std::uniform_real_distribution<double> vel(-3.0, 3.0);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 100; ++k) {
            const auto [rho, s] = oracle::random_rho_s(law, rng);
            const PrimitiveState prim =
                make_primitive(law, rho, Vec{3, {vel(rng), vel(rng), vel(rng)}}, s);
            const Vec xi{3, {vel(rng), vel(rng), vel(rng)}};
            if (norm(xi) < 0.1) continue;

            const SymbolMatrices msys = assemble_matrices(law, prim);
            if (!check_symmetric_hyperbolic(msys).ok) return false;

            SquareMatrix symbol;
            symbol.n = msys.a0.n;
            for (int i = 0; i < symbol.n; ++i)
                for (int j = 0; j < symbol.n; ++j)
                    symbol.at(i, j) = xi[0] * msys.a[0].at(i, j) +
                                      xi[1] * msys.a[1].at(i, j) +
                                      xi[2] * msys.a[2].at(i, j);
            const std::vector<double> expect = characteristic_speeds(law, prim, xi);
            const std::vector<double> got =
                oracle::pencil_eigenvalues(msys.a0, symbol);
            const double c = sound_speed(law, rho, s);
            const double scale =
                std::max(1.0, std::abs(dot(prim.u, xi)) + c * norm(xi));
            for (size_t i = 0; i < expect.size(); ++i)
                if (std::abs(expect[i] - got[i]) > 1e-10 * scale) return false;
        }
    }
    return true;
}

bool hugoniot_invariants() {
    std::mt19937_64 rng(12005);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 100; ++k) {
            const auto [rho_minus, s] = oracle::random_rho_s(law, rng);
            const double ratio = 1.0 + 2.0 * unit(rng);
            const FluxSign sign = unit(rng) < 0.5 ? FluxSign::Positive
                                                  : FluxSign::Negative;
            // Density rises in the direction of mass flux on either branch.
            double rho_plus = sign == FluxSign::Positive ? rho_minus * ratio
                                                         : rho_minus / ratio;
            if (law.kind() == LawKind::TwoPhaseLiquidFraction)
                rho_plus = std::min(rho_plus, 0.97 * law.rho_l());
            if (rho_plus == rho_minus) continue;
            const double un_minus = -2.0 + 4.0 * unit(rng);

            const ShockSolution shock =
                hugoniot_downstream(law, rho_minus, un_minus, s, rho_plus, sign);
            if (shock.plus.s != shock.minus.s) return false;

            const std::vector<double> residual = rh_residual(law, shock);
            const double scale =
                std::abs(shock.j_flux) *
                    std::max(std::abs(shock.minus.u[0]), std::abs(shock.plus.u[0])) +
                std::max(shock.minus.p, shock.plus.p);
            for (double r : residual)
                if (std::abs(r) > 1e-12 * scale) return false;

            if (!shock.classification.compressive) return false;
            if (!(shock.plus.u[0] - shock.minus.u[0] < 0.0)) return false;
            if (!shock.classification.lax) return false;
        }
    }
    return true;
}

bool vortex_invariants() {
    const PressureLaw law = PressureLaw::two_phase_polytropic(2.0);
    const PrimitiveState base = make_primitive(law, 1.0, Vec{2, {0.0, 0.0}}, 1.0);

    auto with_u2 = [&](double u2) {
        PrimitiveState prim = base;
        prim.u[1] = u2;
        return prim;
    };
    if (supersonic_condition(law, base, with_u2(9.0)).verdict !=
        SheetVerdict::Stable)
        return false;
    if (supersonic_condition(law, base, with_u2(8.0)).verdict !=
        SheetVerdict::Excluded)
        return false;
    if (supersonic_condition(law, base, with_u2(7.0)).verdict !=
        SheetVerdict::NotInProvenRegion)
        return false;

    std::mt19937_64 rng(12006);
    std::uniform_real_distribution<double> mass(0.1, 4.0);
    for (int k = 0; k < 200; ++k) {
        const double m_minus = mass(rng), n_minus = mass(rng);
        const double m_plus = mass(rng), n_plus = mass(rng);
        const auto [c_minus, c_plus] =
            sound_speeds_mn(law, m_minus, n_minus, m_plus, n_plus);
        const double via_minus = sound_speed(law, n_minus, m_minus / n_minus);
        const double via_plus = sound_speed(law, n_plus, m_plus / n_plus);
        if (std::abs(c_minus - via_minus) > 1e-13 * via_minus) return false;
        if (std::abs(c_plus - via_plus) > 1e-13 * via_plus) return false;
    }

    const VortexSheetAssessment eq = supersonic_condition(law, base, with_u2(3.0));
    return std::abs(eq.t1 - eq.t2) <= 1e-13 * eq.t2;
}

bool energy_identity() {
    LinearizedShockProblem prob;
    prob.u_hat_minus = 2.0;
    prob.u_hat_plus = 1.0;
    prob.g = [](double t) { return std::sin(t); };
    prob.t_final = 0.5;
    prob.half_line_length = 2.0;

    const EntropySolution coarse = solve_entropy_perturbation(prob, 100, 0.9);
    const EntropySolution fine = solve_entropy_perturbation(prob, 200, 0.9);
    const double r_coarse = energy_identity_residual(prob, coarse);
    const double r_fine = energy_identity_residual(prob, fine);
    if (!(r_fine < r_coarse)) return false;
    const double ratio = r_coarse / r_fine;
    if (ratio < 1.4 || ratio > 2.8) return false;

    // g = 0 with [u_hat] < 0: the boundary is dissipative.
    LinearizedShockProblem diss = prob;
    diss.g = nullptr;
    diss.s0_minus = [](double x) { return std::exp(-40.0 * (x + 1.0) * (x + 1.0)); };
    const EntropySolution sol = solve_entropy_perturbation(diss, 200, 0.9);
    for (size_t k = 1; k < sol.energy.size(); ++k)
        if (sol.energy[k] > sol.energy.front() * (1.0 + 1e-12)) return false;
    return true;
}

bool fvm_conservation_determinism() {
    fvm::SimulationConfig config;
    config.grid.dim = 1;
    config.grid.nx = 64;
    config.grid.x_min = 0.0;
    config.grid.x_max = 1.0;
    config.law = PressureLaw::two_phase_polytropic(2.0);
    config.boundary = fvm::Boundary::Periodic;
    config.cfl = 0.45;
    config.t_final = 0.05;
    fvm::SineInit init;
    init.amp_u1 = 0.01;
    config.initial = fvm::sine_initializer(config.grid, init, config.law.model());

    const fvm::RunResult serial = fvm::run(config, fvm::Exec::Serial);
    const fvm::RunResult parallel = fvm::run(config, fvm::Exec::Parallel);

    const fvm::Snapshot& a = serial.snapshots.back();
    const fvm::Snapshot& b = parallel.snapshots.back();
    for (size_t k = 0; k < a.m.size(); ++k) {
        if (a.m[k] != b.m[k] || a.n[k] != b.n[k] || a.q1[k] != b.q1[k]) return false;
    }

    const fvm::DiagnosticsRow& first = serial.diagnostics.front();
    const fvm::DiagnosticsRow& last = serial.diagnostics.back();
    if (std::abs(last.total_m - first.total_m) > 1e-12 * std::abs(first.total_m))
        return false;
    if (std::abs(last.total_n - first.total_n) > 1e-12 * std::abs(first.total_n))
        return false;
    return true;
}

}  // namespace

int run_selftest() {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"eos derivative vs finite difference", eos_derivatives},
        {"eos composition identity", eos_composition},
        {"state roundtrip", state_roundtrip},
        {"characteristic speeds vs dense eigensolver", characteristic_speed_oracle},
        {"hugoniot residuals and classification", hugoniot_invariants},
        {"vortex sheet thresholds", vortex_invariants},
        {"energy identity refinement", energy_identity},
        {"fvm conservation and determinism", fvm_conservation_determinism},
    };

    int failures = 0;
    for (const Check& check : checks) {
        bool ok = false;
        try {
            ok = check.fn();
        } catch (const std::exception& err) {
            std::printf("FAIL %-44s (%s)\n", check.name, err.what());
            ++failures;
            continue;
        }
        std::printf("%s %s\n", ok ? "ok  " : "FAIL", check.name);
        if (!ok) ++failures;
    }
    std::printf("%d/%zu groups passed\n",
                static_cast<int>(std::size(checks)) - failures, std::size(checks));
    return failures == 0 ? 0 : 1;
}

}  // namespace twofluid
