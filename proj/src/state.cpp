#include "twofluid/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace twofluid {

PrimitiveState make_primitive(const PressureLaw& law, double rho, const Vec& u,
                              double s) {
    PrimitiveState prim;
    prim.rho = rho;
    prim.u = u;
    prim.s = s;
    prim.p = pressure_rho_s(law, rho, s);
    return prim;
}

PrimitiveState to_primitive(const PressureLaw& law, const ConservativeState& w) {
    DomainReport report = validate_masses(law, w.m, w.n);
    if (!report.valid) throw DomainError(report, "to_primitive");

    PrimitiveState prim;
    prim.s = w.m / w.n;
    prim.rho = density_of(law.model(), w.m, w.n);
    prim.u = (1.0 / prim.rho) * w.q;
    prim.p = pressure_rho_s(law, prim.rho, prim.s);
    return prim;
}

namespace {

constexpr int kIterationCap = 200;
constexpr double kResidualTol = 1e-13;

double rho_upper_limit(const PressureLaw& law) {
    if (law.kind() == LawKind::TwoPhaseLiquidFraction)
        return law.rho_l() * (1.0 - 1e-12);
    return std::numeric_limits<double>::infinity();
}

bool newton_polish(const PressureLaw& law, double p_target, double s, double lo,
                   double hi, double& rho, int& budget) {
    while (budget-- > 0) {
        const double residual = pressure_rho_s(law, rho, s) - p_target;
        if (std::abs(residual) <= kResidualTol * std::max(std::abs(p_target), 1e-300))
            return true;
        const double slope = dpressure_drho(law, rho, s);
        double next = rho - residual / slope;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (residual > 0.0) hi = rho; else lo = rho;
        rho = next;
    }
    return false;
}

}  // namespace

double density_from_pressure(const PressureLaw& law, double p_target, double s,
                             double initial_guess) {
    if (law.model() == ModelKind::LiquidGas ? !(s > 0.0) : !(s >= 0.0))
        throw DomainError(DomainReport::bad(DomainReason::NonpositiveMass),
                          "density_from_pressure");
    if (!(p_target > 0.0))
        throw NoBracketError("density_from_pressure: target pressure must be positive");

    const double rho_cap = rho_upper_limit(law);

    // Warm start: Newton from the caller's guess, for repeated inversions on
    // slowly varying fields.
    if (initial_guess > 0.0 && initial_guess < rho_cap) {
        double rho = initial_guess;
        int budget = 40;
        if (newton_polish(law, p_target, s, 0.0, rho_cap, rho, budget) && rho > 0.0)
            return rho;
    }

    double lo = 1e-12;
    if (lo >= rho_cap) lo = rho_cap * 0.5;
    if (pressure_rho_s(law, lo, s) >= p_target)
        throw NoBracketError("density_from_pressure: target pressure below attainable range");

    double hi = std::min(1.0, rho_cap * 0.5);
    int iterations = 0;
    while (pressure_rho_s(law, hi, s) <= p_target) {
        if (++iterations > kIterationCap)
            throw NoBracketError("density_from_pressure: bracket expansion failed");
        const double next = hi * 2.0;
        if (next >= rho_cap) {
            hi = rho_cap;
            if (pressure_rho_s(law, hi, s) <= p_target)
                throw NoBracketError(
                    "density_from_pressure: target pressure above attainable range");
            break;
        }
        hi = next;
    }

    // Bracket invariant: P(lo) < p_target < P(hi).
    iterations = 0;
    while (hi - lo > 1e-8 * hi) {
        if (++iterations > kIterationCap)
            throw NonConvergenceError("density_from_pressure: bisection cap reached");
        const double mid = 0.5 * (lo + hi);
        if (pressure_rho_s(law, mid, s) < p_target) lo = mid; else hi = mid;
    }

    double rho = 0.5 * (lo + hi);
    int budget = kIterationCap;
    if (!newton_polish(law, p_target, s, lo, hi, rho, budget))
        throw NonConvergenceError("density_from_pressure: Newton polish cap reached");
    return rho;
}

ConservativeState to_conservative(const PressureLaw& law, const PrimitiveState& prim) {
    const double rho = density_from_pressure(law, prim.p, prim.s, prim.rho);

    ConservativeState w;
    if (law.model() == ModelKind::LiquidGas) {
        w.n = rho;
        w.m = prim.s * rho;
    } else {
        w.n = rho / (1.0 + prim.s);
        w.m = rho * prim.s / (1.0 + prim.s);
    }
    w.q = rho * prim.u;
    return w;
}

}  // namespace twofluid
