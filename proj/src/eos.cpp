#include "twofluid/eos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twofluid {

const char* to_string(DomainReason r) {
    switch (r) {
        case DomainReason::Ok: return "ok";
        case DomainReason::NonpositiveMass: return "nonpositive gas/particle mass";
        case DomainReason::NonpositiveLiquidMass: return "nonpositive liquid/fluid mass";
        case DomainReason::DensityExceedsLiquidDensity: return "density reaches liquid density";
        case DomainReason::NonpositiveTotalDensity: return "nonpositive total density";
    }
    return "unknown";
}

const char* to_string(ModelKind k) {
    return k == ModelKind::LiquidGas ? "liquid_gas" : "bi_fluid";
}

PressureLaw PressureLaw::two_phase_polytropic(double gamma) {
    if (!(gamma > 1.0))
        throw std::invalid_argument("two_phase_polytropic: gamma must be > 1");
    PressureLaw law;
    law.kind_ = LawKind::TwoPhasePolytropic;
    law.gamma_ = gamma;
    return law;
}

PressureLaw PressureLaw::two_phase_liquid_fraction(double c_const, double gamma,
                                                   double rho_l) {
    if (!(c_const > 0.0))
        throw std::invalid_argument("two_phase_liquid_fraction: c_const must be > 0");
    if (!(gamma > 1.0))
        throw std::invalid_argument("two_phase_liquid_fraction: gamma must be > 1");
    if (!(rho_l > 0.0))
        throw std::invalid_argument("two_phase_liquid_fraction: rho_l must be > 0");
    PressureLaw law;
    law.kind_ = LawKind::TwoPhaseLiquidFraction;
    law.c_const_ = c_const;
    law.gamma_ = gamma;
    law.rho_l_ = rho_l;
    return law;
}

PressureLaw PressureLaw::two_phase_sonic(double c_const, double k0, double a0) {
    if (!(c_const > 0.0))
        throw std::invalid_argument("two_phase_sonic: c_const must be > 0");
    if (!(k0 > 0.0))
        throw std::invalid_argument("two_phase_sonic: k0 must be > 0");
    if (!(a0 > 0.0))
        throw std::invalid_argument("two_phase_sonic: a0 must be > 0");
    PressureLaw law;
    law.kind_ = LawKind::TwoPhaseSonic;
    law.c_const_ = c_const;
    law.k0_ = k0;
    law.a0_ = a0;
    return law;
}

PressureLaw PressureLaw::bi_fluid(double alpha, double gamma, double a_coef) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("bi_fluid: alpha must be >= 1");
    if (!(gamma >= 1.0))
        throw std::invalid_argument("bi_fluid: gamma must be >= 1");
    if (!(a_coef > 0.0))
        throw std::invalid_argument("bi_fluid: a_coef must be > 0");
    PressureLaw law;
    law.kind_ = LawKind::BiFluid;
    law.alpha_ = alpha;
    law.gamma_ = gamma;
    law.a_coef_ = a_coef;
    return law;
}

std::string PressureLaw::name() const {
    switch (kind_) {
        case LawKind::TwoPhasePolytropic: return "two_phase_polytropic";
        case LawKind::TwoPhaseLiquidFraction: return "two_phase_liquid_fraction";
        case LawKind::TwoPhaseSonic: return "two_phase_sonic";
        case LawKind::BiFluid: return "bi_fluid";
    }
    return "unknown";
}

DomainReport validate_masses(const PressureLaw& law, double m, double n) {
    if (law.model() == ModelKind::LiquidGas) {
        if (!(m > 0.0)) return DomainReport::bad(DomainReason::NonpositiveMass);
        if (!(n > 0.0)) return DomainReport::bad(DomainReason::NonpositiveLiquidMass);
        if (law.kind() == LawKind::TwoPhaseLiquidFraction && !(n < law.rho_l()))
            return DomainReport::bad(DomainReason::DensityExceedsLiquidDensity);
    } else {
        if (!(m >= 0.0)) return DomainReport::bad(DomainReason::NonpositiveMass);
        if (!(n > 0.0)) return DomainReport::bad(DomainReason::NonpositiveLiquidMass);
        if (!(m + n > 0.0))
            return DomainReport::bad(DomainReason::NonpositiveTotalDensity);
    }
    return DomainReport::ok();
}

DomainReport validate_rho_s(const PressureLaw& law, double rho, double s) {
    if (law.model() == ModelKind::LiquidGas) {
        // rho := n, s := m/n, so s <= 0 means m <= 0.
        if (!(s > 0.0)) return DomainReport::bad(DomainReason::NonpositiveMass);
        if (!(rho > 0.0)) return DomainReport::bad(DomainReason::NonpositiveLiquidMass);
        if (law.kind() == LawKind::TwoPhaseLiquidFraction && !(rho < law.rho_l()))
            return DomainReport::bad(DomainReason::DensityExceedsLiquidDensity);
    } else {
        if (!(s >= 0.0)) return DomainReport::bad(DomainReason::NonpositiveMass);
        if (!(rho > 0.0))
            return DomainReport::bad(DomainReason::NonpositiveTotalDensity);
    }
    return DomainReport::ok();
}

namespace {

void require_masses(const PressureLaw& law, double m, double n, const char* where) {
    DomainReport report = validate_masses(law, m, n);
    if (!report.valid) throw DomainError(report, where);
}

void require_rho_s(const PressureLaw& law, double rho, double s, const char* where) {
    DomainReport report = validate_rho_s(law, rho, s);
    if (!report.valid) throw DomainError(report, where);
}

}  // namespace

double pressure_mn(const PressureLaw& law, double m, double n) {
    require_masses(law, m, n, "pressure_mn");
    switch (law.kind()) {
        case LawKind::TwoPhasePolytropic:
            return (law.gamma() - 1.0) * std::pow(m + n, law.gamma());
        case LawKind::TwoPhaseLiquidFraction:
            return law.c_const() * std::pow(m / (law.rho_l() - n), law.gamma());
        case LawKind::TwoPhaseSonic: {
            const double b = law.k0() - n - law.a0() * m;
            const double c = 4.0 * law.k0() * law.a0() * m;
            return law.c_const() * (-b + std::sqrt(b * b + c));
        }
        case LawKind::BiFluid:
            return std::pow(m, law.alpha()) + law.a_coef() * std::pow(n, law.gamma());
    }
    return 0.0;
}

double pressure_rho_s(const PressureLaw& law, double rho, double s) {
    require_rho_s(law, rho, s, "pressure_rho_s");
    switch (law.kind()) {
        case LawKind::TwoPhasePolytropic:
            return (law.gamma() - 1.0) * std::pow(rho, law.gamma()) *
                   std::pow(s + 1.0, law.gamma());
        case LawKind::TwoPhaseLiquidFraction:
            return law.c_const() *
                   std::pow(rho * s / (law.rho_l() - rho), law.gamma());
        case LawKind::TwoPhaseSonic: {
            const double b = law.k0() - rho - law.a0() * rho * s;
            const double c = 4.0 * law.k0() * law.a0() * rho * s;
            return law.c_const() * (-b + std::sqrt(b * b + c));
        }
        case LawKind::BiFluid:
            return std::pow(rho * s / (s + 1.0), law.alpha()) +
                   law.a_coef() * std::pow(rho / (s + 1.0), law.gamma());
    }
    return 0.0;
}

double dpressure_drho(const PressureLaw& law, double rho, double s) {
    require_rho_s(law, rho, s, "dpressure_drho");
    switch (law.kind()) {
        case LawKind::TwoPhasePolytropic:
            // P_rho = gamma P / rho
            return law.gamma() * (law.gamma() - 1.0) *
                   std::pow(rho, law.gamma() - 1.0) *
                   std::pow(s + 1.0, law.gamma());
        case LawKind::TwoPhaseLiquidFraction:
            // Differentiating P = C (rho S / (rho_l - rho))^gamma carries an
            // extra factor S relative to the shorthand gamma rho_l C
            // (rho S)^(gamma-1) / (rho_l - rho)^(gamma+1); the finite
            // difference check arbitrates in favor of the factor.
            return law.gamma() * law.rho_l() * law.c_const() * s *
                   std::pow(rho * s, law.gamma() - 1.0) /
                   std::pow(law.rho_l() - rho, law.gamma() + 1.0);
        case LawKind::TwoPhaseSonic: {
            const double a0s = law.a0() * s;
            const double b = law.k0() - rho - rho * a0s;
            const double disc = std::sqrt(b * b + 4.0 * law.k0() * law.a0() * rho * s);
            return law.c_const() *
                   (1.0 + a0s +
                    (rho * (a0s + 1.0) * (a0s + 1.0) + law.k0() * (a0s - 1.0)) / disc);
        }
        case LawKind::BiFluid:
            return law.alpha() / rho * std::pow(rho * s / (s + 1.0), law.alpha()) +
                   law.gamma() * law.a_coef() / rho *
                       std::pow(rho / (s + 1.0), law.gamma());
    }
    return 0.0;
}

double sound_speed(const PressureLaw& law, double rho, double s) {
    return std::sqrt(dpressure_drho(law, rho, s));
}

ConvexityReport check_convexity(const PressureLaw& law, double s, double rho_min,
                                double rho_max, int samples) {
    if (samples < 1) throw std::invalid_argument("check_convexity: samples must be >= 1");
    if (!(rho_max > rho_min))
        throw std::invalid_argument("check_convexity: rho_max must exceed rho_min");
    const double h = (rho_max - rho_min) / (10.0 * samples);
    // The probes reach rho_min - h and rho_max + h.
    require_rho_s(law, rho_min - h, s, "check_convexity");
    require_rho_s(law, rho_max + h, s, "check_convexity");

    ConvexityReport report;
    report.min_second_difference = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double rho =
            samples == 1 ? 0.5 * (rho_min + rho_max)
                         : rho_min + (rho_max - rho_min) * i / (samples - 1.0);
        const double second =
            (pressure_rho_s(law, rho + h, s) - 2.0 * pressure_rho_s(law, rho, s) +
             pressure_rho_s(law, rho - h, s)) /
            (h * h);
        report.min_second_difference = std::min(report.min_second_difference, second);
    }
    report.convex = report.min_second_difference > 0.0;
    return report;
}

}  // namespace twofluid
