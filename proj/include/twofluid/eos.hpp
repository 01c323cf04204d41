#pragma once

#include <string>

#include "twofluid/errors.hpp"

namespace twofluid {

/// Which two-fluid system a pressure law belongs to. The liquid-gas system
/// carries the liquid mass n as its density (rho := n); the bi-fluid system
/// carries the total density (rho := m + n).
enum class ModelKind { LiquidGas, BiFluid };

const char* to_string(ModelKind k);

enum class LawKind {
    TwoPhasePolytropic,
    TwoPhaseLiquidFraction,
    TwoPhaseSonic,
    BiFluid,
};

/// One of the four equations of state, with its parameters. Immutable after
/// construction; parameter bounds are enforced by the factory functions.
///
/// In (m, n) variables:
///   two_phase_polytropic       P = (gamma-1) (m+n)^gamma
///   two_phase_liquid_fraction  P = C (m/(rho_l - n))^gamma
///   two_phase_sonic            P = C (-b + sqrt(b^2 + 4 k0 a0 m)),
///                              b = k0 - n - a0 m
///   bi_fluid                   P = m^alpha + A n^gamma
class PressureLaw {
public:
    static PressureLaw two_phase_polytropic(double gamma);
    static PressureLaw two_phase_liquid_fraction(double c_const, double gamma,
                                                 double rho_l);
    static PressureLaw two_phase_sonic(double c_const, double k0, double a0);
    static PressureLaw bi_fluid(double alpha, double gamma, double a_coef);

    LawKind kind() const { return kind_; }
    ModelKind model() const {
        return kind_ == LawKind::BiFluid ? ModelKind::BiFluid
                                         : ModelKind::LiquidGas;
    }

    double gamma() const { return gamma_; }
    double c_const() const { return c_const_; }
    double rho_l() const { return rho_l_; }
    double k0() const { return k0_; }
    double a0() const { return a0_; }
    double alpha() const { return alpha_; }
    double a_coef() const { return a_coef_; }

    /// Name used by the CLI and config files.
    std::string name() const;

private:
    PressureLaw() = default;

    LawKind kind_ = LawKind::TwoPhasePolytropic;
    double gamma_ = 0.0;
    double c_const_ = 0.0;
    double rho_l_ = 0.0;
    double k0_ = 0.0;
    double a0_ = 0.0;
    double alpha_ = 0.0;
    double a_coef_ = 0.0;
};

/// Admissibility of a mass pair for the law's model: liquid-gas needs
/// m > 0 and n > 0 (and n < rho_l for the liquid-fraction law), bi-fluid
/// needs m >= 0 and n > 0. Total function, never throws.
DomainReport validate_masses(const PressureLaw& law, double m, double n);

/// Same admissibility region expressed in (rho, S) coordinates.
DomainReport validate_rho_s(const PressureLaw& law, double rho, double s);

/// P(m, n) as printed for each law. Throws DomainError outside the region.
double pressure_mn(const PressureLaw& law, double m, double n);

/// P(rho, S), the recomputed pressure in density/entropy variables.
/// Agrees with pressure_mn through the change of variables to 1e-14 relative.
double pressure_rho_s(const PressureLaw& law, double rho, double s);

/// Analytic dP/drho at fixed S. Strictly positive on the valid domain.
double dpressure_drho(const PressureLaw& law, double rho, double s);

/// c = sqrt(dP/drho).
double sound_speed(const PressureLaw& law, double rho, double s);

struct ConvexityReport {
    double min_second_difference = 0.0;
    bool convex = false;
};

/// Samples a centered second difference of P(., S) over [rho_min, rho_max]
/// and reports the minimum together with a sign verdict. The probe step is
/// (rho_max - rho_min) / (10 * samples); the padded interval must stay
/// inside the law's domain.
ConvexityReport check_convexity(const PressureLaw& law, double s,
                                double rho_min, double rho_max, int samples);

}  // namespace twofluid
