#include "twofluid/vortex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twofluid {

const char* to_string(SheetVerdict v) {
    switch (v) {
        case SheetVerdict::Stable: return "Stable";
        case SheetVerdict::Excluded: return "Excluded";
        case SheetVerdict::NotInProvenRegion: return "NotInProvenRegion";
    }
    return "unknown";
}

std::pair<double, double> vortex_sheet_residual(const PressureLaw& law,
                                                const PrimitiveState& minus,
                                                const PrimitiveState& plus,
                                                const FrontGeometry& geometry) {
    if (minus.u.dim != plus.u.dim)
        throw std::invalid_argument(
            "vortex_sheet_residual: side states have different dimensions");
    DomainReport report = validate_rho_s(law, minus.rho, minus.s);
    if (!report.valid) throw DomainError(report, "vortex_sheet_residual minus");
    report = validate_rho_s(law, plus.rho, plus.s);
    if (!report.valid) throw DomainError(report, "vortex_sheet_residual plus");

    const int d = minus.u.dim;
    const double un_minus = dot(minus.u, geometry.normal(d));
    const double un_plus = dot(plus.u, geometry.normal(d));
    const double kinematic = std::max(std::abs(un_plus - geometry.phi_t),
                                      std::abs(un_minus - geometry.phi_t));
    return {kinematic, std::abs(plus.p - minus.p)};
}

VortexSheetAssessment supersonic_condition(const PressureLaw& law,
                                           const PrimitiveState& minus,
                                           const PrimitiveState& plus,
                                           double equality_tolerance) {
    if (minus.u.dim < 2 || plus.u.dim < 2)
        throw std::invalid_argument("supersonic_condition: states must be 2D");

    VortexSheetAssessment out;
    out.c_minus = sound_speed(law, minus.rho, minus.s);
    out.c_plus = sound_speed(law, plus.rho, plus.s);
    out.jump_u2 = std::abs(plus.u[1] - minus.u[1]);
    out.t1 = std::pow(std::cbrt(out.c_plus * out.c_plus) +
                          std::cbrt(out.c_minus * out.c_minus),
                      1.5);
    out.t2 = std::sqrt(2.0) * (out.c_plus + out.c_minus);

    const double tol =
        equality_tolerance >= 0.0 ? equality_tolerance : 1e-9 * out.t2;
    if (std::abs(out.jump_u2 - out.t2) <= tol)
        out.verdict = SheetVerdict::Excluded;
    else if (out.jump_u2 > out.t1)
        out.verdict = SheetVerdict::Stable;
    else
        out.verdict = SheetVerdict::NotInProvenRegion;
    return out;
}

std::pair<double, double> sound_speeds_mn(const PressureLaw& law, double m_minus,
                                          double n_minus, double m_plus,
                                          double n_plus) {
    if (law.kind() != LawKind::TwoPhasePolytropic)
        throw std::invalid_argument(
            "sound_speeds_mn: closed form holds for the polytropic two-phase law");
    DomainReport report = validate_masses(law, m_minus, n_minus);
    if (!report.valid) throw DomainError(report, "sound_speeds_mn minus");
    report = validate_masses(law, m_plus, n_plus);
    if (!report.valid) throw DomainError(report, "sound_speeds_mn plus");

    const double g = law.gamma();
    const double c_minus =
        std::sqrt(g * (g - 1.0) * std::pow(m_minus + n_minus, g) / n_minus);
    const double c_plus =
        std::sqrt(g * (g - 1.0) * std::pow(m_plus + n_plus, g) / n_plus);
    return {c_minus, c_plus};
}

}  // namespace twofluid
