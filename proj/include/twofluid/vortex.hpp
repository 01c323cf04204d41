#pragma once

#include <utility>

#include "twofluid/rankine_hugoniot.hpp"
#include "twofluid/state.hpp"

namespace twofluid {

/// Stability verdict for a 2D vortex sheet. Stability is proven above the
/// threshold t1 away from the exclusion line t2; below t1 the theory is
/// silent, so the verdict does not claim instability there.
enum class SheetVerdict { Stable, Excluded, NotInProvenRegion };

const char* to_string(SheetVerdict v);

struct VortexSheetAssessment {
    SheetVerdict verdict = SheetVerdict::NotInProvenRegion;
    double t1 = 0.0;       // (c_+^{2/3} + c_-^{2/3})^{3/2}
    double t2 = 0.0;       // sqrt(2) (c_+ + c_-)
    double jump_u2 = 0.0;  // |u2_plus - u2_minus|
    double c_plus = 0.0;
    double c_minus = 0.0;
};

/// Residual pair of the vortex-sheet boundary conditions:
/// (max |u_N+- - phi_t|, |P+ - P-|).
std::pair<double, double> vortex_sheet_residual(const PressureLaw& law,
                                                const PrimitiveState& minus,
                                                const PrimitiveState& plus,
                                                const FrontGeometry& geometry);

/// Evaluates the "supersonic" structural-stability condition for a 2D
/// tangential jump. The jump [u2] enters in absolute value, making the
/// verdict invariant under swapping the side labels. A negative
/// equality_tolerance selects the default 1e-9 * t2.
VortexSheetAssessment supersonic_condition(const PressureLaw& law,
                                           const PrimitiveState& minus,
                                           const PrimitiveState& plus,
                                           double equality_tolerance = -1.0);

/// Sound speeds on both sides in the original mass variables, for the
/// polytropic two-phase law only: c(m, n) = sqrt(gamma (gamma-1) (m+n)^gamma / n).
std::pair<double, double> sound_speeds_mn(const PressureLaw& law, double m_minus,
                                          double n_minus, double m_plus,
                                          double n_plus);

}  // namespace twofluid
