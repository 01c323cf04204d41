#pragma once

#include <vector>

#include "twofluid/state.hpp"

namespace twofluid {

/// Planar or tilted front x_1 = phi(t, x'). N = (1, -phi_x2, -phi_x3) is the
/// (unnormalized) front normal, tau_1/tau_2 span the tangent plane.
struct FrontGeometry {
    double phi_t = 0.0;
    double phi_x2 = 0.0;
    double phi_x3 = 0.0;

    Vec normal(int dim) const {
        Vec n = Vec::zero(dim);
        n[0] = 1.0;
        if (dim >= 2) n[1] = -phi_x2;
        if (dim >= 3) n[2] = -phi_x3;
        return n;
    }
    Vec tangent1(int dim) const {
        Vec t = Vec::zero(dim);
        t[0] = phi_x2;
        if (dim >= 2) t[1] = 1.0;
        return t;
    }
    Vec tangent2(int dim) const {
        Vec t = Vec::zero(dim);
        t[0] = phi_x3;
        if (dim >= 3) t[2] = 1.0;
        return t;
    }
    double normal_norm2(int dim) const {
        double n2 = 1.0;
        if (dim >= 2) n2 += phi_x2 * phi_x2;
        if (dim >= 3) n2 += phi_x3 * phi_x3;
        return n2;
    }
};

struct ShockClassification {
    bool is_shock = false;
    bool compressive = false;
    bool lax = false;
    double mach_minus = 0.0;
    double mach_plus = 0.0;
};

/// A discontinuity pairing the two side states with the front speed sigma,
/// the mass flux j through the front, and its classification.
struct ShockSolution {
    PrimitiveState minus;
    PrimitiveState plus;
    double sigma = 0.0;
    double j_flux = 0.0;
    FrontGeometry geometry;
    ShockClassification classification;
};

enum class FluxSign { Positive, Negative };

/// Jump-condition residuals in the model's native conserved variables:
/// mass balances for both densities, normal momentum, and one tangential
/// momentum component per extra dimension.
std::vector<double> rh_residual(const PressureLaw& law, const ShockSolution& shock);

/// Residuals of the reduced shock conditions: [S], [j], normal momentum,
/// and continuity of the tangential velocity.
std::vector<double> rh_residual_reduced(const PressureLaw& law,
                                        const ShockSolution& shock);

/// Constructs the planar shock joining a 1D-normal upstream state
/// (rho_minus, un_minus, s) to the downstream density rho_plus: S is
/// continuous across the front, j^2 = -[P]/[1/rho], the sign of j selects
/// the branch, and sigma = un_minus - j/rho_minus.
ShockSolution hugoniot_downstream(const PressureLaw& law, double rho_minus,
                                  double un_minus, double s, double rho_plus,
                                  FluxSign sign);

/// Mach numbers relative to the front, compressivity in the direction of
/// mass flux, and the Lax inequality (supersonic ahead, subsonic behind).
ShockClassification classify_shock(const PressureLaw& law, const ShockSolution& shock);

/// Piecewise-constant traveling wave: minus state where x_1 - sigma t is
/// left of the initial front position, plus state otherwise.
PrimitiveState exact_shock_solution(const ShockSolution& shock, const Vec& x, double t,
                                    double front_x0 = 0.0);

}  // namespace twofluid
