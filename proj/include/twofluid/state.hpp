#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "twofluid/eos.hpp"

namespace twofluid {

/// Small spatial vector, dimension 1..3 fixed per run.
struct Vec {
    int dim = 1;
    std::array<double, 3> c{0.0, 0.0, 0.0};

    Vec() = default;
    Vec(int d, std::initializer_list<double> init) : dim(d) {
        int i = 0;
        for (double v : init) {
            if (i == 3) break;
            c[i++] = v;
        }
    }
    static Vec zero(int d) { return Vec{d, {}}; }

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
};

inline double dot(const Vec& a, const Vec& b) {
    double r = 0.0;
    for (int i = 0; i < a.dim; ++i) r += a.c[i] * b.c[i];
    return r;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator*(double k, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r.c[i] *= k;
    return r;
}

/// Conserved quantities of either system: two mass densities and the
/// momentum (n u for liquid-gas, (m+n) u for bi-fluid).
struct ConservativeState {
    double m = 0.0;
    double n = 0.0;
    Vec q;
};

/// Symmetric-system variables (P, u, S) with the matching density cached.
struct PrimitiveState {
    double p = 0.0;
    Vec u;
    double s = 0.0;
    double rho = 0.0;
};

/// rho := n for the liquid-gas model, rho := m + n for the bi-fluid model.
inline double density_of(ModelKind model, double m, double n) {
    return model == ModelKind::LiquidGas ? n : m + n;
}

/// Builds a consistent primitive state from (rho, u, S), evaluating P.
PrimitiveState make_primitive(const PressureLaw& law, double rho, const Vec& u,
                              double s);

PrimitiveState to_primitive(const PressureLaw& law, const ConservativeState& w);

/// Inverts P = P(rho, S) for rho on the monotone branch: bisection to a
/// relative bracket width of 1e-8, then Newton polish to relative residual
/// 1e-13, iteration cap 200. A positive initial_guess enables a warm Newton
/// start before any bracketing.
double density_from_pressure(const PressureLaw& law, double p_target, double s,
                             double initial_guess = -1.0);

ConservativeState to_conservative(const PressureLaw& law, const PrimitiveState& prim);

}  // namespace twofluid
