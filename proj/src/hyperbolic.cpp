#include "twofluid/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twofluid {

SymbolMatrices assemble_matrices(const PressureLaw& law, const PrimitiveState& prim) {
    const double p_rho = dpressure_drho(law, prim.rho, prim.s);
    const int d = prim.u.dim;
    const int n = d + 2;

    SymbolMatrices msys;
    msys.dim = d;
    msys.a0.n = n;
    msys.a0.at(0, 0) = 1.0 / (prim.rho * p_rho);
    for (int k = 1; k <= d; ++k) msys.a0.at(k, k) = prim.rho;
    msys.a0.at(n - 1, n - 1) = 1.0;

    for (int j = 0; j < d; ++j) {
        SquareMatrix& aj = msys.a[j];
        aj.n = n;
        const double uj = prim.u[j];
        for (int k = 0; k < n; ++k) aj.at(k, k) = uj * msys.a0.at(k, k);
        aj.at(0, j + 1) = 1.0;
        aj.at(j + 1, 0) = 1.0;
    }
    return msys;
}

HyperbolicityCheck check_symmetric_hyperbolic(const SymbolMatrices& msys) {
    const int n = msys.a0.n;
    for (int i = 0; i < n; ++i) {
        if (!(msys.a0.at(i, i) > 0.0)) {
            return {false, "a0[" + std::to_string(i) + "," + std::to_string(i) +
                               "] not positive"};
        }
    }
    for (int j = 0; j < msys.dim; ++j) {
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                if (msys.a[j].at(i, k) != msys.a[j].at(k, i)) {
                    return {false, "a" + std::to_string(j + 1) + "[" +
                                       std::to_string(i) + "," + std::to_string(k) +
                                       "] breaks symmetry"};
                }
            }
        }
    }
    return {true, ""};
}

std::vector<double> characteristic_speeds(const PressureLaw& law,
                                          const PrimitiveState& prim, const Vec& xi) {
    const double xi_norm = norm(xi);
    if (!(xi_norm > 0.0))
        throw std::invalid_argument("characteristic_speeds: direction must be nonzero");
    const double c = sound_speed(law, prim.rho, prim.s);
    const double u_xi = dot(prim.u, xi);

    std::vector<double> speeds;
    speeds.reserve(static_cast<size_t>(prim.u.dim) + 2);
    speeds.push_back(u_xi - c * xi_norm);
    for (int k = 0; k < prim.u.dim; ++k) speeds.push_back(u_xi);
    speeds.push_back(u_xi + c * xi_norm);
    return speeds;
}

double max_wave_speed(const PressureLaw& law, std::span<const PrimitiveState> states,
                      std::span<const Vec> directions) {
    if (states.empty())
        throw std::invalid_argument("max_wave_speed: empty state list");
    if (directions.empty())
        throw std::invalid_argument("max_wave_speed: empty direction list");

    double bound = 0.0;
    for (const PrimitiveState& prim : states) {
        const double c = sound_speed(law, prim.rho, prim.s);
        for (const Vec& xi : directions)
            bound = std::max(bound, std::abs(dot(prim.u, xi)) + c);
    }
    return bound;
}

}  // namespace twofluid
