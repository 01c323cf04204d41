#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "twofluid/state.hpp"

namespace twofluid {

/// Dense square matrix of order <= 5, sized d + 2 in spatial dimension d.
struct SquareMatrix {
    int n = 0;
    std::array<double, 25> e{};

    double at(int i, int j) const { return e[static_cast<size_t>(i * 5 + j)]; }
    double& at(int i, int j) { return e[static_cast<size_t>(i * 5 + j)]; }
};

/// The symmetrizer A0 and the directional matrices A_j of the symmetric
/// system in the variables (P, u_1..u_d, S).
struct SymbolMatrices {
    int dim = 0;
    SquareMatrix a0;
    std::array<SquareMatrix, 3> a;
};

/// A0 = diag(1/(rho P_rho), rho, ..., rho, 1) and A_j = u_j A0 plus the
/// symmetric unit pair coupling P with u_j. Rows and columns of absent
/// velocity components are dropped.
SymbolMatrices assemble_matrices(const PressureLaw& law, const PrimitiveState& prim);

struct HyperbolicityCheck {
    bool ok = false;
    std::string diagnostic;
};

/// True iff every A_j is exactly symmetric entrywise and every diagonal
/// entry of A0 is strictly positive. The diagnostic names the first
/// failing entry.
HyperbolicityCheck check_symmetric_hyperbolic(const SymbolMatrices& msys);

/// Eigenvalues of A0^{-1} sum_j xi_j A_j, ascending:
/// {u.xi - c|xi|, u.xi (d times), u.xi + c|xi|}.
std::vector<double> characteristic_speeds(const PressureLaw& law,
                                          const PrimitiveState& prim, const Vec& xi);

/// max over states and unit directions of |u.xi| + c; the CFL bound.
double max_wave_speed(const PressureLaw& law, std::span<const PrimitiveState> states,
                      std::span<const Vec> directions);

}  // namespace twofluid
