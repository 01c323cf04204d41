#include "twofluid/rankine_hugoniot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twofluid {

namespace {

void require_matching_dims(const ShockSolution& shock, const char* where) {
    if (shock.minus.u.dim != shock.plus.u.dim)
        throw std::invalid_argument(std::string(where) +
                                    ": side states have different dimensions");
}

struct SideQuantities {
    double m, n, rho, u_n, u_t1, u_t2, relative;  // relative = u_N - phi_t
};

SideQuantities side_quantities(const PressureLaw& law, const PrimitiveState& prim,
                               const FrontGeometry& geometry) {
    const int d = prim.u.dim;
    SideQuantities q{};
    q.rho = prim.rho;
    if (law.model() == ModelKind::LiquidGas) {
        q.n = prim.rho;
        q.m = prim.s * prim.rho;
    } else {
        q.n = prim.rho / (1.0 + prim.s);
        q.m = prim.rho * prim.s / (1.0 + prim.s);
    }
    q.u_n = dot(prim.u, geometry.normal(d));
    q.u_t1 = d >= 2 ? dot(prim.u, geometry.tangent1(d)) : 0.0;
    q.u_t2 = d >= 3 ? dot(prim.u, geometry.tangent2(d)) : 0.0;
    q.relative = q.u_n - geometry.phi_t;
    return q;
}

}  // namespace

std::vector<double> rh_residual(const PressureLaw& law, const ShockSolution& shock) {
    require_matching_dims(shock, "rh_residual");
    const int d = shock.minus.u.dim;
    const SideQuantities lo = side_quantities(law, shock.minus, shock.geometry);
    const SideQuantities hi = side_quantities(law, shock.plus, shock.geometry);
    const double n2 = shock.geometry.normal_norm2(d);

    // Mass fluxes per side; j is their common value on an exact solution.
    const double j_minus = law.model() == ModelKind::LiquidGas
                               ? lo.n * lo.relative
                               : lo.rho * lo.relative;
    const double j_plus = law.model() == ModelKind::LiquidGas
                              ? hi.n * hi.relative
                              : hi.rho * hi.relative;
    const double j = 0.5 * (j_minus + j_plus);

    std::vector<double> residual;
    residual.reserve(static_cast<size_t>(d) + 2);
    residual.push_back(hi.m * hi.relative - lo.m * lo.relative);
    residual.push_back(hi.n * hi.relative - lo.n * lo.relative);
    residual.push_back(j * (hi.u_n - lo.u_n) + n2 * (shock.plus.p - shock.minus.p));
    if (d >= 2) residual.push_back(j * (hi.u_t1 - lo.u_t1));
    if (d >= 3) residual.push_back(j * (hi.u_t2 - lo.u_t2));
    return residual;
}

std::vector<double> rh_residual_reduced(const PressureLaw& law,
                                        const ShockSolution& shock) {
    require_matching_dims(shock, "rh_residual_reduced");
    const int d = shock.minus.u.dim;
    const SideQuantities lo = side_quantities(law, shock.minus, shock.geometry);
    const SideQuantities hi = side_quantities(law, shock.plus, shock.geometry);
    const double n2 = shock.geometry.normal_norm2(d);

    const double j_minus = lo.rho * lo.relative;
    const double j_plus = hi.rho * hi.relative;
    const double j = 0.5 * (j_minus + j_plus);

    std::vector<double> residual;
    residual.reserve(static_cast<size_t>(d) + 2);
    residual.push_back(shock.plus.s - shock.minus.s);
    residual.push_back(j_plus - j_minus);
    residual.push_back(j * (hi.u_n - lo.u_n) + n2 * (shock.plus.p - shock.minus.p));
    if (d >= 2) residual.push_back(hi.u_t1 - lo.u_t1);
    if (d >= 3) residual.push_back(hi.u_t2 - lo.u_t2);
    return residual;
}

ShockSolution hugoniot_downstream(const PressureLaw& law, double rho_minus,
                                  double un_minus, double s, double rho_plus,
                                  FluxSign sign) {
    DomainReport report = validate_rho_s(law, rho_minus, s);
    if (!report.valid) throw DomainError(report, "hugoniot_downstream upstream");
    report = validate_rho_s(law, rho_plus, s);
    if (!report.valid) throw DomainError(report, "hugoniot_downstream downstream");

    if (rho_plus == rho_minus)
        throw RarefactionBranchError(
            "hugoniot_downstream: equal densities leave the jump degenerate");

    const double p_minus = pressure_rho_s(law, rho_minus, s);
    const double p_plus = pressure_rho_s(law, rho_plus, s);
    const double j_squared =
        -(p_plus - p_minus) / (1.0 / rho_plus - 1.0 / rho_minus);
    if (!(j_squared > 0.0))
        throw RarefactionBranchError(
            "hugoniot_downstream: no shock branch connects the state pair");

    const double j = (sign == FluxSign::Positive ? 1.0 : -1.0) * std::sqrt(j_squared);
    const double sigma = un_minus - j / rho_minus;
    const double un_plus = sigma + j / rho_plus;

    ShockSolution shock;
    shock.minus.rho = rho_minus;
    shock.minus.s = s;
    shock.minus.p = p_minus;
    shock.minus.u = Vec{1, {un_minus}};
    shock.plus.rho = rho_plus;
    shock.plus.s = s;
    shock.plus.p = p_plus;
    shock.plus.u = Vec{1, {un_plus}};
    shock.sigma = sigma;
    shock.j_flux = j;
    shock.geometry.phi_t = sigma;
    shock.classification = classify_shock(law, shock);
    return shock;
}

ShockClassification classify_shock(const PressureLaw& law, const ShockSolution& shock) {
    require_matching_dims(shock, "classify_shock");
    const int d = shock.minus.u.dim;
    const double n_norm = std::sqrt(shock.geometry.normal_norm2(d));
    const double c_minus = sound_speed(law, shock.minus.rho, shock.minus.s);
    const double c_plus = sound_speed(law, shock.plus.rho, shock.plus.s);
    const double un_minus = dot(shock.minus.u, shock.geometry.normal(d));
    const double un_plus = dot(shock.plus.u, shock.geometry.normal(d));

    ShockClassification cls;
    cls.mach_minus = std::abs(un_minus - shock.geometry.phi_t) / (c_minus * n_norm);
    cls.mach_plus = std::abs(un_plus - shock.geometry.phi_t) / (c_plus * n_norm);

    const double rho_scale = std::max(shock.minus.rho, shock.plus.rho);
    const double c_scale = std::max(c_minus, c_plus);
    cls.is_shock = std::abs(shock.j_flux) > 1e-12 * rho_scale * c_scale;
    if (!cls.is_shock) return cls;

    // Mass crosses from the minus side when j > 0; upstream is the side the
    // front runs into. Compressivity is a density increase from upstream to
    // downstream, which makes the verdict independent of the +/- labels.
    const bool upstream_is_minus = shock.j_flux > 0.0;
    const double rho_up = upstream_is_minus ? shock.minus.rho : shock.plus.rho;
    const double rho_down = upstream_is_minus ? shock.plus.rho : shock.minus.rho;
    const double mach_up = upstream_is_minus ? cls.mach_minus : cls.mach_plus;
    const double mach_down = upstream_is_minus ? cls.mach_plus : cls.mach_minus;

    cls.compressive = rho_down > rho_up;
    cls.lax = mach_up > 1.0 && mach_down < 1.0;
    return cls;
}

PrimitiveState exact_shock_solution(const ShockSolution& shock, const Vec& x, double t,
                                    double front_x0) {
    return x[0] - shock.sigma * t < front_x0 ? shock.minus : shock.plus;
}

}  // namespace twofluid
