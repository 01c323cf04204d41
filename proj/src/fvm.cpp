#include "twofluid/fvm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace twofluid::fvm {

Field::Field(const Grid& g, const PressureLaw& l, Boundary bx, Boundary by)
    : grid(g), law(l), boundary_x(bx), boundary_y(by) {
    if (grid.dim < 1 || grid.dim > 2)
        throw ConfigError("Field: dim must be 1 or 2");
    if (grid.nx < 1 || (grid.dim == 2 && grid.ny < 1))
        throw ConfigError("Field: cell counts must be positive");
    if (!(grid.x_max > grid.x_min) || (grid.dim == 2 && !(grid.y_max > grid.y_min)))
        throw ConfigError("Field: domain extents must be positive");
    const size_t count = static_cast<size_t>(grid.cell_count());
    m.assign(count, 0.0);
    n.assign(count, 0.0);
    q1.assign(count, 0.0);
    if (grid.dim == 2) q2.assign(count, 0.0);
}

ConservativeState Field::cell(int i, int j) const {
    const long k = index(i, j);
    ConservativeState w;
    w.m = m[k];
    w.n = n[k];
    w.q = Vec::zero(grid.dim);
    w.q[0] = q1[k];
    if (grid.dim == 2) w.q[1] = q2[k];
    return w;
}

void Field::set_cell(int i, int j, const ConservativeState& w) {
    const long k = index(i, j);
    m[k] = w.m;
    n[k] = w.n;
    q1[k] = w.q[0];
    if (grid.dim == 2) q2[k] = w.q.dim >= 2 ? w.q[1] : 0.0;
}

void Field::validate_cells(const char* where) const {
    const long count = grid.cell_count();
    for (long k = 0; k < count; ++k) {
        const DomainReport report = validate_masses(law, m[k], n[k]);
        if (!report.valid) {
            const int i = static_cast<int>(k % grid.nx);
            const int j = static_cast<int>(k / grid.nx);
            throw PositivityError(std::string(where) + ": cell (" + std::to_string(i) +
                                      "," + std::to_string(j) +
                                      ") left the validity region: " +
                                      to_string(report.reason),
                                  i, j);
        }
    }
}

namespace {

struct CellCache {
    double p;
    double c;
    double u1;
    double u2;
};

CellCache cache_of(const PressureLaw& law, double m, double n, double q1, double q2,
                   int dim) {
    CellCache cc;
    const double rho = density_of(law.model(), m, n);
    const double s = m / n;
    cc.p = pressure_rho_s(law, rho, s);
    cc.c = std::sqrt(dpressure_drho(law, rho, s));
    cc.u1 = q1 / rho;
    cc.u2 = dim == 2 ? q2 / rho : 0.0;
    return cc;
}

// Shared arithmetic for the standalone flux entry points and the cached
// step kernels; both sides must feed it the same cached quantities for the
// paths to stay bit-identical.
std::array<double, 4> rusanov_core(double ml, double nl, double q1l, double q2l,
                                   const CellCache& ccl, double mr, double nr,
                                   double q1r, double q2r, const CellCache& ccr,
                                   int axis, int dim) {
    const double ual = axis == 0 ? ccl.u1 : ccl.u2;
    const double uar = axis == 0 ? ccr.u1 : ccr.u2;
    const double lambda =
        std::max(std::abs(ual) + ccl.c, std::abs(uar) + ccr.c);

    std::array<double, 4> f{};
    f[0] = 0.5 * (ml * ual + mr * uar) - 0.5 * lambda * (mr - ml);
    f[1] = 0.5 * (nl * ual + nr * uar) - 0.5 * lambda * (nr - nl);
    double fl = q1l * ual + (axis == 0 ? ccl.p : 0.0);
    double fr = q1r * uar + (axis == 0 ? ccr.p : 0.0);
    f[2] = 0.5 * (fl + fr) - 0.5 * lambda * (q1r - q1l);
    if (dim == 2) {
        fl = q2l * ual + (axis == 1 ? ccl.p : 0.0);
        fr = q2r * uar + (axis == 1 ? ccr.p : 0.0);
        f[3] = 0.5 * (fl + fr) - 0.5 * lambda * (q2r - q2l);
    }
    return f;
}

void require_valid(const PressureLaw& law, const ConservativeState& w,
                   const char* where) {
    const DomainReport report = validate_masses(law, w.m, w.n);
    if (!report.valid) throw DomainError(report, where);
}

}  // namespace

std::array<double, 4> physical_flux(const PressureLaw& law, const ConservativeState& w,
                                    int axis) {
    require_valid(law, w, "physical_flux");
    const int dim = w.q.dim;
    const double rho = density_of(law.model(), w.m, w.n);
    const double p = pressure_rho_s(law, rho, w.m / w.n);
    const double ua = w.q[axis] / rho;

    std::array<double, 4> f{};
    f[0] = w.m * ua;
    f[1] = w.n * ua;
    f[2] = w.q[0] * ua + (axis == 0 ? p : 0.0);
    if (dim == 2) f[3] = w.q[1] * ua + (axis == 1 ? p : 0.0);
    return f;
}

std::array<double, 4> rusanov_flux(const PressureLaw& law, const ConservativeState& left,
                                   const ConservativeState& right, int axis) {
    require_valid(law, left, "rusanov_flux");
    require_valid(law, right, "rusanov_flux");
    const int dim = left.q.dim;
    const double q2l = dim == 2 ? left.q[1] : 0.0;
    const double q2r = dim == 2 ? right.q[1] : 0.0;
    const CellCache ccl = cache_of(law, left.m, left.n, left.q[0], q2l, dim);
    const CellCache ccr = cache_of(law, right.m, right.n, right.q[0], q2r, dim);
    return rusanov_core(left.m, left.n, left.q[0], q2l, ccl, right.m, right.n,
                        right.q[0], q2r, ccr, axis, dim);
}

double cfl_dt(const Field& field, double cfl, Exec exec) {
    const long count = field.grid.cell_count();
    const int dim = field.grid.dim;
    double max_speed = 0.0;

    auto speed_at = [&](long k) {
        const CellCache cc =
            cache_of(field.law, field.m[k], field.n[k], field.q1[k],
                     dim == 2 ? field.q2[k] : 0.0, dim);
        double s = std::abs(cc.u1) + cc.c;
        if (dim == 2) s = std::max(s, std::abs(cc.u2) + cc.c);
        return s;
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(max : max_speed) schedule(static)
        for (long k = 0; k < count; ++k)
            max_speed = std::max(max_speed, speed_at(k));
    } else {
        for (long k = 0; k < count; ++k)
            max_speed = std::max(max_speed, speed_at(k));
    }

    if (!(max_speed > 0.0))
        throw ConfigError("cfl_dt: vanishing wave speed");
    const double h = dim == 2 ? std::min(field.grid.dx(), field.grid.dy())
                              : field.grid.dx();
    return cfl * h / max_speed;
}

namespace {

long wrap_or_clamp(long i, long count, Boundary b) {
    if (b == Boundary::Periodic) return (i + count) % count;
    return std::clamp(i, 0L, count - 1);
}

}  // namespace

void step(Field& field, double dt, Exec exec) {
    const Grid& grid = field.grid;
    const int nx = grid.nx;
    const int ny = grid.dim == 2 ? grid.ny : 1;
    const long count = grid.cell_count();
    const int dim = grid.dim;
    const double lx = dt / grid.dx();
    const double ly = dim == 2 ? dt / grid.dy() : 0.0;

    std::vector<CellCache> cache(static_cast<size_t>(count));
    auto fill_cache = [&](long k) {
        cache[k] = cache_of(field.law, field.m[k], field.n[k], field.q1[k],
                            dim == 2 ? field.q2[k] : 0.0, dim);
    };

    // Interface fluxes along x: (nx + 1) * ny slots.
    std::vector<std::array<double, 4>> flux_x(static_cast<size_t>(nx + 1) * ny);
    auto fill_flux_x = [&](long slot) {
        const int j = static_cast<int>(slot / (nx + 1));
        const int i = static_cast<int>(slot % (nx + 1));
        const long kl = static_cast<long>(j) * nx +
                        wrap_or_clamp(i - 1, nx, field.boundary_x);
        const long kr = static_cast<long>(j) * nx +
                        wrap_or_clamp(i, nx, field.boundary_x);
        flux_x[slot] = rusanov_core(
            field.m[kl], field.n[kl], field.q1[kl], dim == 2 ? field.q2[kl] : 0.0,
            cache[kl], field.m[kr], field.n[kr], field.q1[kr],
            dim == 2 ? field.q2[kr] : 0.0, cache[kr], 0, dim);
    };

    std::vector<std::array<double, 4>> flux_y;
    auto fill_flux_y = [&](long slot) {
        const int j = static_cast<int>(slot / nx);
        const int i = static_cast<int>(slot % nx);
        const long kl = wrap_or_clamp(j - 1, ny, field.boundary_y) *
                            static_cast<long>(nx) + i;
        const long kr = wrap_or_clamp(j, ny, field.boundary_y) *
                            static_cast<long>(nx) + i;
        flux_y[slot] = rusanov_core(
            field.m[kl], field.n[kl], field.q1[kl], field.q2[kl], cache[kl],
            field.m[kr], field.n[kr], field.q1[kr], field.q2[kr], cache[kr], 1, dim);
    };

    auto update_cell = [&](long k) {
        const int j = static_cast<int>(k / nx);
        const int i = static_cast<int>(k % nx);
        const long xs = static_cast<long>(j) * (nx + 1) + i;
        field.m[k] -= lx * (flux_x[xs + 1][0] - flux_x[xs][0]);
        field.n[k] -= lx * (flux_x[xs + 1][1] - flux_x[xs][1]);
        field.q1[k] -= lx * (flux_x[xs + 1][2] - flux_x[xs][2]);
        if (dim == 2) {
            field.q2[k] -= lx * (flux_x[xs + 1][3] - flux_x[xs][3]);
            const long ylo = static_cast<long>(j) * nx + i;
            const long yhi = static_cast<long>(j + 1) * nx + i;
            field.m[k] -= ly * (flux_y[yhi][0] - flux_y[ylo][0]);
            field.n[k] -= ly * (flux_y[yhi][1] - flux_y[ylo][1]);
            field.q1[k] -= ly * (flux_y[yhi][2] - flux_y[ylo][2]);
            field.q2[k] -= ly * (flux_y[yhi][3] - flux_y[ylo][3]);
        }
    };

    const long nfx = static_cast<long>(nx + 1) * ny;
    const long nfy = dim == 2 ? static_cast<long>(nx) * (ny + 1) : 0;
    if (dim == 2) flux_y.resize(static_cast<size_t>(nfy));

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long k = 0; k < count; ++k) fill_cache(k);
#pragma omp parallel for schedule(static)
        for (long s = 0; s < nfx; ++s) fill_flux_x(s);
        if (dim == 2) {
#pragma omp parallel for schedule(static)
            for (long s = 0; s < nfy; ++s) fill_flux_y(s);
        }
#pragma omp parallel for schedule(static)
        for (long k = 0; k < count; ++k) update_cell(k);
    } else {
        for (long k = 0; k < count; ++k) fill_cache(k);
        for (long s = 0; s < nfx; ++s) fill_flux_x(s);
        for (long s = 0; s < nfy; ++s) fill_flux_y(s);
        for (long k = 0; k < count; ++k) update_cell(k);
    }

    field.validate_cells("step");
}

Initializer constant_initializer(const ConservativeState& w) {
    return [w](double, double) { return w; };
}

Initializer riemann_initializer(const ConservativeState& left,
                                const ConservativeState& right, double x_split) {
    return [=](double x, double) { return x < x_split ? left : right; };
}

Initializer sine_initializer(const Grid& grid, const SineInit& init, ModelKind model) {
    const double two_pi = 2.0 * std::acos(-1.0);
    const double lx = grid.x_max - grid.x_min;
    const double ly = grid.y_max - grid.y_min;
    const double x0 = grid.x_min;
    const double y0 = grid.y_min;
    const int dim = grid.dim;
    return [=](double x, double y) {
        double phase = two_pi * init.waves_x * (x - x0) / lx;
        if (dim == 2 && init.waves_y != 0)
            phase += two_pi * init.waves_y * (y - y0) / ly;
        const double wave = std::sin(phase);
        ConservativeState w;
        w.m = init.base_m * (1.0 + init.amp_m * wave);
        w.n = init.base_n * (1.0 + init.amp_n * wave);
        w.q = Vec::zero(dim);
        w.q[0] = density_of(model, w.m, w.n) * init.amp_u1 * wave;
        return w;
    };
}

Initializer exact_shock_initializer(const PressureLaw& law, const ShockSolution& shock,
                                    double front_x0) {
    const ModelKind model = law.model();
    auto conservative_of = [model](const PrimitiveState& prim) {
        ConservativeState w;
        if (model == ModelKind::LiquidGas) {
            w.n = prim.rho;
            w.m = prim.s * prim.rho;
        } else {
            w.n = prim.rho / (1.0 + prim.s);
            w.m = prim.rho * prim.s / (1.0 + prim.s);
        }
        w.q = prim.rho * prim.u;
        return w;
    };
    const ConservativeState left = conservative_of(shock.minus);
    const ConservativeState right = conservative_of(shock.plus);
    return [=](double x, double) { return x < front_x0 ? left : right; };
}

namespace {

struct MarkerSet {
    std::vector<double> x, y;
    std::vector<double> s0;
};

MarkerSet seed_markers(const Field& field, int count) {
    MarkerSet markers;
    if (count <= 0) return markers;
    const Grid& grid = field.grid;
    for (int k = 0; k < count; ++k) {
        const double fx = (k + 0.5) / count;
        markers.x.push_back(grid.x_min + fx * (grid.x_max - grid.x_min));
        markers.y.push_back(grid.dim == 2
                                ? grid.y_min + 0.5 * (grid.y_max - grid.y_min)
                                : 0.0);
    }
    markers.s0.resize(markers.x.size());
    for (size_t k = 0; k < markers.x.size(); ++k) {
        const int i = std::clamp(
            static_cast<int>((markers.x[k] - grid.x_min) / grid.dx()), 0, grid.nx - 1);
        const int j = grid.dim == 2
                          ? std::clamp(static_cast<int>((markers.y[k] - grid.y_min) /
                                                        grid.dy()),
                                       0, grid.ny - 1)
                          : 0;
        const long c = field.index(i, j);
        markers.s0[k] = field.m[c] / field.n[c];
    }
    return markers;
}

double advect_markers_and_drift(MarkerSet& markers, const Field& field, double dt) {
    const Grid& grid = field.grid;
    double drift = 0.0;
    for (size_t k = 0; k < markers.x.size(); ++k) {
        int i = std::clamp(static_cast<int>((markers.x[k] - grid.x_min) / grid.dx()),
                           0, grid.nx - 1);
        int j = grid.dim == 2
                    ? std::clamp(static_cast<int>((markers.y[k] - grid.y_min) /
                                                  grid.dy()),
                                 0, grid.ny - 1)
                    : 0;
        long c = field.index(i, j);
        const double rho = density_of(field.law.model(), field.m[c], field.n[c]);
        markers.x[k] += dt * field.q1[c] / rho;
        if (grid.dim == 2) markers.y[k] += dt * field.q2[c] / rho;
        if (field.boundary_x == Boundary::Periodic) {
            const double lx = grid.x_max - grid.x_min;
            while (markers.x[k] >= grid.x_max) markers.x[k] -= lx;
            while (markers.x[k] < grid.x_min) markers.x[k] += lx;
        }
        i = std::clamp(static_cast<int>((markers.x[k] - grid.x_min) / grid.dx()), 0,
                       grid.nx - 1);
        j = grid.dim == 2
                ? std::clamp(static_cast<int>((markers.y[k] - grid.y_min) / grid.dy()),
                             0, grid.ny - 1)
                : 0;
        c = field.index(i, j);
        drift = std::max(drift,
                         std::abs(field.m[c] / field.n[c] - markers.s0[k]));
    }
    return drift;
}

Snapshot snapshot_of(const Field& field, double t) {
    Snapshot snap;
    snap.t = t;
    snap.m = field.m;
    snap.n = field.n;
    snap.q1 = field.q1;
    snap.q2 = field.q2;
    return snap;
}

DiagnosticsRow diagnostics_of(const Field& field, double t, double dt,
                              double marker_drift) {
    // Fixed-order serial reductions keep the totals bit-identical across
    // execution policies.
    DiagnosticsRow row;
    row.t = t;
    row.dt = dt;
    row.marker_drift = marker_drift;
    const double cell_volume = field.grid.dx() * (field.grid.dim == 2
                                                      ? field.grid.dy()
                                                      : 1.0);
    const long count = field.grid.cell_count();
    double min_s = std::numeric_limits<double>::infinity();
    double max_s = -min_s;
    for (long k = 0; k < count; ++k) {
        row.total_m += field.m[k];
        row.total_n += field.n[k];
        row.total_q1 += field.q1[k];
        if (field.grid.dim == 2) row.total_q2 += field.q2[k];
        const double s = field.m[k] / field.n[k];
        min_s = std::min(min_s, s);
        max_s = std::max(max_s, s);
    }
    row.total_m *= cell_volume;
    row.total_n *= cell_volume;
    row.total_q1 *= cell_volume;
    row.total_q2 *= cell_volume;
    row.min_s = min_s;
    row.max_s = max_s;
    return row;
}

}  // namespace

RunResult run(const SimulationConfig& config, Exec exec) {
    if (!config.initial) throw ConfigError("run: missing initial condition");
    if (!(config.t_final > 0.0)) throw ConfigError("run: t_final must be positive");
    if (!(config.cfl > 0.0) || config.cfl > 1.0)
        throw ConfigError("run: cfl must be in (0, 1]");

    Field field(config.grid, config.law, config.boundary, config.boundary);
    const int ny = config.grid.dim == 2 ? config.grid.ny : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < config.grid.nx; ++i)
            field.set_cell(i, j,
                           config.initial(config.grid.x_center(i),
                                          config.grid.dim == 2
                                              ? config.grid.y_center(j)
                                              : 0.0));
    field.validate_cells("run: initial data");

    MarkerSet markers = seed_markers(field, config.markers);

    RunResult result;
    result.grid = config.grid;
    result.markers_enabled = config.markers > 0;

    double t = 0.0;
    double marker_drift = 0.0;
    double dt = cfl_dt(field, config.cfl, exec);
    result.snapshots.push_back(snapshot_of(field, t));
    result.diagnostics.push_back(diagnostics_of(field, t, dt, marker_drift));

    const double t_final = config.t_final;
    int step_index = 0;
    while (t < t_final * (1.0 - 1e-14)) {
        dt = cfl_dt(field, config.cfl, exec);
        if (t + dt > t_final) dt = t_final - t;
        try {
            step(field, dt, exec);
        } catch (const PositivityError& err) {
            throw PositivityError(std::string(err.what()) + " at t = " +
                                      std::to_string(t + dt),
                                  err.cell_i(), err.cell_j());
        }
        if (!markers.x.empty())
            marker_drift =
                std::max(marker_drift, advect_markers_and_drift(markers, field, dt));
        t += dt;
        ++step_index;

        const bool due = config.snapshot_every > 0 &&
                         step_index % config.snapshot_every == 0;
        const bool last = !(t < t_final * (1.0 - 1e-14));
        if (due || last) {
            result.snapshots.push_back(snapshot_of(field, t));
            result.diagnostics.push_back(diagnostics_of(field, t, dt, marker_drift));
        }
    }
    result.steps = step_index;
    return result;
}

CrossFormReport cross_validate_forms(const PressureLaw& law, const SineInit& init,
                                     double t_final, int cells, double cfl,
                                     Exec exec) {
    Grid grid;
    grid.dim = 1;
    grid.nx = cells;
    grid.x_min = 0.0;
    grid.x_max = 1.0;

    // Route (a): conservative finite volumes.
    SimulationConfig config;
    config.grid = grid;
    config.law = law;
    config.boundary = Boundary::Periodic;
    config.cfl = cfl;
    config.t_final = t_final;
    config.initial = sine_initializer(grid, init, law.model());
    const RunResult fv = run(config, exec);
    const Snapshot& last = fv.snapshots.back();

    // Route (b): the symmetric nonconservative form on (P, u, S) with a
    // first-order upwind-biased (local Lax-Friedrichs) update.
    std::vector<double> p(cells), u(cells), s(cells), rho(cells);
    {
        Field f0(grid, law, Boundary::Periodic, Boundary::Periodic);
        for (int i = 0; i < cells; ++i)
            f0.set_cell(i, 0, config.initial(grid.x_center(i), 0.0));
        for (int i = 0; i < cells; ++i) {
            const PrimitiveState prim = to_primitive(law, f0.cell(i, 0));
            p[i] = prim.p;
            u[i] = prim.u[0];
            s[i] = prim.s;
            rho[i] = prim.rho;
        }
    }

    const double dx = grid.dx();
    std::vector<double> np(cells), nu(cells), ns(cells), lambda(cells);
    double t = 0.0;
    while (t < t_final * (1.0 - 1e-14)) {
        double lambda_max = 0.0;
        auto prepare = [&](int i) {
            rho[i] = density_from_pressure(law, p[i], s[i], rho[i]);
            lambda[i] = std::abs(u[i]) + std::sqrt(dpressure_drho(law, rho[i], s[i]));
        };
        if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(max : lambda_max) schedule(static)
            for (int i = 0; i < cells; ++i) {
                prepare(i);
                lambda_max = std::max(lambda_max, lambda[i]);
            }
        } else {
            for (int i = 0; i < cells; ++i) {
                prepare(i);
                lambda_max = std::max(lambda_max, lambda[i]);
            }
        }
        double dt = cfl * dx / lambda_max;
        if (t + dt > t_final) dt = t_final - t;
        const double r = dt / (2.0 * dx);

        auto update = [&](int i) {
            const int il = i == 0 ? cells - 1 : i - 1;
            const int ir = i == cells - 1 ? 0 : i + 1;
            const double dp = p[ir] - p[il];
            const double du = u[ir] - u[il];
            const double ds = s[ir] - s[il];
            const double visc = lambda[i] * r;
            const double rho_prho = rho[i] * dpressure_drho(law, rho[i], s[i]);
            np[i] = p[i] - r * (u[i] * dp + rho_prho * du) +
                    visc * (p[ir] - 2.0 * p[i] + p[il]);
            nu[i] = u[i] - r * (u[i] * du + dp / rho[i]) +
                    visc * (u[ir] - 2.0 * u[i] + u[il]);
            ns[i] = s[i] - r * (u[i] * ds) + visc * (s[ir] - 2.0 * s[i] + s[il]);
        };
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < cells; ++i) update(i);
        } else {
            for (int i = 0; i < cells; ++i) update(i);
        }
        p.swap(np);
        u.swap(nu);
        s.swap(ns);
        t += dt;
    }

    CrossFormReport report;
    Field ff(grid, law, Boundary::Periodic, Boundary::Periodic);
    ff.m = last.m;
    ff.n = last.n;
    ff.q1 = last.q1;
    for (int i = 0; i < cells; ++i) {
        const PrimitiveState prim = to_primitive(law, ff.cell(i, 0));
        report.discrepancy_p = std::max(report.discrepancy_p, std::abs(prim.p - p[i]));
        report.discrepancy_u =
            std::max(report.discrepancy_u, std::abs(prim.u[0] - u[i]));
        report.discrepancy_s = std::max(report.discrepancy_s, std::abs(prim.s - s[i]));
    }
    report.max_discrepancy = std::max(
        {report.discrepancy_p, report.discrepancy_u, report.discrepancy_s});
    return report;
}

}  // namespace twofluid::fvm
