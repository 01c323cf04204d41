#include "twofluid/run_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace twofluid {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string& dir, const std::string& name,
                     const std::string& text) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
}

void write_simulation_outputs(const fvm::RunResult& result, const PressureLaw& law,
                              const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const fvm::Grid& grid = result.grid;
    const bool two_d = grid.dim == 2;

    for (size_t snap_index = 0; snap_index < result.snapshots.size(); ++snap_index) {
        const fvm::Snapshot& snap = result.snapshots[snap_index];
        char name[48];
        std::snprintf(name, sizeof name, "snapshot_%04zu.csv", snap_index);
        std::ofstream out(out_dir + "/" + name, std::ios::binary);
        if (!out) throw ConfigError("cannot write snapshot file in " + out_dir);

        out << (two_d ? "x,y,m,n,u1,u2,p,s\n" : "x,m,n,u1,p,s\n");
        const int ny = two_d ? grid.ny : 1;
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                const long k = static_cast<long>(j) * grid.nx + i;
                const double m = snap.m[k];
                const double n = snap.n[k];
                const double rho = density_of(law.model(), m, n);
                const double s = m / n;
                const double p = pressure_rho_s(law, rho, s);
                out << fmt17(grid.x_center(i));
                if (two_d) out << ',' << fmt17(grid.y_center(j));
                out << ',' << fmt17(m) << ',' << fmt17(n) << ','
                    << fmt17(snap.q1[k] / rho);
                if (two_d) out << ',' << fmt17(snap.q2[k] / rho);
                out << ',' << fmt17(p) << ',' << fmt17(s) << '\n';
            }
        }
    }

    std::ofstream diag(out_dir + "/diagnostics.csv", std::ios::binary);
    if (!diag) throw ConfigError("cannot write diagnostics.csv in " + out_dir);
    diag << (two_d ? "t,total_m,total_n,total_q1,total_q2,min_s,max_s,dt\n"
                   : "t,total_m,total_n,total_q1,min_s,max_s,dt\n");
    for (const fvm::DiagnosticsRow& row : result.diagnostics) {
        diag << fmt17(row.t) << ',' << fmt17(row.total_m) << ',' << fmt17(row.total_n)
             << ',' << fmt17(row.total_q1);
        if (two_d) diag << ',' << fmt17(row.total_q2);
        diag << ',' << fmt17(row.min_s) << ',' << fmt17(row.max_s) << ','
             << fmt17(row.dt) << '\n';
    }

    if (result.markers_enabled) {
        std::ofstream markers(out_dir + "/markers.csv", std::ios::binary);
        if (!markers) throw ConfigError("cannot write markers.csv in " + out_dir);
        markers << "t,marker_drift\n";
        for (const fvm::DiagnosticsRow& row : result.diagnostics)
            markers << fmt17(row.t) << ',' << fmt17(row.marker_drift) << '\n';
    }
}

void write_energy_outputs(const EntropySolution& solution,
                          const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/energy_series.csv", std::ios::binary);
    if (!out) throw ConfigError("cannot write energy_series.csv in " + out_dir);
    out << "t,I,boundary_integral,source_integral,residual\n";
    for (size_t k = 0; k < solution.times.size(); ++k) {
        const double residual =
            std::abs(solution.energy[k] - solution.boundary_integral[k] -
                     solution.energy.front() - solution.source_integral[k]);
        out << fmt17(solution.times[k]) << ',' << fmt17(solution.energy[k]) << ','
            << fmt17(solution.boundary_integral[k]) << ','
            << fmt17(solution.source_integral[k]) << ',' << fmt17(residual) << '\n';
    }
}

}  // namespace twofluid
