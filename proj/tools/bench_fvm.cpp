// Throughput comparison of the serial reference kernels against the
// OpenMP-parallel ones, on a 1D wave field and a 2D oblique wave field.
// Also verifies that both paths produce bit-identical fields.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twofluid/fvm.hpp"

using namespace twofluid;

namespace {

double seconds_per_step(fvm::Field& field, double dt, int steps, fvm::Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < steps; ++k) fvm::step(field, dt, exec);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count() / steps;
}

bool fields_identical(const fvm::Field& a, const fvm::Field& b) {
    auto same = [](const std::vector<double>& x, const std::vector<double>& y) {
        return std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0;
    };
    return same(a.m, b.m) && same(a.n, b.n) && same(a.q1, b.q1) && same(a.q2, b.q2);
}

void bench_case(const char* label, const fvm::Grid& grid, int steps) {
    const PressureLaw law = PressureLaw::two_phase_polytropic(2.0);
    fvm::SineInit init;
    init.amp_m = 0.02;
    init.amp_n = 0.02;
    init.amp_u1 = 0.02;
    init.waves_y = grid.dim == 2 ? 1 : 0;
    const fvm::Initializer fill = fvm::sine_initializer(grid, init, law.model());

    fvm::Field serial(grid, law, fvm::Boundary::Periodic, fvm::Boundary::Periodic);
    const int ny = grid.dim == 2 ? grid.ny : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            serial.set_cell(i, j, fill(grid.x_center(i),
                                       grid.dim == 2 ? grid.y_center(j) : 0.0));
    fvm::Field parallel = serial;

    const double dt = fvm::cfl_dt(serial, 0.4, fvm::Exec::Serial);

    // Warm-up pass so both timings see hot caches.
    fvm::step(serial, dt, fvm::Exec::Serial);
    fvm::step(parallel, dt, fvm::Exec::Parallel);

    const double t_serial = seconds_per_step(serial, dt, steps, fvm::Exec::Serial);
    const double t_parallel =
        seconds_per_step(parallel, dt, steps, fvm::Exec::Parallel);

    const double cells = static_cast<double>(grid.cell_count());
    std::printf("%-18s %10.0f cells  serial %8.2f Mcell/s  parallel %8.2f Mcell/s"
                "  speedup %.2fx  bit-identical %s\n",
                label, cells, cells / t_serial / 1e6, cells / t_parallel / 1e6,
                t_serial / t_parallel,
                fields_identical(serial, parallel) ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n");
#endif

    fvm::Grid grid1;
    grid1.dim = 1;
    grid1.nx = 200000;
    bench_case("1D 200k", grid1, 20);

    fvm::Grid grid2;
    grid2.dim = 2;
    grid2.nx = 384;
    grid2.ny = 384;
    bench_case("2D 384x384", grid2, 10);
    return 0;
}
