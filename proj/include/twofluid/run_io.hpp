#pragma once

#include <string>

#include "twofluid/energy.hpp"
#include "twofluid/fvm.hpp"

namespace twofluid {

/// 17-significant-digit decimal formatting (round-trip exact); every CSV
/// number goes through this.
std::string fmt17(double v);

/// Writes snapshot_NNNN.csv files (header x[,y],m,n,u1[,u2],p,s) and
/// diagnostics.csv (header t,total_m,total_n,total_q1[,total_q2],min_s,
/// max_s,dt) into the directory.
void write_simulation_outputs(const fvm::RunResult& result, const PressureLaw& law,
                              const std::string& out_dir);

/// Writes energy_series.csv (header t,I,boundary_integral,source_integral,
/// residual) into the directory.
void write_energy_outputs(const EntropySolution& solution,
                          const std::string& out_dir);

/// Creates the directory (and parents) if needed and writes text to
/// dir/name.
void write_text_file(const std::string& dir, const std::string& name,
                     const std::string& text);

}  // namespace twofluid
