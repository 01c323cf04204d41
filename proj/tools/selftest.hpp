#pragma once

namespace twofluid {

/// Runs the cross-module invariant suite and prints one pass/fail line per
/// group. Returns 0 when every group passes.
int run_selftest();

}  // namespace twofluid
