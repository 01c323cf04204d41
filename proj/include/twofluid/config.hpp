#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "twofluid/energy.hpp"
#include "twofluid/fvm.hpp"
#include "twofluid/state.hpp"

namespace twofluid {

/// Line-based `key = value` configuration with `#` comments. Every key must
/// be consumed by the run that loads it; leftovers are hard errors.
class ConfigMap {
public:
    static ConfigMap parse_file(const std::string& path);
    static ConfigMap parse_text(const std::string& text);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get(const std::string& key);  // marks consumed, throws if absent
    double get_double(const std::string& key);
    int get_int(const std::string& key);

    // The *_or getters materialize their fallback, so the resolved echo of a
    // run lists every key the run used.
    std::string get_or(const std::string& key, const std::string& fallback);
    double get_double_or(const std::string& key, double fallback);
    int get_int_or(const std::string& key, int fallback);

    /// Throws ConfigError naming every key no consumer asked for.
    void require_all_consumed() const;

    /// Deterministic `key = value` text of all entries, sorted by key.
    std::string resolved_text() const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
    std::set<std::string> consumed_;
};

/// Builds a pressure law from `law = <name>` plus `law.<param> = <value>`
/// entries of a ConfigMap.
PressureLaw law_from_config(ConfigMap& config);

ModelKind model_kind_from_name(const std::string& name);

/// Parses `m=<v> n=<v> u=<v1,v2,...>` or `p=<v> s=<v> u=<...>` literals
/// (whitespace-separated fields) and returns the primitive state; the
/// conservative form is converted through the law.
PrimitiveState parse_state_literal(const std::string& text, const PressureLaw& law);

/// Parses the comma-separated `rho=<v>,un=<v>,s=<v>` upstream literal.
struct UpstreamLiteral {
    double rho = 0.0;
    double un = 0.0;
    double s = 0.0;
};
UpstreamLiteral parse_upstream_literal(const std::string& text);

/// Parses `lo:hi:steps` sweep ranges.
struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
    double value(int k) const;
};
SweepRange parse_sweep_range(const std::string& text);

/// Small expression set for the energy subcommand data:
///   zero | const <v> | sin <amp> <freq> [<phase>] |
///   poly <c0> [<c1> ...] | gaussian <amp> <center> <width>
struct Expr {
    std::function<double(double)> fn;
    std::string source;
    double operator()(double x) const { return fn(x); }
};
Expr parse_expr(const std::string& text);

/// Assembles the full simulation setup from a ConfigMap (the `simulate`
/// schema). Consumes every key it understands.
fvm::SimulationConfig simulation_from_config(ConfigMap& config);

/// Assembles the linearized entropy problem plus its discretization
/// parameters (the `energy` schema).
struct EnergyRunConfig {
    LinearizedShockProblem problem;
    int cells = 0;
    double cfl = 0.0;
};
EnergyRunConfig energy_from_config(ConfigMap& config);

}  // namespace twofluid
