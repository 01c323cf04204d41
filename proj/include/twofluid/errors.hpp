#pragma once

#include <stdexcept>
#include <string>

namespace twofluid {

/// Why a (m, n) or (rho, S) point is outside the admissible region.
enum class DomainReason {
    Ok,
    NonpositiveMass,
    NonpositiveLiquidMass,
    DensityExceedsLiquidDensity,
    NonpositiveTotalDensity,
};

struct DomainReport {
    bool valid = true;
    DomainReason reason = DomainReason::Ok;

    static DomainReport ok() { return {true, DomainReason::Ok}; }
    static DomainReport bad(DomainReason r) { return {false, r}; }
};

const char* to_string(DomainReason r);

/// Thrown when an operation is evaluated outside the validity region of the
/// active pressure law.
class DomainError : public std::runtime_error {
public:
    DomainError(DomainReport report, const std::string& context)
        : std::runtime_error(context + ": " + to_string(report.reason)),
          report_(report) {}

    const DomainReport& report() const { return report_; }

private:
    DomainReport report_;
};

/// Target pressure is outside the attainable range of P(., S).
class NoBracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver hit its iteration cap.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No shock connects the requested state pair.
class RarefactionBranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad run configuration (files, keys, flag values, solver setup).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite-volume update produced a cell outside the validity region.
class PositivityError : public std::runtime_error {
public:
    PositivityError(const std::string& what, int cell_i, int cell_j)
        : std::runtime_error(what), cell_i_(cell_i), cell_j_(cell_j) {}

    int cell_i() const { return cell_i_; }
    int cell_j() const { return cell_j_; }

private:
    int cell_i_;
    int cell_j_;
};

}  // namespace twofluid
