#pragma once

#include <stdexcept>
#include <string>

#include "polyquant/measure.hpp"

namespace polyquant {

/// Diagnostics attached to every solver output.
struct SolveReport {
    double value = 0.0;
    /// Max-norm of the central finite-difference gradient of the solved
    /// objective at the returned configuration.
    double stationarity_residual = 0.0;
    /// Absolute difference between the reported value and an independent
    /// re-evaluation along a second route.
    double cross_check_delta = 0.0;
};

struct ConstrainedResult {
    QuantizerSet set;
    double error = 0.0;
    SolveReport report;
};

struct SolverFailure : std::runtime_error {
    explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyquant
