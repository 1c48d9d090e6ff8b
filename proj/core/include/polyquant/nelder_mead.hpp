#pragma once

#include <functional>
#include <vector>

namespace polyquant {

using Objective = std::function<double(const std::vector<double>&)>;

struct NelderMeadOptions {
    double ftol = 1e-12;       // spread of simplex values
    double xtol = 1e-10;       // simplex edge length
    int max_iterations = 6000;
    double initial_step = 0.02;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Downhill simplex minimization (reflection/expansion/contraction/shrink).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {});

/// A few sweeps of one-dimensional Newton steps from central differences;
/// tightens a minimum already located by the simplex. Steps that do not
/// decrease f are rejected.
void coordinate_polish(const Objective& f, std::vector<double>& x, int sweeps = 4,
                       double fd_step = 1e-5);

/// Central finite-difference gradient.
std::vector<double> finite_difference_gradient(const Objective& f, const std::vector<double>& x,
                                               double h = 1e-6);

/// Max-norm of the central finite-difference gradient.
double stationarity_residual(const Objective& f, const std::vector<double>& x, double h = 1e-6);

}  // namespace polyquant
