#pragma once

#include <cstdint>
#include <vector>

#include "polyquant/measure.hpp"
#include "polyquant/solver_common.hpp"
#include "polyquant/unconstrained.hpp"

namespace polyquant {

struct OracleConfig {
    int boundary_samples_per_side = 20000;
    int restarts = 16;
    double perturbation_scale = 0.05;  // fraction of the feasible span
    std::uint64_t seed = 0x5eedULL;
    double value_tolerance = 1e-6;
    double site_tolerance = 1e-4;  // max aligned site displacement
};

struct OracleVerdict {
    double solver_value = 0.0;
    double oracle_value = 0.0;
    double value_delta = 0.0;
    double max_site_displacement = 0.0;
    bool passed = false;
};

/// Riemann estimate of the distortion by uniform-in-t midpoint sampling.
double sampled_distortion(const std::vector<SupportSegment>& support, const QuantizerSet& quantizer,
                          int samples_per_segment);

struct OracleMinimum {
    QuantizerSet set;
    double value = 0.0;
};

/// Multi-start derivative-free minimization over the free sites' constraint
/// coordinates, the conditional vertex set always included. The first start
/// spreads the sites evenly over the constraint; the rest are seeded random
/// configurations. The long-diagonal objective follows the same
/// fixed-crossover accounting as the solver.
OracleMinimum global_minimize(Constraint c, int free_count, const RegularPolygon& poly,
                              const OracleConfig& config = {});

/// Objective the oracle minimizes for a concrete free-site placement.
double oracle_objective(Constraint c, const RegularPolygon& poly,
                        const std::vector<Point>& free_sites);

struct AllocationCheckResult {
    double best_value = 0.0;
    std::vector<std::vector<int>> minimizers;  // per-side or per-arc counts
    bool balanced_are_minimizers = false;
};

/// Enumerates every admissible allocation, evaluates each, and confirms the
/// balanced ones are exactly the minimizers.
AllocationCheckResult exhaustive_allocation_check(int k, int n, Constraint regime);

/// Re-minimizes the same instance and compares values and aligned site
/// positions against the solver output.
OracleVerdict verify(Constraint c, const RegularPolygon& poly, const QuantizerSet& solver_set,
                     double solver_value, const OracleConfig& config = {});

}  // namespace polyquant
