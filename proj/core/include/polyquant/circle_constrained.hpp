#pragma once

#include <vector>

#include "polyquant/measure.hpp"
#include "polyquant/solver_common.hpp"

namespace polyquant {

/// Solved configuration of one arc group over side L_1.
struct ArcGroupSolution {
    std::vector<double> angles;       // theta_1..theta_ell, strictly increasing
    std::vector<Point> sites;
    std::vector<double> breakpoints;  // Voronoi boundaries on L_1, as x-coordinates
    double group_distortion = 0.0;
    double stationarity_residual = 0.0;
};

/// Per-arc point counts: sum n_i = n + k with n_i >= 2 and |n_i - n_j| <= 1;
/// extras go to the lowest-index arcs.
std::vector<int> balanced_arc_allocation(int k, int n);

/// x-coordinates where the bisectors of consecutive circumcircle sites cross
/// L_1, computed from the geometric bisector (equivalent to the closed form
/// for the hexagon).
std::vector<double> circumcircle_breakpoints(int k, const std::vector<double>& angles);

/// Optimal placement of ell sites on arc S_1 (endpoints pinned at the
/// vertices); the group distortion is integrated over L_1.
ArcGroupSolution circumcircle_group_solve(int k, int ell);

/// Optimal placement of ell free sites strictly inside the incircle arc over
/// L_1; the group distortion includes the cells of vertices A_1 and A_2
/// restricted to L_1, so group sums partition V_n exactly. ell = 0 is the
/// vertex-only side.
ArcGroupSolution incircle_group_solve(int k, int ell);

ConstrainedResult circumcircle_optimal_set(int k, int n);
ConstrainedResult incircle_optimal_set(int k, int n);

}  // namespace polyquant
