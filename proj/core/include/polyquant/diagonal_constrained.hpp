#pragma once

#include <vector>

#include "polyquant/measure.hpp"
#include "polyquant/solver_common.hpp"

namespace polyquant {

/// Solved triangle problem for the measure Q on GI u HI with free points on GH.
struct TriangleQSolution {
    int m = 0;                          // total points, conditional triple included
    std::vector<double> left_coords;    // a(1..n1) on GH, a(1) = -sqrt(3)/2
    std::vector<double> right_coords;   // mirror side, increasing, last = sqrt(3)/2
    std::vector<double> breakpoints;    // d(1..n1): parameters on GI
    double value = 0.0;                 // V_m(Q)
    double stationarity_residual = 0.0;
};

/// Conditional optimal set of m points for Q with the conditional triple
/// {G, H, I} and the constraint GH. The left group takes the extra point when
/// the split is odd.
TriangleQSolution triangle_q_solve(int m);

/// Hexagon short-diagonal solve through the triangle reduction:
/// alpha_n = U^{-1}(gamma_{n-3}) u beta and V_n = V_{n-3}(Q)/3 + 1/18.
ConstrainedResult short_diagonal_optimal_set(int n);

/// Left group of the long-diagonal configuration: q collinear points on
/// y = sqrt(3) x starting at A_1, equally spaced with gap (2-sqrt(3))/(2q-1).
struct LongDiagonalGroup {
    int q = 0;
    std::vector<double> coords;  // a_1..a_q with a_1 = -1/2
    double value = 0.0;          // restricted distortion over L_1
};

LongDiagonalGroup long_diagonal_group(int q);

/// The group's restricted distortion over L_1 evaluated from arbitrary
/// coordinates by the generic bisector machinery, cells capped at
/// x = 7/2 - 2 sqrt(3) (midpoint of L_1 for a single-point group).
double long_diagonal_group_value(const std::vector<double>& coords);

/// V(P; {A_2, A_3, A_5, A_6}, L) with the four corner cells capped at the
/// diagonal crossover: (13/36)(48 sqrt(3) - 83).
double long_diagonal_base_constant();

/// Support pieces realizing the base constant through restricted_distortion.
std::vector<SupportSegment> long_diagonal_base_support();

/// Hexagon long-diagonal solve: closed-form groups mirrored through the
/// origin, assembled per the fixed-crossover accounting.
ConstrainedResult long_diagonal_optimal_set(int n);

}  // namespace polyquant
