#pragma once

#include <cstdint>
#include <vector>

#include "polyquant/measure.hpp"
#include "polyquant/solver_common.hpp"

namespace polyquant {

/// Number of quantizer points per side (endpoints included): n_j >= 2 with
/// sum_j (n_j - 1) = n, each vertex shared by two sides counted once.
struct Allocation {
    std::vector<int> counts;
};

/// All allocations with |n_i - n_j| <= 1; there are C(k, n mod k) of them
/// when k does not divide n, otherwise exactly one. The first entry is the
/// canonical representative (extra points on the lowest-index sides).
std::vector<Allocation> balanced_allocations(int k, int n);

/// m equally spaced points on L_1, endpoints A_1 and A_2 included:
/// ((2j - m - 1) sin(pi/k)/(m - 1), -cos(pi/k)) for 1 <= j <= m.
std::vector<Point> side_points(int k, int m);

/// sum_j 2 sin^3(pi/k) / (3 k (n_j - 1)^2).
double allocation_error(int k, const Allocation& alloc);

/// Error of the balanced allocation for n points without materializing it.
double unconstrained_error(int k, std::int64_t n);

struct OptimalSet {
    QuantizerSet set;
    Allocation allocation;
    double error = 0.0;
};

/// Canonical optimal set of n points: balanced allocation with extras on the
/// lowest-index sides, equally spaced points per side. The one exception is
/// k = 3, n = 4, where the circumcenter beats every side placement and the
/// returned error is the triangle value 1/2.
OptimalSet optimal_set(int k, int n);

/// Assembles the point set for an arbitrary admissible allocation.
QuantizerSet allocation_points(const RegularPolygon& poly, const Allocation& alloc);

struct DimensionReport {
    double dimension_estimate = 0.0;    // two-point log slope of V_n ~ C n^-2
    double log_ratio_at_n_max = 0.0;    // 2 log n / (-log V_n) at n = n_max
    double coefficient_estimate = 0.0;  // n^2 V_n at n = n_max
    double coefficient_closed_form = 0.0;  // (2/3) k^2 sin^3(pi/k)
    double v_infinity = 0.0;
    std::vector<std::pair<std::int64_t, double>> samples;  // (n, V_n)
};

DimensionReport dimension_and_coefficient(int k, std::int64_t n_max);

}  // namespace polyquant
