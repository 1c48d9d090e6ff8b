#include "polyquant/diagonal_constrained.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyquant/nelder_mead.hpp"

namespace polyquant {

namespace {

constexpr double kPenalty = 1e9;
constexpr int kRestarts = 5;

const double kSqrt3 = std::sqrt(3.0);

/// Distortion over GI of a left group {(a_i, 0)} competing with I.
/// Coordinates are the full group, a(1) = -sqrt(3)/2 included.
double left_group_gi_value(const std::vector<double>& coords) {
    std::vector<Point> sites;
    sites.reserve(coords.size() + 1);
    for (double a : coords) sites.push_back({a, 0.0});
    sites.push_back(triangle_i());
    SupportSegment gi = make_support(segment_gi(), 0.5, 1);
    double value = 0.0;
    for (const SegmentCell& cell : segment_cells(gi.seg, sites))
        value += segment_distortion_exact(gi.seg, cell.t0, cell.t1,
                                          sites[static_cast<std::size_t>(cell.site)], gi.density,
                                          gi.arclength_scale);
    return value;
}

struct LeftSolve {
    std::vector<double> coords;  // full group, a(1) = -sqrt(3)/2
    double gi_value = 0.0;
    double stationarity_residual = 0.0;
};

double left_objective(const std::vector<double>& free_coords) {
    double prev = -kSqrt3 / 2.0;
    double violation = 0.0;
    for (double a : free_coords) {
        violation += std::max(0.0, prev - a + 1e-9);
        prev = a;
    }
    violation += std::max(0.0, prev + 1e-3);  // stay left of the midline
    if (violation > 0.0) return kPenalty * (1.0 + violation);

    std::vector<double> coords{-kSqrt3 / 2.0};
    coords.insert(coords.end(), free_coords.begin(), free_coords.end());
    return left_group_gi_value(coords);
}

LeftSolve solve_left_group(int count) {
    LeftSolve solve;
    solve.coords = {-kSqrt3 / 2.0};
    if (count == 1) {
        solve.gi_value = left_group_gi_value(solve.coords);
        return solve;
    }

    const double zone_lo = -kSqrt3 / 2.0;
    const double zone_width = 1.0 / kSqrt3;  // up to -1/(2 sqrt(3))
    std::vector<double> base(static_cast<std::size_t>(count - 1));
    for (int j = 0; j < count - 1; ++j)
        base[static_cast<std::size_t>(j)] = zone_lo + (j + 1) * zone_width / count;

    std::vector<double> best = base;
    double best_value = left_objective(base);
    std::mt19937_64 rng(0xD1A60ull ^ static_cast<std::uint64_t>(count));
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    NelderMeadOptions opts;
    opts.initial_step = 0.05 * zone_width;
    for (int restart = 0; restart < kRestarts; ++restart) {
        std::vector<double> start = base;
        if (restart > 0)
            for (double& v : start) v += 0.05 * zone_width * jitter(rng);
        NelderMeadResult nm = nelder_mead(left_objective, start, opts);
        coordinate_polish(left_objective, nm.x);
        double value = left_objective(nm.x);
        if (value < best_value) {
            best_value = value;
            best = nm.x;
        }
    }
    if (best_value >= kPenalty) throw SolverFailure("triangle group solve did not converge");

    solve.coords.insert(solve.coords.end(), best.begin(), best.end());
    solve.gi_value = best_value;
    solve.stationarity_residual = stationarity_residual(left_objective, best);
    return solve;
}

}  // namespace

TriangleQSolution triangle_q_solve(int m) {
    if (m < 3) throw std::invalid_argument("triangle_q_solve: m must be at least 3");
    const int n1 = (m == 3) ? 1 : (m - 1 + 1) / 2;  // extra point to the left group
    const int n2 = m - 1 - n1;

    LeftSolve left = solve_left_group(n1);
    LeftSolve right = (n2 == n1) ? left : solve_left_group(n2);

    TriangleQSolution solution;
    solution.m = m;
    solution.left_coords = left.coords;
    for (auto it = right.coords.rbegin(); it != right.coords.rend(); ++it)
        solution.right_coords.push_back(-*it);
    solution.value = left.gi_value + right.gi_value;
    solution.stationarity_residual =
        std::max(left.stationarity_residual, right.stationarity_residual);

    const auto& a = solution.left_coords;
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        solution.breakpoints.push_back(-(a[j] + a[j + 1]) / kSqrt3);
    double last = a.back();
    solution.breakpoints.push_back((4.0 * last * last + 1.0) / (2.0 - 4.0 * kSqrt3 * last));
    return solution;
}

ConstrainedResult short_diagonal_optimal_set(int n) {
    if (n < 6) throw std::invalid_argument("short_diagonal_optimal_set: n must be at least 6");
    RegularPolygon hexagon = make_polygon(6);
    ConstrainedResult result;
    result.set = QuantizerSet::vertices(hexagon);
    if (n == 6) {
        result.error = 1.0 / 12.0;
        result.report.value = result.error;
        result.report.cross_check_delta =
            std::abs(result.error - distortion(hexagon, result.set).total);
        return result;
    }

    TriangleQSolution tq = triangle_q_solve(n - 3);
    RigidMap pullback = isometry_u_inverse();
    for (std::size_t i = 1; i < tq.left_coords.size(); ++i)
        result.set.add(pullback({tq.left_coords[i], 0.0}), false);
    for (std::size_t i = 0; i + 1 < tq.right_coords.size(); ++i)
        result.set.add(pullback({tq.right_coords[i], 0.0}), false);

    result.error = tq.value / 3.0 + 1.0 / 18.0;
    result.report.value = result.error;
    result.report.stationarity_residual = tq.stationarity_residual / 3.0;
    result.report.cross_check_delta =
        std::abs(result.error - distortion(hexagon, result.set).total);
    return result;
}

double long_diagonal_group_value(const std::vector<double>& coords) {
    if (coords.empty())
        throw std::invalid_argument("long_diagonal_group_value: empty group");
    const double cap = coords.size() >= 2 ? 3.5 - 2.0 * kSqrt3 : 0.0;
    Segment piece{{-0.5, -kSqrt3 / 2.0}, {cap, -kSqrt3 / 2.0}};
    SupportSegment support = make_support(piece, 1.0 / 6.0, 1);
    std::vector<Point> sites;
    sites.reserve(coords.size());
    for (double a : coords) sites.push_back({a, kSqrt3 * a});
    double value = 0.0;
    for (const SegmentCell& cell : segment_cells(support.seg, sites))
        value += segment_distortion_exact(support.seg, cell.t0, cell.t1,
                                          sites[static_cast<std::size_t>(cell.site)],
                                          support.density, support.arclength_scale);
    return value;
}

LongDiagonalGroup long_diagonal_group(int q) {
    if (q < 1) throw std::invalid_argument("long_diagonal_group: q must be at least 1");
    LongDiagonalGroup group;
    group.q = q;
    if (q == 1) {
        group.coords = {-0.5};
        group.value = 1.0 / 144.0;
        return group;
    }
    const double gap = (2.0 - kSqrt3) / (2.0 * q - 1.0);
    for (int i = 1; i <= q; ++i) group.coords.push_back((i - 1) * gap - 0.5);
    group.value = 4.0 * (26.0 - 15.0 * kSqrt3) * (3.0 * (q - 1.0) * q + 1.0) /
                  (9.0 * (1.0 - 2.0 * q) * (1.0 - 2.0 * q));
    return group;
}

double long_diagonal_base_constant() { return 13.0 / 36.0 * (48.0 * kSqrt3 - 83.0); }

std::vector<SupportSegment> long_diagonal_base_support() {
    RegularPolygon hexagon = make_polygon(6);
    const double crossover = 2.0 / (kSqrt3 + 2.0);  // parameter of x = 7/2 - 2 sqrt(3) on L_1
    auto sub = [](Segment s, double t0, double t1) { return Segment{s.at(t0), s.at(t1)}; };
    std::vector<SupportSegment> support;
    support.push_back(make_support(sub(hexagon.side(1), crossover, 1.0), 1.0 / 6.0, 1));
    support.push_back(make_support(hexagon.side(2), 1.0 / 6.0, 2));
    support.push_back(make_support(sub(hexagon.side(3), 0.0, 1.0 - crossover), 1.0 / 6.0, 3));
    support.push_back(make_support(sub(hexagon.side(4), crossover, 1.0), 1.0 / 6.0, 4));
    support.push_back(make_support(hexagon.side(5), 1.0 / 6.0, 5));
    support.push_back(make_support(sub(hexagon.side(6), 0.0, 1.0 - crossover), 1.0 / 6.0, 6));
    return support;
}

ConstrainedResult long_diagonal_optimal_set(int n) {
    if (n < 6) throw std::invalid_argument("long_diagonal_optimal_set: n must be at least 6");
    RegularPolygon hexagon = make_polygon(6);
    ConstrainedResult result;
    result.set = QuantizerSet::vertices(hexagon);
    if (n == 6) {
        result.error = 1.0 / 12.0;
        result.report.value = result.error;
        result.report.cross_check_delta =
            std::abs(result.error - distortion(hexagon, result.set).total);
        return result;
    }

    const int q = (n - 3) / 2;  // ceil((n-4)/2): the left group takes the extra
    const int q2 = n - 4 - q;
    LongDiagonalGroup left = long_diagonal_group(q);
    LongDiagonalGroup right = long_diagonal_group(q2);

    for (std::size_t i = 1; i < left.coords.size(); ++i) {
        double a = left.coords[i];
        result.set.add({a, kSqrt3 * a}, false);
    }
    for (std::size_t i = 1; i < right.coords.size(); ++i) {
        double a = right.coords[i];
        result.set.add(reflection_f({a, kSqrt3 * a}), false);
    }

    result.error = long_diagonal_base_constant() + 2.0 * (left.value + right.value);
    result.report.value = result.error;

    // Stationarity over the interior coordinates of both groups.
    auto objective = [&](const std::vector<double>& free_coords) {
        std::vector<double> lc{-0.5};
        std::vector<double> rc{-0.5};
        for (int i = 0; i < q - 1; ++i) lc.push_back(free_coords[static_cast<std::size_t>(i)]);
        for (int i = 0; i < q2 - 1; ++i)
            rc.push_back(free_coords[static_cast<std::size_t>(q - 1 + i)]);
        return long_diagonal_base_constant() +
               2.0 * (long_diagonal_group_value(lc) + long_diagonal_group_value(rc));
    };
    std::vector<double> free_coords;
    for (std::size_t i = 1; i < left.coords.size(); ++i) free_coords.push_back(left.coords[i]);
    for (std::size_t i = 1; i < right.coords.size(); ++i) free_coords.push_back(right.coords[i]);
    result.report.stationarity_residual = stationarity_residual(objective, free_coords);

    // Second route: the same accounting evaluated by the generic bisector path.
    QuantizerSet corners;
    for (int j : {2, 3, 5, 6}) corners.add(hexagon.vertex(j), true);
    double route_b = restricted_distortion(long_diagonal_base_support(), corners) +
                     2.0 * (long_diagonal_group_value(left.coords) +
                            long_diagonal_group_value(right.coords));
    result.report.cross_check_delta = std::abs(result.error - route_b);
    return result;
}

}  // namespace polyquant
