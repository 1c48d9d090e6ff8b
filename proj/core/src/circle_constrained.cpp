#include "polyquant/circle_constrained.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polyquant/nelder_mead.hpp"

namespace polyquant {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPenalty = 1e9;
constexpr int kRestarts = 5;

double group_scale(int k) { return 2.0 * std::sin(kPi / k); }

/// Distortion of the given sites over L_1 with density 1/k.
double side_group_value(const RegularPolygon& poly, const std::vector<Point>& sites) {
    SupportSegment l1 = make_support(poly.side(1), 1.0 / poly.k, 1);
    double value = 0.0;
    for (const SegmentCell& cell : segment_cells(l1.seg, sites))
        value += segment_distortion_exact(l1.seg, cell.t0, cell.t1,
                                          sites[static_cast<std::size_t>(cell.site)], l1.density,
                                          l1.arclength_scale);
    return value;
}

/// Expands the folded free parameters into the full ordered angle vector.
/// `fixed_ends` marks circumcircle groups, whose first/last angles sit at the
/// vertices; interior angles mirror about 3*pi/2 with an odd middle pinned.
std::vector<double> unfold_angles(int k, int ell, bool fixed_ends,
                                  const std::vector<double>& free_params) {
    std::vector<double> thetas(static_cast<std::size_t>(ell));
    const double lo = arc_theta_lo(k);
    const double hi = arc_theta_hi(k);
    const double mid = 1.5 * kPi;
    int first = 0;
    int count = ell;
    if (fixed_ends) {
        thetas.front() = lo;
        thetas.back() = hi;
        first = 1;
        count = ell - 2;
    }
    for (int j = 0; j < count / 2; ++j) {
        double v = free_params[static_cast<std::size_t>(j)];
        thetas[static_cast<std::size_t>(first + j)] = v;
        thetas[static_cast<std::size_t>(first + count - 1 - j)] = 2.0 * mid - v;
    }
    if (count % 2 == 1) thetas[static_cast<std::size_t>(first + count / 2)] = mid;
    return thetas;
}

double angle_penalty(int k, const std::vector<double>& thetas, bool open_arc) {
    const double lo = arc_theta_lo(k);
    const double hi = arc_theta_hi(k);
    double violation = 0.0;
    for (std::size_t j = 0; j + 1 < thetas.size(); ++j)
        violation += std::max(0.0, thetas[j] - thetas[j + 1] + 1e-9);
    if (open_arc && !thetas.empty()) {
        violation += std::max(0.0, lo - thetas.front() + 1e-9);
        violation += std::max(0.0, thetas.back() - hi + 1e-9);
    }
    return violation;
}

struct GroupProblem {
    const RegularPolygon& poly;
    int ell;
    bool circum;  // circumcircle (endpoints fixed) vs incircle (all free)

    std::vector<Point> sites_for(const std::vector<double>& thetas) const {
        std::vector<Point> sites;
        if (!circum) {
            sites.push_back(poly.vertex(1));
            sites.push_back(poly.vertex(2));
        }
        double r = circum ? 1.0 : poly.inradius();
        for (double th : thetas) sites.push_back({r * std::cos(th), r * std::sin(th)});
        return sites;
    }

    double value(const std::vector<double>& thetas) const {
        return side_group_value(poly, sites_for(thetas));
    }

    double folded_objective(const std::vector<double>& free_params) const {
        std::vector<double> thetas = unfold_angles(poly.k, ell, circum, free_params);
        double violation = angle_penalty(poly.k, thetas, !circum);
        if (violation > 0.0) return kPenalty * (1.0 + violation);
        return value(thetas);
    }

    /// Objective over the full interior angle vector, used for the
    /// stationarity check (no symmetry assumption).
    double full_objective(const std::vector<double>& interior) const {
        std::vector<double> thetas;
        if (circum) {
            thetas.push_back(arc_theta_lo(poly.k));
            thetas.insert(thetas.end(), interior.begin(), interior.end());
            thetas.push_back(arc_theta_hi(poly.k));
        } else {
            thetas = interior;
        }
        double violation = angle_penalty(poly.k, thetas, !circum);
        if (violation > 0.0) return kPenalty * (1.0 + violation);
        return value(thetas);
    }
};

ArcGroupSolution solve_group(const RegularPolygon& poly, int ell, bool circum) {
    const int k = poly.k;
    GroupProblem problem{poly, ell, circum};

    const int interior = circum ? ell - 2 : ell;
    const int free_dim = interior / 2;
    const double lo = arc_theta_lo(k);
    const double hi = arc_theta_hi(k);

    std::vector<double> base(static_cast<std::size_t>(free_dim));
    if (circum) {
        for (int j = 0; j < free_dim; ++j)
            base[static_cast<std::size_t>(j)] = lo + (j + 1) * (hi - lo) / (ell - 1);
    } else {
        for (int j = 0; j < free_dim; ++j)
            base[static_cast<std::size_t>(j)] = lo + (j + 1) * (hi - lo) / (ell + 1);
    }

    std::vector<double> best = base;
    double best_value = problem.folded_objective(base);
    if (free_dim > 0) {
        std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(k) << 24) ^
                            static_cast<std::uint64_t>(ell) ^ (circum ? 0x1000u : 0u));
        std::uniform_real_distribution<double> jitter(-1.0, 1.0);
        NelderMeadOptions opts;
        opts.initial_step = 0.05 * (hi - lo);
        for (int restart = 0; restart < kRestarts; ++restart) {
            std::vector<double> start = base;
            if (restart > 0)
                for (double& v : start) v += 0.05 * (hi - lo) * jitter(rng);
            auto f = [&](const std::vector<double>& p) { return problem.folded_objective(p); };
            NelderMeadResult nm = nelder_mead(f, start, opts);
            coordinate_polish(f, nm.x);
            double value = problem.folded_objective(nm.x);
            if (value < best_value) {
                best_value = value;
                best = nm.x;
            }
        }
        if (best_value >= kPenalty) throw SolverFailure("arc group solve did not converge");
    }

    ArcGroupSolution solution;
    solution.angles = unfold_angles(k, ell, circum, best);
    solution.sites = problem.sites_for(solution.angles);
    if (!circum) solution.sites.erase(solution.sites.begin(), solution.sites.begin() + 2);
    solution.group_distortion = problem.value(solution.angles);

    std::vector<double> interior_angles;
    if (circum)
        interior_angles.assign(solution.angles.begin() + 1, solution.angles.end() - 1);
    else
        interior_angles = solution.angles;
    solution.stationarity_residual = stationarity_residual(
        [&](const std::vector<double>& p) { return problem.full_objective(p); }, interior_angles);

    // Voronoi boundaries on L_1 between consecutive cells, vertices included.
    std::vector<Point> all_sites = circum ? solution.sites : problem.sites_for(solution.angles);
    if (!circum) {
        // order as A_1, arc sites, A_2 so consecutive pairs are adjacent
        all_sites.clear();
        all_sites.push_back(poly.vertex(1));
        for (const Point& site : solution.sites) all_sites.push_back(site);
        all_sites.push_back(poly.vertex(2));
    }
    Segment l1 = poly.side(1);
    for (std::size_t j = 0; j + 1 < all_sites.size(); ++j) {
        BisectorCrossing crossing =
            voronoi_breakpoint_on_segment(l1, all_sites[j], all_sites[j + 1]);
        if (crossing.t) solution.breakpoints.push_back(l1.at(*crossing.t).x);
    }
    return solution;
}

ConstrainedResult assemble(const RegularPolygon& poly, int n, bool circum) {
    const int k = poly.k;
    std::vector<int> counts = balanced_arc_allocation(k, n);

    std::vector<ArcGroupSolution> cache(static_cast<std::size_t>(*std::max_element(
                                            counts.begin(), counts.end())) + 1);
    std::vector<bool> solved(cache.size(), false);
    auto group = [&](int ni) -> const ArcGroupSolution& {
        auto idx = static_cast<std::size_t>(ni);
        if (!solved[idx]) {
            cache[idx] = circum ? circumcircle_group_solve(k, ni) : incircle_group_solve(k, ni - 2);
            solved[idx] = true;
        }
        return cache[idx];
    };

    ConstrainedResult result;
    result.set = QuantizerSet::vertices(poly);
    RigidMap rotation = rotation_map(k);
    RigidMap to_arc = RigidMap::identity();
    double total = 0.0;
    double residual = 0.0;
    for (int i = 1; i <= k; ++i) {
        const ArcGroupSolution& sol = group(counts[static_cast<std::size_t>(i - 1)]);
        total += sol.group_distortion;
        residual = std::max(residual, sol.stationarity_residual);
        for (const Point& site : sol.sites) result.set.add(to_arc(site), false);
        to_arc = rotation.compose(to_arc);
    }
    result.error = total;
    result.report.value = total;
    result.report.stationarity_residual = residual;
    result.report.cross_check_delta = std::abs(total - distortion(poly, result.set).total);
    return result;
}

}  // namespace

std::vector<int> balanced_arc_allocation(int k, int n) {
    if (n < k) throw std::invalid_argument("balanced_arc_allocation: too few points (n < k)");
    std::vector<int> counts(static_cast<std::size_t>(k), 2);
    int extras = n - k;
    for (int i = 0; i < k; ++i)
        counts[static_cast<std::size_t>(i)] += extras / k + (i < extras % k ? 1 : 0);
    return counts;
}

std::vector<double> circumcircle_breakpoints(int k, const std::vector<double>& angles) {
    if (angles.size() < 2)
        throw std::invalid_argument("circumcircle_breakpoints: need at least two angles");
    if (k < 3) throw std::invalid_argument("circumcircle_breakpoints: k must be at least 3");
    // The bisector of (cos t_j, sin t_j) and (cos t_{j+1}, sin t_{j+1}) meets
    // the line y = -cos(pi/k) at x = cos(pi/k) (sin t_{j+1} - sin t_j) /
    // (cos t_{j+1} - cos t_j); this is the same root the canonical equation
    // yields and it may fall beyond the ends of L_1 for off-optimal angles.
    const double c = std::cos(kPi / k);
    std::vector<double> breakpoints;
    for (std::size_t j = 0; j + 1 < angles.size(); ++j) {
        double dc = std::cos(angles[j + 1]) - std::cos(angles[j]);
        if (std::abs(dc) < 1e-14)
            throw std::invalid_argument(
                "circumcircle_breakpoints: degenerate pair (sites vertically aligned)");
        breakpoints.push_back(c * (std::sin(angles[j + 1]) - std::sin(angles[j])) / dc);
    }
    return breakpoints;
}

ArcGroupSolution circumcircle_group_solve(int k, int ell) {
    if (ell < 2) throw std::invalid_argument("circumcircle_group_solve: ell must be at least 2");
    RegularPolygon poly = make_polygon(k);
    if (ell == 2) {
        ArcGroupSolution sol;
        sol.angles = {arc_theta_lo(k), arc_theta_hi(k)};
        sol.sites = {poly.vertex(1), poly.vertex(2)};
        sol.breakpoints = {0.0};
        double s = std::sin(kPi / k);
        sol.group_distortion = group_scale(k) * s * s / (3.0 * k);
        sol.stationarity_residual = 0.0;
        return sol;
    }
    return solve_group(poly, ell, true);
}

ArcGroupSolution incircle_group_solve(int k, int ell) {
    if (ell < 0) throw std::invalid_argument("incircle_group_solve: ell must be nonnegative");
    RegularPolygon poly = make_polygon(k);
    if (ell == 0) {
        ArcGroupSolution sol;
        sol.breakpoints = {0.0};
        double s = std::sin(kPi / k);
        sol.group_distortion = group_scale(k) * s * s / (3.0 * k);
        sol.stationarity_residual = 0.0;
        return sol;
    }
    return solve_group(poly, ell, false);
}

ConstrainedResult circumcircle_optimal_set(int k, int n) {
    if (n < k) throw std::invalid_argument("circumcircle_optimal_set: too few points (n < k)");
    return assemble(make_polygon(k), n, true);
}

ConstrainedResult incircle_optimal_set(int k, int n) {
    if (n < k) throw std::invalid_argument("incircle_optimal_set: too few points (n < k)");
    return assemble(make_polygon(k), n, false);
}

}  // namespace polyquant
