// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polyquant/circle_constrained.hpp"
#include "polyquant/diagonal_constrained.hpp"
#include "polyquant/oracle.hpp"
#include "polyquant/unconstrained.hpp"

using namespace polyquant;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kPi = std::numbers::pi;

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
    void expect(double got, double want, double tol, const std::string& what) {
        if (std::abs(got - want) > tol && ok) {
            ok = false;
            char buffer[160];
            std::snprintf(buffer, sizeof(buffer), "%s: got %.12g, want %.12g (tol %.1g)",
                          what.c_str(), got, want, tol);
            detail = buffer;
        }
    }
};

bool contains_point(const QuantizerSet& set, Point p, double tol) {
    for (const Point& q : set.points)
        if (distance(p, q) <= tol) return true;
    return false;
}

void criterion_1_unconstrained_goldens(Criterion& c) {
    c.expect(optimal_set(6, 6).error, 1.0 / 12.0, 1e-12, "V_6");
    c.expect(optimal_set(6, 7).error, 7.0 / 96.0, 1e-12, "V_7");
    c.expect(optimal_set(6, 8).error, 1.0 / 16.0, 1e-12, "V_8");
    c.expect(optimal_set(6, 9).error, 5.0 / 96.0, 1e-12, "V_9");
    auto triangle4 = optimal_set(3, 4);
    c.expect(triangle4.error, 0.5, 1e-12, "triangle V_4");
    c.require(contains_point(triangle4.set, {0.0, 0.0}, 1e-12), "triangle extra point at origin");
}

void criterion_2_side_closed_form(Criterion& c) {
    for (int k = 3; k <= 12; ++k) {
        auto poly = make_polygon(k);
        std::vector<SupportSegment> l1{make_support(poly.side(1), 1.0 / k, 1)};
        double s = std::sin(kPi / k);
        for (int m = 2; m <= 6; ++m) {
            QuantizerSet sites;
            for (Point p : side_points(k, m)) sites.add(p, false);
            double expected = 2.0 * s * s * s / (3.0 * k * (m - 1.0) * (m - 1.0));
            c.expect(restricted_distortion(l1, sites), expected, 1e-12,
                     "k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }
}

void criterion_3_circumcircle(Criterion& c) {
    auto seven = circumcircle_optimal_set(6, 7);
    c.expect(seven.error, kSqrt3 / 2.0 - 19.0 / 24.0, 1e-10, "V_7");

    auto three = circumcircle_group_solve(6, 3);
    c.require(distance(three.sites[1], {0.0, -1.0}) <= 1e-6, "ell=3 interior site at (0,-1)");

    auto four = circumcircle_group_solve(6, 4);
    c.expect(std::abs(four.sites[1].x), 0.181083, 5e-5, "ell=4 site |x|");
    c.expect(four.sites[1].y, -0.983468, 5e-5, "ell=4 site y");
    c.expect(std::abs(four.sites[2].x), 0.181083, 5e-5, "ell=4 mirror site |x|");
    double closed = (27.0 * std::pow(3.0, 2.0 / 3.0) - 17.0 - 27.0 * std::cbrt(3.0)) / 72.0;
    c.expect(four.group_distortion, closed, 1e-6, "ell=4 group value");

    OracleConfig config;
    auto hexagon = make_polygon(6);
    for (int n = 8; n <= 13; ++n) {
        double solver = circumcircle_optimal_set(6, n).error;
        double oracle = global_minimize(Constraint::Circumcircle, n - 6, hexagon, config).value;
        c.expect(solver, oracle, 1e-6, "V_" + std::to_string(n) + " vs oracle");
    }
}

void criterion_4_incircle(Criterion& c) {
    for (int n = 6; n <= 12; ++n)
        c.expect(incircle_optimal_set(6, n).error, unconstrained_error(6, n), 1e-10,
                 "V_" + std::to_string(n) + " equals unconstrained");
    auto thirteen = incircle_optimal_set(6, 13);
    c.expect(thirteen.error, 0.0189319, 5e-6, "V_13");
    auto pair = incircle_group_solve(6, 2);
    c.expect(std::abs(pair.sites[0].x), 0.162514, 5e-5, "ell=2 site |x|");
    c.expect(pair.sites[0].y, -0.85064, 5e-5, "ell=2 site y");
    c.expect(std::abs(pair.sites[1].x), 0.162514, 5e-5, "ell=2 mirror |x|");
}

void criterion_5_short_diagonal(Criterion& c) {
    c.expect(short_diagonal_optimal_set(7).error, (9.0 - 2.0 * kSqrt3) / 72.0, 1e-10, "V_7");
    c.expect(short_diagonal_optimal_set(8).error, (3.0 - kSqrt3) / 18.0, 1e-10, "V_8");

    auto six = triangle_q_solve(6);
    c.expect(six.left_coords[1], -0.639488, 5e-5, "a(2)");
    c.expect(six.left_coords[2], -0.41295, 5e-5, "a(3)");
    c.expect(six.value, 0.0422866, 5e-6, "V_6(Q)");

    c.expect(short_diagonal_optimal_set(9).error, 0.0696511, 5e-6, "V_9");
    c.expect(short_diagonal_optimal_set(10).error, 0.0688606, 5e-6, "V_10");
}

void criterion_6_long_diagonal(Criterion& c) {
    auto two = long_diagonal_group(2);
    c.expect(two.coords[1], 1.0 / 6.0 - 1.0 / kSqrt3, 1e-12, "q=2 coordinate");
    c.expect(two.value, -(28.0 / 81.0) * (15.0 * kSqrt3 - 26.0), 1e-12, "q=2 value");

    c.expect(long_diagonal_optimal_set(7).error, (4512.0 * kSqrt3 - 7765.0) / 648.0, 1e-10,
             "V_7");
    c.expect(long_diagonal_optimal_set(8).error, 1937.0 / 324.0 - 92.0 / (9.0 * kSqrt3), 1e-10,
             "V_8");

    QuantizerSet corners;
    auto hexagon = make_polygon(6);
    for (int j : {2, 3, 5, 6}) corners.add(hexagon.vertex(j), true);
    c.expect(restricted_distortion(long_diagonal_base_support(), corners),
             long_diagonal_base_constant(), 1e-12, "base constant");
}

void criterion_7_dimension(Criterion& c) {
    for (int k : {3, 6, 12}) {
        auto report = dimension_and_coefficient(k, 100LL * k);
        c.require(std::abs(report.coefficient_estimate / report.coefficient_closed_form - 1.0) <=
                      0.02,
                  "coefficient within 2% for k=" + std::to_string(k));
        c.require(std::abs(report.dimension_estimate - 1.0) <= 0.05,
                  "dimension within 5% for k=" + std::to_string(k));
    }
}

void criterion_8_property_suite(Criterion& c) {
    // allocation balance by exhaustive enumeration
    for (int k = 3; k <= 6; ++k)
        for (int n = k; n <= k + 8; ++n)
            c.require(exhaustive_allocation_check(k, n, Constraint::Unconstrained)
                          .balanced_are_minimizers,
                      "balanced allocations minimize k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    for (int n = 6; n <= 14; ++n) {
        c.require(
            exhaustive_allocation_check(6, n, Constraint::Circumcircle).balanced_are_minimizers,
            "balanced circumcircle arcs n=" + std::to_string(n));
        c.require(exhaustive_allocation_check(6, n, Constraint::Incircle).balanced_are_minimizers,
                  "balanced incircle arcs n=" + std::to_string(n));
    }

    // rotation invariance of the distortion
    auto hexagon = make_polygon(6);
    auto rotation = rotation_map(6);
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> radius(0.1, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        QuantizerSet set = QuantizerSet::vertices(hexagon);
        for (int i = 0; i < 4; ++i) {
            double r = radius(rng);
            double th = angle(rng);
            set.add({r * std::cos(th), r * std::sin(th)}, false);
        }
        QuantizerSet turned;
        for (std::size_t i = 0; i < set.size(); ++i)
            turned.add(rotation(set.points[i]), set.conditional[i]);
        c.require(std::abs(distortion(hexagon, set).total - distortion(hexagon, turned).total) <=
                      1e-12,
                  "rotation invariance");
    }

    // solved angle vectors symmetric about 3 pi / 2, residuals below 1e-7,
    // and strictly decreasing error sequences per regime
    for (int ell = 3; ell <= 6; ++ell) {
        auto sol = circumcircle_group_solve(6, ell);
        c.require(sol.stationarity_residual < 1e-7, "circumcircle residual");
        for (std::size_t j = 0; j < sol.angles.size(); ++j)
            c.require(std::abs(sol.angles[j] + sol.angles[sol.angles.size() - 1 - j] -
                               3.0 * kPi) <= 1e-8,
                      "circumcircle angle symmetry");
    }
    for (int ell = 1; ell <= 4; ++ell) {
        auto sol = incircle_group_solve(6, ell);
        c.require(sol.stationarity_residual < 1e-7, "incircle residual");
        for (std::size_t j = 0; j < sol.angles.size(); ++j)
            c.require(std::abs(sol.angles[j] + sol.angles[sol.angles.size() - 1 - j] -
                               3.0 * kPi) <= 1e-8,
                      "incircle angle symmetry");
    }

    std::vector<std::function<double(int)>> regimes{
        [](int n) { return unconstrained_error(6, n); },
        [](int n) { return circumcircle_optimal_set(6, n).error; },
        [](int n) { return incircle_optimal_set(6, n).error; },
        [](int n) { return short_diagonal_optimal_set(n).error; },
        [](int n) { return long_diagonal_optimal_set(n).error; }};
    for (const auto& regime : regimes) {
        double previous = 1e300;
        for (int n = 6; n <= 12; ++n) {
            double value = regime(n);
            c.require(value < previous, "V_n strictly decreasing");
            previous = value;
        }
    }

    for (int n = 6; n <= 14; ++n)
        c.require(circumcircle_optimal_set(6, n).error >= unconstrained_error(6, n) - 1e-12,
                  "circumcircle dominates unconstrained at n=" + std::to_string(n));

    for (int n = 7; n <= 13; ++n) {
        c.require(circumcircle_optimal_set(6, n).report.stationarity_residual < 1e-7,
                  "circumcircle solve residual");
        c.require(incircle_optimal_set(6, n).report.stationarity_residual < 1e-7,
                  "incircle solve residual");
        c.require(short_diagonal_optimal_set(n).report.stationarity_residual < 1e-7,
                  "short-diagonal solve residual");
        c.require(long_diagonal_optimal_set(n).report.stationarity_residual < 1e-7,
                  "long-diagonal solve residual");
    }

    // isometry pullback identity on random triangle quantizers
    std::vector<SupportSegment> l45{make_support(hexagon.side(4), 1.0 / 6.0, 4),
                                    make_support(hexagon.side(5), 1.0 / 6.0, 5)};
    auto q_support = triangle_q_support();
    auto pullback = isometry_u_inverse();
    std::uniform_real_distribution<double> coord(-kSqrt3 / 2.0, kSqrt3 / 2.0);
    std::uniform_int_distribution<int> extra(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        QuantizerSet gamma;
        gamma.add(triangle_g(), true);
        gamma.add(triangle_h(), true);
        gamma.add(triangle_i(), true);
        for (int i = 0, count = extra(rng); i < count; ++i) gamma.add({coord(rng), 0.0}, false);
        QuantizerSet pulled;
        for (std::size_t i = 0; i < gamma.size(); ++i)
            pulled.add(pullback(gamma.points[i]), gamma.conditional[i]);
        c.require(std::abs(restricted_distortion(l45, pulled) -
                           restricted_distortion(q_support, gamma) / 3.0) <= 1e-10,
                  "pullback identity");
    }
}

void criterion_9_negative_control(Criterion& c) {
    auto hexagon = make_polygon(6);
    auto seven = circumcircle_optimal_set(6, 7);
    QuantizerSet perturbed = seven.set;
    for (std::size_t i = 0; i < perturbed.size(); ++i) {
        if (perturbed.conditional[i]) continue;
        double theta = std::atan2(perturbed.points[i].y, perturbed.points[i].x) + 1e-3;
        perturbed.points[i] = {std::cos(theta), std::sin(theta)};
        break;
    }
    double claimed = oracle_objective(Constraint::Circumcircle, hexagon, perturbed.free_points());
    OracleConfig config;
    auto verdict = verify(Constraint::Circumcircle, hexagon, perturbed, claimed, config);
    c.require(!verdict.passed, "perturbed result must fail verification");

    auto genuine = verify(Constraint::Circumcircle, hexagon, seven.set, seven.error, config);
    c.require(genuine.passed, "genuine result must pass verification");
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Entry> criteria{
        {"1 unconstrained golden values", criterion_1_unconstrained_goldens},
        {"2 equally-spaced side closed form", criterion_2_side_closed_form},
        {"3 circumcircle worked cases + oracle", criterion_3_circumcircle},
        {"4 incircle worked cases", criterion_4_incircle},
        {"5 short diagonal worked cases", criterion_5_short_diagonal},
        {"6 long diagonal closed forms", criterion_6_long_diagonal},
        {"7 dimension and coefficient", criterion_7_dimension},
        {"8 property suite", criterion_8_property_suite},
        {"9 negative control", criterion_9_negative_control},
    };

    int failures = 0;
    for (const Entry& entry : criteria) {
        Criterion c;
        entry.run(c);
        if (c.ok) {
            std::printf("[PASS] criterion %s\n", entry.name);
        } else {
            std::printf("[FAIL] criterion %s: %s\n", entry.name, c.detail.c_str());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
