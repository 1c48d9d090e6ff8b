#include <cmath>
#include <random>

#include <doctest.h>

#include "polyquant/measure.hpp"
#include "polyquant/oracle.hpp"
#include "polyquant/unconstrained.hpp"

using namespace polyquant;

namespace {
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
const double kSqrt3 = std::sqrt(3.0);

QuantizerSet random_quantizer(std::mt19937_64& rng, int free_points, const RegularPolygon& poly) {
    QuantizerSet set = QuantizerSet::vertices(poly);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (int i = 0; i < free_points; ++i) {
        double r = std::sqrt(radius(rng));
        double th = angle(rng);
        set.add({r * std::cos(th), r * std::sin(th)}, false);
    }
    return set;
}
}  // namespace

TEST_CASE("rho is the squared Euclidean distance") {
    auto hexagon = make_polygon(6);
    CHECK(close(rho(hexagon.vertex(1), hexagon.vertex(2)), 1.0, 1e-14));
    CHECK(close(rho({0, 0}, {0, 1}), 1.0, 0.0));
    CHECK(close(rho(hexagon.vertex(1), hexagon.vertex(4)), 4.0, 1e-14));
    CHECK(rho({0.25, -0.5}, {0.25, -0.5}) == 0.0);
}

TEST_CASE("segment_distortion_exact integrates the quadratic integrand exactly") {
    auto hexagon = make_polygon(6);
    Segment l1 = hexagon.side(1);
    CHECK(close(segment_distortion_exact(l1, 0.0, 0.5, hexagon.vertex(1), 1.0 / 6, 1.0),
                1.0 / 144.0, 1e-16));
    CHECK(segment_distortion_exact(l1, 0.3, 0.3, hexagon.vertex(1), 1.0 / 6, 1.0) == 0.0);
    // midpoint site over the whole side: two symmetric halves of integral t^2
    CHECK(close(segment_distortion_exact(l1, 0.0, 1.0, {0.0, -kSqrt3 / 2}, 1.0 / 6, 1.0),
                1.0 / 72.0, 1e-16));
    CHECK_THROWS_AS(segment_distortion_exact(l1, 0.7, 0.2, hexagon.vertex(1), 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("voronoi_breakpoint_on_segment solves the canonical equation") {
    auto hexagon = make_polygon(6);
    Segment l1 = hexagon.side(1);

    // symmetric sites about the midpoint
    auto mid = voronoi_breakpoint_on_segment(l1, hexagon.vertex(1), hexagon.vertex(2));
    REQUIRE(mid.t.has_value());
    CHECK(close(*mid.t, 0.5, 1e-14));

    // triangle: bisector of A_1 and the center crosses L_1 at t = 1/3
    auto triangle = make_polygon(3);
    auto third = voronoi_breakpoint_on_segment(triangle.side(1), triangle.vertex(1), {0.0, 0.0});
    REQUIRE(third.t.has_value());
    CHECK(close(*third.t, 1.0 / 3.0, 1e-14));

    // bisector outside the segment: the nearer site dominates
    auto off = voronoi_breakpoint_on_segment(l1, hexagon.vertex(1), {2.0, -kSqrt3 / 2});
    CHECK_FALSE(off.t.has_value());
    CHECK(off.first_site_dominates);

    CHECK_THROWS_AS(voronoi_breakpoint_on_segment(l1, hexagon.vertex(1), hexagon.vertex(1)),
                    std::invalid_argument);
}

TEST_CASE("distortion reproduces the vertex-set golden values") {
    auto hexagon = make_polygon(6);
    CHECK(close(distortion(hexagon, QuantizerSet::vertices(hexagon)).total, 1.0 / 12.0, 1e-15));
    CHECK_THROWS_AS(distortion(hexagon, QuantizerSet{}), std::invalid_argument);
}

TEST_CASE("triangle distortions match the four-point analysis") {
    // The triangle analysis weighs each side by dt alone; its headline values
    // 1/2 and 9/16 sit a factor 2 sin(pi/3) above the arclength convention.
    auto triangle = make_polygon(3);
    std::vector<SupportSegment> unit_weight;
    for (int j = 1; j <= 3; ++j) unit_weight.push_back({triangle.side(j), 1.0, 1.0, j});

    QuantizerSet center = QuantizerSet::vertices(triangle);
    center.add({0.0, 0.0}, false);
    CHECK(close(distortion(unit_weight, center).total, 0.5, 1e-15));

    QuantizerSet midpoint = QuantizerSet::vertices(triangle);
    midpoint.add({0.0, -0.5}, false);
    CHECK(close(distortion(unit_weight, midpoint).total, 9.0 / 16.0, 1e-15));

    // arclength-weighted values scale by exactly 2 sin(pi/3) = sqrt(3)
    CHECK(close(distortion(triangle, center).total * kSqrt3, 0.5, 1e-15));
    CHECK(close(distortion(triangle, midpoint).total * kSqrt3, 9.0 / 16.0, 1e-15));
}

TEST_CASE("restricted_distortion handles sub-supports and the Q measure") {
    CHECK(restricted_distortion({}, QuantizerSet{}) == 0.0);

    // V_5(Q) for the five-point triangle configuration
    QuantizerSet gamma5;
    gamma5.add(triangle_g(), true);
    gamma5.add(triangle_h(), true);
    gamma5.add(triangle_i(), true);
    gamma5.add({-0.5, 0.0}, false);
    gamma5.add({0.5, 0.0}, false);
    CHECK(close(restricted_distortion(triangle_q_support(), gamma5), (2.0 - kSqrt3) / 6.0, 1e-15));
}

TEST_CASE("equally spaced side points achieve the closed-form side distortion") {
    for (int k = 3; k <= 12; ++k) {
        auto poly = make_polygon(k);
        double s = std::sin(std::numbers::pi / k);
        for (int m = 2; m <= 6; ++m) {
            QuantizerSet sites;
            for (Point p : side_points(k, m)) sites.add(p, false);
            std::vector<SupportSegment> l1{make_support(poly.side(1), 1.0 / k, 1)};
            double expected = 2.0 * s * s * s / (3.0 * k * (m - 1.0) * (m - 1.0));
            CHECK(close(restricted_distortion(l1, sites), expected, 1e-12));
        }
    }
}

TEST_CASE("distortion is invariant under the polygon rotation") {
    std::mt19937_64 rng(101);
    for (int k : {3, 5, 6}) {
        auto poly = make_polygon(k);
        auto rot = rotation_map(k);
        for (int trial = 0; trial < 10; ++trial) {
            QuantizerSet set = random_quantizer(rng, 4, poly);
            QuantizerSet rotated;
            for (std::size_t i = 0; i < set.size(); ++i)
                rotated.add(rot(set.points[i]), set.conditional[i]);
            double direct = distortion(poly, set).total;
            double turned = distortion(poly, rotated).total;
            CHECK(close(direct, turned, 1e-12));
        }
    }
}

TEST_CASE("breakdown totals add up and stay nonnegative") {
    std::mt19937_64 rng(202);
    auto hexagon = make_polygon(6);
    for (int trial = 0; trial < 10; ++trial) {
        QuantizerSet set = random_quantizer(rng, 6, hexagon);
        DistortionBreakdown breakdown = distortion(hexagon, set);
        double sum = 0.0;
        for (const auto& [id, value] : breakdown.per_segment) {
            CHECK(value >= 0.0);
            sum += value;
        }
        CHECK(close(sum, breakdown.total, 1e-12));
    }
}

TEST_CASE("exact integration agrees with a dense Riemann sum") {
    std::mt19937_64 rng(303);
    auto hexagon = make_polygon(6);
    auto support = polygon_support(hexagon);
    for (int trial = 0; trial < 3; ++trial) {
        QuantizerSet set = random_quantizer(rng, 4, hexagon);
        double exact = distortion(support, set).total;
        double sampled = sampled_distortion(support, set, 100000);
        CHECK(close(sampled / exact, 1.0, 1e-6));
    }
}

TEST_CASE("normalized polygon support carries unit mass") {
    for (int k : {3, 5, 8}) {
        auto poly = make_polygon(k);
        double mass = 0.0;
        for (const SupportSegment& piece : polygon_support(poly, true))
            mass += piece.density * piece.arclength_scale;
        CHECK(close(mass, 1.0, 1e-12));
        // paper convention: mass 2 sin(pi/k)
        double paper_mass = 0.0;
        for (const SupportSegment& piece : polygon_support(poly))
            paper_mass += piece.density * piece.arclength_scale;
        CHECK(close(paper_mass, poly.side_length, 1e-12));
    }
}

TEST_CASE("quantizer sets deduplicate shared vertices") {
    auto hexagon = make_polygon(6);
    QuantizerSet set = QuantizerSet::vertices(hexagon);
    set.add(hexagon.vertex(1), false);  // duplicate, flag must stay conditional
    CHECK(set.size() == 6);
    CHECK(set.conditional[0]);
    CHECK(set.free_count() == 0);

    // every produced point stays within the closed unit disk
    for (const Point& p : set.points) CHECK(norm(p) <= 1.0 + 1e-12);
}
