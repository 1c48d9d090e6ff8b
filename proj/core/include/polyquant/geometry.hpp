#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polyquant {

/// Planar point with unit-circumradius coordinates.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double norm(Point p);
double distance(Point a, Point b);

/// Oriented segment, parametrized as seg(t) = t*q + (1-t)*p for t in [0,1].
struct Segment {
    Point p;
    Point q;

    Point at(double t) const { return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}; }
    double length() const;
};

/// Arc of a circle centered at the origin, traversed from theta_begin to theta_end.
struct CircularArc {
    double radius = 1.0;
    double theta_begin = 0.0;
    double theta_end = 0.0;

    Point at(double theta) const;
    Point begin_point() const { return at(theta_begin); }
    Point end_point() const { return at(theta_end); }
};

/// Affine isometry p -> M p + t with orthogonal M = (a b; c d).
struct RigidMap {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;
    Point t{0.0, 0.0};

    Point operator()(Point p) const {
        return {a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y};
    }

    /// this ∘ inner (applies inner first).
    RigidMap compose(const RigidMap& inner) const;
    RigidMap inverse() const;
    RigidMap power(int n) const;

    static RigidMap identity() { return {}; }
};

enum class Constraint {
    Unconstrained,
    Circumcircle,
    Incircle,
    DiagonalShort,  // hexagon diagonal A6A4
    DiagonalLong,   // hexagon diagonal A1A4
};

std::string constraint_name(Constraint c);
Constraint constraint_from_name(const std::string& name);

/// Regular k-gon inscribed in the unit circle, side A1A2 horizontal and lowest.
/// Vertex indices are 1-based throughout to match A_1..A_k.
struct RegularPolygon {
    int k = 0;
    std::vector<Point> vertices;  // A_1..A_k
    double side_length = 0.0;

    /// A_j with 1-based j, wrapping modulo k (vertex(k+1) == vertex(1)).
    Point vertex(int j) const;
    /// L_j = segment A_j -> A_{j+1}, 1-based j.
    Segment side(int j) const;
    double inradius() const;
};

/// Builds the regular k-gon with A_j = (sin(pi(2j-3)/k), -cos(pi(2j-3)/k)).
RegularPolygon make_polygon(int k);

/// Rotation about the origin by 2*pi/k; maps A_j to A_{j+1} and L_j to L_{j+1}.
RigidMap rotation_map(int k);

/// Hexagon isometry carrying triangle A6 A4 A5 onto the reference triangle G H I.
RigidMap isometry_u();
RigidMap isometry_u_inverse();

/// Reflection through the origin.
Point reflection_f(Point p);

/// Reference triangle for the short-diagonal reduction.
Point triangle_g();  // (-sqrt(3)/2, 0)
Point triangle_h();  // ( sqrt(3)/2, 0)
Point triangle_i();  // (0, 1/2)
Segment segment_gi();  // parametrized from I (t=0) to G (t=1)
Segment segment_hi();  // parametrized from H (t=0) to I (t=1)
Segment segment_gh();  // parametrized from G (t=0) to H (t=1)

/// The curve the free quantizer points are confined to.
struct ConstraintCurve {
    std::vector<CircularArc> arcs;
    std::vector<Segment> segments;
};

/// Arcs S_1..S_k for the circle constraints, the canonical diagonal for the
/// diagonal constraints, and the polygon sides for the unconstrained case.
ConstraintCurve constraint_curve(const RegularPolygon& poly, Constraint c);

/// Angular span of the arc over side L_1: [3pi/2 - pi/k, 3pi/2 + pi/k].
double arc_theta_lo(int k);
double arc_theta_hi(int k);

/// Symmetries of the polygon that fix the constraint set, used to align
/// quantizers before comparing them.
std::vector<RigidMap> constraint_symmetries(const RegularPolygon& poly, Constraint c);

}  // namespace polyquant
