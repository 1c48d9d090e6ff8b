#include "polyquant/geometry.hpp"

#include <cmath>
#include <numbers>

namespace polyquant {

namespace {
constexpr double kPi = std::numbers::pi;
}

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Segment::length() const { return distance(p, q); }

Point CircularArc::at(double theta) const {
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

RigidMap RigidMap::compose(const RigidMap& inner) const {
    RigidMap m;
    m.a = a * inner.a + b * inner.c;
    m.b = a * inner.b + b * inner.d;
    m.c = c * inner.a + d * inner.c;
    m.d = c * inner.b + d * inner.d;
    m.t = (*this)(inner.t);
    return m;
}

RigidMap RigidMap::inverse() const {
    // Orthogonal matrix: the inverse of M is its transpose.
    RigidMap m;
    m.a = a;
    m.b = c;
    m.c = b;
    m.d = d;
    m.t = {-(m.a * t.x + m.b * t.y), -(m.c * t.x + m.d * t.y)};
    return m;
}

RigidMap RigidMap::power(int n) const {
    if (n < 0) return inverse().power(-n);
    RigidMap m = identity();
    for (int i = 0; i < n; ++i) m = compose(m);
    return m;
}

std::string constraint_name(Constraint c) {
    switch (c) {
        case Constraint::Unconstrained: return "none";
        case Constraint::Circumcircle: return "circumcircle";
        case Constraint::Incircle: return "incircle";
        case Constraint::DiagonalShort: return "diag-short";
        case Constraint::DiagonalLong: return "diag-long";
    }
    throw std::invalid_argument("unknown constraint tag");
}

Constraint constraint_from_name(const std::string& name) {
    if (name == "none" || name == "unconstrained") return Constraint::Unconstrained;
    if (name == "circumcircle") return Constraint::Circumcircle;
    if (name == "incircle") return Constraint::Incircle;
    if (name == "diag-short") return Constraint::DiagonalShort;
    if (name == "diag-long") return Constraint::DiagonalLong;
    throw std::invalid_argument("unknown constraint: " + name);
}

Point RegularPolygon::vertex(int j) const {
    int i = ((j - 1) % k + k) % k;
    return vertices[static_cast<std::size_t>(i)];
}

Segment RegularPolygon::side(int j) const { return {vertex(j), vertex(j + 1)}; }

double RegularPolygon::inradius() const { return std::cos(kPi / k); }

RegularPolygon make_polygon(int k) {
    if (k < 3) throw std::invalid_argument("make_polygon: k must be at least 3");
    RegularPolygon poly;
    poly.k = k;
    poly.side_length = 2.0 * std::sin(kPi / k);
    poly.vertices.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        double u = kPi * (2 * j - 3) / k;
        poly.vertices.push_back({std::sin(u), -std::cos(u)});
    }
    return poly;
}

RigidMap rotation_map(int k) {
    if (k < 3) throw std::invalid_argument("rotation_map: k must be at least 3");
    double ang = 2.0 * kPi / k;
    RigidMap m;
    m.a = std::cos(ang);
    m.b = -std::sin(ang);
    m.c = std::sin(ang);
    m.d = std::cos(ang);
    return m;
}

RigidMap isometry_u() {
    // U(x, y) = (sqrt(3)/2 x + y/2, -x/2 + sqrt(3)/2 y - 1/2)
    const double r = std::sqrt(3.0) / 2.0;
    RigidMap m;
    m.a = r;
    m.b = 0.5;
    m.c = -0.5;
    m.d = r;
    m.t = {0.0, -0.5};
    return m;
}

RigidMap isometry_u_inverse() {
    const double r = std::sqrt(3.0) / 2.0;
    RigidMap m;
    m.a = r;
    m.b = -0.5;
    m.c = 0.5;
    m.d = r;
    m.t = {-0.25, std::sqrt(3.0) / 4.0};
    return m;
}

Point reflection_f(Point p) { return {-p.x, -p.y}; }

Point triangle_g() { return {-std::sqrt(3.0) / 2.0, 0.0}; }
Point triangle_h() { return {std::sqrt(3.0) / 2.0, 0.0}; }
Point triangle_i() { return {0.0, 0.5}; }

Segment segment_gi() { return {triangle_i(), triangle_g()}; }
Segment segment_hi() { return {triangle_h(), triangle_i()}; }
Segment segment_gh() { return {triangle_g(), triangle_h()}; }

double arc_theta_lo(int k) { return 1.5 * kPi - kPi / k; }
double arc_theta_hi(int k) { return 1.5 * kPi + kPi / k; }

ConstraintCurve constraint_curve(const RegularPolygon& poly, Constraint c) {
    ConstraintCurve curve;
    const int k = poly.k;
    switch (c) {
        case Constraint::Unconstrained:
            for (int j = 1; j <= k; ++j) curve.segments.push_back(poly.side(j));
            break;
        case Constraint::Circumcircle:
        case Constraint::Incircle: {
            double r = (c == Constraint::Circumcircle) ? 1.0 : poly.inradius();
            for (int j = 1; j <= k; ++j) {
                double lo = 1.5 * kPi + kPi * (2 * j - 3) / k;
                double hi = 1.5 * kPi + kPi * (2 * j - 1) / k;
                curve.arcs.push_back({r, lo, hi});
            }
            break;
        }
        case Constraint::DiagonalShort:
            if (k != 6)
                throw std::invalid_argument("unsupported constraint: diagonals require k = 6");
            curve.segments.push_back({poly.vertex(6), poly.vertex(4)});
            break;
        case Constraint::DiagonalLong:
            if (k != 6)
                throw std::invalid_argument("unsupported constraint: diagonals require k = 6");
            curve.segments.push_back({poly.vertex(1), poly.vertex(4)});
            break;
    }
    return curve;
}

std::vector<RigidMap> constraint_symmetries(const RegularPolygon& poly, Constraint c) {
    // Mirror across the y-axis maps the vertex set to itself for every k.
    RigidMap mirror;
    mirror.a = -1.0;
    mirror.d = 1.0;

    std::vector<RigidMap> maps;
    switch (c) {
        case Constraint::Unconstrained:
        case Constraint::Circumcircle:
        case Constraint::Incircle: {
            RigidMap rot = rotation_map(poly.k);
            RigidMap r = RigidMap::identity();
            for (int j = 0; j < poly.k; ++j) {
                maps.push_back(r);
                maps.push_back(r.compose(mirror));
                r = rot.compose(r);
            }
            break;
        }
        case Constraint::DiagonalShort: {
            // Identity and the reflection across the axis through A_5, which
            // swaps the diagonal endpoints A_6 and A_4.
            maps.push_back(RigidMap::identity());
            Point a5 = poly.vertex(5);
            double ang = std::atan2(a5.y, a5.x);
            RigidMap refl;
            refl.a = std::cos(2 * ang);
            refl.b = std::sin(2 * ang);
            refl.c = std::sin(2 * ang);
            refl.d = -std::cos(2 * ang);
            maps.push_back(refl);
            break;
        }
        case Constraint::DiagonalLong: {
            maps.push_back(RigidMap::identity());
            RigidMap point_refl;  // F
            point_refl.a = -1.0;
            point_refl.d = -1.0;
            maps.push_back(point_refl);
            Point a4 = poly.vertex(4);
            double ang = std::atan2(a4.y, a4.x);
            RigidMap axis;
            axis.a = std::cos(2 * ang);
            axis.b = std::sin(2 * ang);
            axis.c = std::sin(2 * ang);
            axis.d = -std::cos(2 * ang);
            maps.push_back(axis);
            maps.push_back(point_refl.compose(axis));
            break;
        }
    }
    return maps;
}

}  // namespace polyquant
