#pragma once

#include <optional>
#include <vector>

#include "polyquant/geometry.hpp"

namespace polyquant {

/// Squared Euclidean distance.
double rho(Point p, Point q);

/// Candidate or optimal quantizer: points plus per-point conditional flags
/// (true for members of the conditional set beta).
struct QuantizerSet {
    std::vector<Point> points;
    std::vector<bool> conditional;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    /// Appends p unless an equal point (squared distance <= 1e-24) is already
    /// present; a duplicate marked conditional upgrades the stored flag.
    void add(Point p, bool is_conditional);

    std::size_t free_count() const;
    std::vector<Point> free_points() const;

    /// The conditional set beta: all k vertices.
    static QuantizerSet vertices(const RegularPolygon& poly);
};

/// One piece of the support the distortion integral runs over. The measure of
/// a parameter interval [t0, t1] is density * arclength_scale * (t1 - t0).
struct SupportSegment {
    Segment seg;
    double density = 1.0;
    double arclength_scale = 1.0;
    int id = 0;
};

/// Support segment with the natural arclength scale |seg|.
SupportSegment make_support(Segment seg, double density, int id = 0);

/// The k polygon sides weighted by the boundary density f = 1/k.
/// With normalized = true the density is rescaled by the total mass
/// 2 sin(pi/k) so the measure becomes a probability for every k.
std::vector<SupportSegment> polygon_support(const RegularPolygon& poly, bool normalized = false);

/// GI and HI weighted by the triangle density g = 1/2.
std::vector<SupportSegment> triangle_q_support();

/// density * scale * Integral_{t0}^{t1} rho(seg(t), site) dt, evaluated with a
/// two-point Gauss rule (exact: the integrand is quadratic in t).
double segment_distortion_exact(const Segment& seg, double t0, double t1, Point site,
                                double density, double arclength_scale);

/// Where the perpendicular bisector of two sites crosses a segment.
struct BisectorCrossing {
    std::optional<double> t;     // root in [0,1], if any
    bool first_site_dominates;   // when no root: which site is nearer on the whole segment
};

/// Solves rho(seg(t), a) = rho(seg(t), b); linear in t for a straight segment.
BisectorCrossing voronoi_breakpoint_on_segment(const Segment& seg, Point a, Point b);

/// Voronoi cell of a segment under a site set: [t0, t1] assigned to sites[site].
struct SegmentCell {
    double t0;
    double t1;
    int site;
};

/// One-dimensional Voronoi partition of a segment: sort all pairwise bisector
/// crossings, then assign each cell to the site nearest its midpoint (lowest
/// index on ties). Robust to sites with empty cells.
std::vector<SegmentCell> segment_cells(const Segment& seg, const std::vector<Point>& sites);

struct DistortionBreakdown {
    std::vector<std::pair<int, double>> per_segment;  // (segment id, contribution)
    double total = 0.0;
};

/// Exact piecewise distortion of a quantizer over the given support.
DistortionBreakdown distortion(const std::vector<SupportSegment>& support,
                               const QuantizerSet& quantizer);

/// Convenience: distortion over the polygon boundary with density 1/k.
DistortionBreakdown distortion(const RegularPolygon& poly, const QuantizerSet& quantizer);

/// As distortion, but only the listed support segments are integrated; the
/// full quantizer still competes for every cell.
double restricted_distortion(const std::vector<SupportSegment>& support,
                             const QuantizerSet& quantizer);

}  // namespace polyquant
