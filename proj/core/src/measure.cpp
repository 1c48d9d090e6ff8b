#include "polyquant/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyquant {

namespace {
constexpr double kDuplicateRhoTol = 1e-24;
constexpr double kBreakpointDedupTol = 1e-12;  // in t
}  // namespace

double rho(Point p, Point q) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

void QuantizerSet::add(Point p, bool is_conditional) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (rho(points[i], p) <= kDuplicateRhoTol) {
            if (is_conditional) conditional[i] = true;
            return;
        }
    }
    points.push_back(p);
    conditional.push_back(is_conditional);
}

std::size_t QuantizerSet::free_count() const {
    std::size_t n = 0;
    for (bool c : conditional)
        if (!c) ++n;
    return n;
}

std::vector<Point> QuantizerSet::free_points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!conditional[i]) out.push_back(points[i]);
    return out;
}

QuantizerSet QuantizerSet::vertices(const RegularPolygon& poly) {
    QuantizerSet q;
    for (const Point& v : poly.vertices) q.add(v, true);
    return q;
}

SupportSegment make_support(Segment seg, double density, int id) {
    return {seg, density, seg.length(), id};
}

std::vector<SupportSegment> polygon_support(const RegularPolygon& poly, bool normalized) {
    double density = 1.0 / poly.k;
    if (normalized) density /= poly.side_length;  // total mass k * f * L = 1
    std::vector<SupportSegment> support;
    support.reserve(static_cast<std::size_t>(poly.k));
    for (int j = 1; j <= poly.k; ++j) support.push_back(make_support(poly.side(j), density, j));
    return support;
}

std::vector<SupportSegment> triangle_q_support() {
    return {make_support(segment_gi(), 0.5, 1), make_support(segment_hi(), 0.5, 2)};
}

double segment_distortion_exact(const Segment& seg, double t0, double t1, Point site,
                                double density, double arclength_scale) {
    if (t0 > t1) throw std::invalid_argument("segment_distortion_exact: t0 > t1");
    // rho(seg(t), site) is quadratic in t, so the 2-point Gauss rule is exact.
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    const double off = half / std::sqrt(3.0);
    double f1 = rho(seg.at(mid - off), site);
    double f2 = rho(seg.at(mid + off), site);
    return density * arclength_scale * half * (f1 + f2);
}

BisectorCrossing voronoi_breakpoint_on_segment(const Segment& seg, Point a, Point b) {
    if (rho(a, b) <= kDuplicateRhoTol)
        throw std::invalid_argument("voronoi_breakpoint_on_segment: degenerate bisector");
    // g(t) = rho(seg(t), a) - rho(seg(t), b) is linear in t.
    double g0 = rho(seg.p, a) - rho(seg.p, b);
    double g1 = rho(seg.q, a) - rho(seg.q, b);
    double slope = g1 - g0;
    BisectorCrossing out;
    if (std::abs(slope) < 1e-30) {
        out.first_site_dominates = g0 < 0.0;
        return out;
    }
    double root = -g0 / slope;
    if (root < 0.0 || root > 1.0) {
        double gm = 0.5 * (g0 + g1);
        out.first_site_dominates = gm < 0.0;
        return out;
    }
    out.t = root;
    out.first_site_dominates = g0 < 0.0;
    return out;
}

std::vector<SegmentCell> segment_cells(const Segment& seg, const std::vector<Point>& sites) {
    if (sites.empty()) throw std::invalid_argument("segment_cells: empty site set");
    std::vector<double> cuts{0.0, 1.0};
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (rho(sites[i], sites[j]) <= kDuplicateRhoTol) continue;
            double g0 = rho(seg.p, sites[i]) - rho(seg.p, sites[j]);
            double g1 = rho(seg.q, sites[i]) - rho(seg.q, sites[j]);
            double slope = g1 - g0;
            if (std::abs(slope) < 1e-30) continue;
            double root = -g0 / slope;
            if (root > 0.0 && root < 1.0) cuts.push_back(root);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return b - a <= kBreakpointDedupTol; }),
               cuts.end());
    if (cuts.back() < 1.0) cuts.back() = 1.0;

    std::vector<SegmentCell> cells;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        Point mid = seg.at(0.5 * (cuts[c] + cuts[c + 1]));
        int best = 0;
        double best_rho = rho(mid, sites[0]);
        for (std::size_t s = 1; s < sites.size(); ++s) {
            double r = rho(mid, sites[s]);
            if (r < best_rho) {
                best_rho = r;
                best = static_cast<int>(s);
            }
        }
        if (!cells.empty() && cells.back().site == best)
            cells.back().t1 = cuts[c + 1];
        else
            cells.push_back({cuts[c], cuts[c + 1], best});
    }
    return cells;
}

DistortionBreakdown distortion(const std::vector<SupportSegment>& support,
                               const QuantizerSet& quantizer) {
    if (quantizer.empty()) throw std::invalid_argument("distortion: empty quantizer");
    DistortionBreakdown breakdown;
    for (const SupportSegment& piece : support) {
        double contribution = 0.0;
        for (const SegmentCell& cell : segment_cells(piece.seg, quantizer.points)) {
            contribution += segment_distortion_exact(
                piece.seg, cell.t0, cell.t1, quantizer.points[static_cast<std::size_t>(cell.site)],
                piece.density, piece.arclength_scale);
        }
        breakdown.per_segment.emplace_back(piece.id, contribution);
        breakdown.total += contribution;
    }
    return breakdown;
}

DistortionBreakdown distortion(const RegularPolygon& poly, const QuantizerSet& quantizer) {
    return distortion(polygon_support(poly), quantizer);
}

double restricted_distortion(const std::vector<SupportSegment>& support,
                             const QuantizerSet& quantizer) {
    if (support.empty()) return 0.0;
    return distortion(support, quantizer).total;
}

}  // namespace polyquant
