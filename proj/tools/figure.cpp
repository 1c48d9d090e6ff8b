#include "figure.hpp"

#include <cmath>
#include <sstream>

namespace polyquant::cli {

namespace {

constexpr double kScale = 200.0;

double px(double x) { return kScale * x; }
double py(double y) { return -kScale * y; }  // SVG y axis points down

void emit_coord(std::ostringstream& out, double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f", v);
    out << buffer;
}

}  // namespace

std::string render_svg(const ResultRecord& record) {
    RegularPolygon poly = make_polygon(record.k);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
           "viewBox=\"-256 -256 512 512\">\n"
        << "<rect x=\"-256\" y=\"-256\" width=\"512\" height=\"512\" fill=\"white\"/>\n";

    out << "<polygon fill=\"none\" stroke=\"#303030\" stroke-width=\"1.5\" points=\"";
    for (int j = 1; j <= record.k; ++j) {
        Point v = poly.vertex(j);
        if (j > 1) out << " ";
        emit_coord(out, px(v.x));
        out << ",";
        emit_coord(out, py(v.y));
    }
    out << "\"/>\n";

    ConstraintCurve curve = constraint_curve(poly, record.constraint);
    const char* dash = "stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";
    if (record.constraint == Constraint::Circumcircle ||
        record.constraint == Constraint::Incircle) {
        double r = curve.arcs.front().radius;
        out << "<circle cx=\"0\" cy=\"0\" r=\"";
        emit_coord(out, kScale * r);
        out << "\" fill=\"none\" " << dash << "/>\n";
    }
    if (record.constraint == Constraint::DiagonalShort ||
        record.constraint == Constraint::DiagonalLong) {
        const Segment& diag = curve.segments.front();
        out << "<line " << dash << " x1=\"";
        emit_coord(out, px(diag.p.x));
        out << "\" y1=\"";
        emit_coord(out, py(diag.p.y));
        out << "\" x2=\"";
        emit_coord(out, px(diag.q.x));
        out << "\" y2=\"";
        emit_coord(out, py(diag.q.y));
        out << "\"/>\n";
    }

    for (std::size_t i = 0; i < record.points.size(); ++i) {
        bool cond = record.conditional_flags[i];
        out << "<circle class=\"site " << (cond ? "conditional" : "free") << "\" cx=\"";
        emit_coord(out, px(record.points[i].x));
        out << "\" cy=\"";
        emit_coord(out, py(record.points[i].y));
        out << "\" r=\"5\" fill=\"" << (cond ? "#d62728" : "#1f77b4") << "\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace polyquant::cli
