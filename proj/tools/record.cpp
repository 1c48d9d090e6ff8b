#include "record.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "polyquant/circle_constrained.hpp"
#include "polyquant/diagonal_constrained.hpp"
#include "polyquant/unconstrained.hpp"

namespace polyquant::cli {

namespace {

struct Fraction {
    long long num = 0;
    long long den = 1;

    void reduce() {
        long long g = std::gcd(std::abs(num), std::abs(den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    Fraction operator+(Fraction o) const {
        Fraction r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Fraction operator*(Fraction o) const {
        Fraction r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Exact value of the form a + b*sqrt(3).
struct QuadExpr {
    Fraction a;
    Fraction b;

    QuadExpr operator+(const QuadExpr& o) const { return {a + o.a, b + o.b}; }
    QuadExpr scaled(Fraction s) const { return {a * s, b * s}; }
    std::string str() const {
        if (b.num == 0) return a.str();
        std::string out;
        if (a.num != 0) out = a.str() + (b.num > 0 ? " + " : " - ");
        else if (b.num < 0) out = "-";
        Fraction mag = b;
        mag.num = std::abs(mag.num);
        out += (mag.num == 1 && mag.den == 1) ? "sqrt(3)" : mag.str() + " sqrt(3)";
        return out;
    }
};

QuadExpr long_diagonal_group_exact(int q) {
    if (q == 1) return {{1, 144}, {0, 1}};
    long long poly = 3LL * (q - 1) * q + 1;
    long long den = 9LL * (2 * q - 1) * (2 * q - 1);
    // 4 (26 - 15 sqrt(3)) poly / den
    return {{104 * poly, den}, {-60 * poly, den}};
}

std::optional<std::string> rational_side_sum(int k, const Allocation& alloc) {
    // sum_j 1/(n_j - 1)^2 as an exact fraction
    Fraction sum{0, 1};
    for (int nj : alloc.counts) {
        long long g = nj - 1;
        sum = sum + Fraction{1, g * g};
    }
    if (k == 6) {
        // 2 sin^3(pi/6)/(3*6) = 1/72
        Fraction v = sum * Fraction{1, 72};
        return v.str();
    }
    return "2 sin(pi/" + std::to_string(k) + ")^3/" + std::to_string(3 * k) + " * " + sum.str();
}

}  // namespace

std::optional<std::string> closed_form_expression(int k, int n, Constraint c) {
    switch (c) {
        case Constraint::Unconstrained:
            if (k == 3 && n == 4) return "1/2";
            return rational_side_sum(k, balanced_allocations(k, n).front());
        case Constraint::Incircle:
            // free incircle sites sit at the side midpoints only while each
            // side group has at most one of them
            if (n <= 2 * k) return closed_form_expression(k, n, Constraint::Unconstrained);
            return std::nullopt;
        case Constraint::Circumcircle:
            if (n == k) return "2 sin(pi/" + std::to_string(k) + ")^3/3";
            if (k == 6 && n >= 7 && n <= 12) {
                int arcs = n - 6;
                std::ostringstream out;
                out << arcs << " (sqrt(3)/2 - 31/36)";
                if (n < 12) out << " + " << (12 - n) << "/72";
                return out.str();
            }
            if (k == 6 && n == 13)
                return "(27 3^(2/3) - 17 - 27 3^(1/3))/72 + 5 (sqrt(3)/2 - 31/36)";
            return std::nullopt;
        case Constraint::DiagonalShort:
            if (n == 6) return "1/12";
            if (n == 7) return "(9 - 2 sqrt(3))/72";
            if (n == 8) return "(3 - sqrt(3))/18";
            return std::nullopt;
        case Constraint::DiagonalLong: {
            if (n == 6) return "1/12";
            int q = (n - 3) / 2;
            int q2 = n - 4 - q;
            QuadExpr base{{-1079, 36}, {52, 3}};  // 13/36 (48 sqrt(3) - 83)
            QuadExpr total = base + long_diagonal_group_exact(q).scaled({2, 1}) +
                             long_diagonal_group_exact(q2).scaled({2, 1});
            return total.str();
        }
    }
    return std::nullopt;
}

ResultRecord solve_record(int k, int n, Constraint c) {
    ResultRecord record;
    record.k = k;
    record.n = n;
    record.constraint = c;

    QuantizerSet set;
    switch (c) {
        case Constraint::Unconstrained: {
            OptimalSet solution = optimal_set(k, n);
            set = solution.set;
            record.v_n = solution.error;
            RegularPolygon poly = make_polygon(k);
            if (k == 3 && n == 4) {
                std::vector<SupportSegment> unit_weight;
                for (int j = 1; j <= 3; ++j) unit_weight.push_back({poly.side(j), 1.0, 1.0, j});
                record.cross_check_delta =
                    std::abs(record.v_n - distortion(unit_weight, set).total);
            } else {
                record.cross_check_delta = std::abs(record.v_n - distortion(poly, set).total);
            }
            break;
        }
        case Constraint::Circumcircle: {
            ConstrainedResult solution = circumcircle_optimal_set(k, n);
            set = solution.set;
            record.v_n = solution.error;
            record.stationarity_residual = solution.report.stationarity_residual;
            record.cross_check_delta = solution.report.cross_check_delta;
            break;
        }
        case Constraint::Incircle: {
            ConstrainedResult solution = incircle_optimal_set(k, n);
            set = solution.set;
            record.v_n = solution.error;
            record.stationarity_residual = solution.report.stationarity_residual;
            record.cross_check_delta = solution.report.cross_check_delta;
            break;
        }
        case Constraint::DiagonalShort:
        case Constraint::DiagonalLong: {
            if (k != 6)
                throw std::invalid_argument("diagonal constraints require --k 6");
            ConstrainedResult solution = c == Constraint::DiagonalShort
                                             ? short_diagonal_optimal_set(n)
                                             : long_diagonal_optimal_set(n);
            set = solution.set;
            record.v_n = solution.error;
            record.stationarity_residual = solution.report.stationarity_residual;
            record.cross_check_delta = solution.report.cross_check_delta;
            break;
        }
    }
    record.points = set.points;
    record.conditional_flags.assign(set.conditional.begin(), set.conditional.end());
    record.closed_form_expression = closed_form_expression(k, n, c);
    return record;
}

double comparable_value(const ResultRecord& record) {
    if (record.constraint == Constraint::Unconstrained && record.k == 3 && record.n == 4) {
        QuantizerSet set;
        for (std::size_t i = 0; i < record.points.size(); ++i)
            set.add(record.points[i], record.conditional_flags[i]);
        return distortion(make_polygon(3), set).total;
    }
    return record.v_n;
}

void attach_verdict(ResultRecord& record, const OracleConfig& config) {
    QuantizerSet set;
    for (std::size_t i = 0; i < record.points.size(); ++i)
        set.add(record.points[i], record.conditional_flags[i]);
    record.verdict = verify(record.constraint, make_polygon(record.k), set,
                            comparable_value(record), config);
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string to_json(const ResultRecord& record) {
    std::ostringstream out;
    out << "{\"schema\": 1, \"kind\": \"solve\", \"k\": " << record.k << ", \"n\": " << record.n
        << ", \"constraint\": \"" << constraint_name(record.constraint) << "\", \"points\": [";
    for (std::size_t i = 0; i < record.points.size(); ++i) {
        if (i) out << ", ";
        out << "[" << format_double(record.points[i].x) << ", "
            << format_double(record.points[i].y) << "]";
    }
    out << "], \"conditional_flags\": [";
    for (std::size_t i = 0; i < record.conditional_flags.size(); ++i) {
        if (i) out << ", ";
        out << (record.conditional_flags[i] ? "true" : "false");
    }
    out << "], \"V_n\": " << format_double(record.v_n)
        << ", \"stationarity_residual\": " << format_double(record.stationarity_residual)
        << ", \"cross_check_delta\": " << format_double(record.cross_check_delta);
    if (record.closed_form_expression)
        out << ", \"closed_form_expression\": \"" << *record.closed_form_expression << "\"";
    if (record.verdict) {
        const OracleVerdict& v = *record.verdict;
        out << ", \"oracle_verdict\": {\"solver_value\": " << format_double(v.solver_value)
            << ", \"oracle_value\": " << format_double(v.oracle_value)
            << ", \"value_delta\": " << format_double(v.value_delta)
            << ", \"max_site_displacement\": " << format_double(v.max_site_displacement)
            << ", \"passed\": " << (v.passed ? "true" : "false") << "}";
    }
    out << "}";
    return out.str();
}

std::string to_csv(const ResultRecord& record) {
    std::ostringstream out;
    out << "k,n,constraint,V_n,point_index,x,y,conditional\n";
    for (std::size_t i = 0; i < record.points.size(); ++i) {
        out << record.k << "," << record.n << "," << constraint_name(record.constraint) << ","
            << format_double(record.v_n) << "," << i << "," << format_double(record.points[i].x)
            << "," << format_double(record.points[i].y) << ","
            << (record.conditional_flags[i] ? "true" : "false") << "\n";
    }
    return out.str();
}

}  // namespace polyquant::cli
