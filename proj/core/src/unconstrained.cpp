#include "polyquant/unconstrained.hpp"

#include <cmath>
#include <numbers>

namespace polyquant {

namespace {

constexpr double kPi = std::numbers::pi;

double side_error_scale(int k) {
    double s = std::sin(kPi / k);
    return 2.0 * s * s * s / (3.0 * k);
}

}  // namespace

std::vector<Allocation> balanced_allocations(int k, int n) {
    if (k < 3) throw std::invalid_argument("balanced_allocations: k must be at least 3");
    if (n < k) throw std::invalid_argument("balanced_allocations: too few points (n < k)");
    const int q = n / k;
    const int r = n % k;

    std::vector<Allocation> out;
    if (r == 0) {
        Allocation a;
        a.counts.assign(static_cast<std::size_t>(k), q + 1);
        out.push_back(std::move(a));
        return out;
    }

    // Choose which r sides receive the extra point; lexicographically first
    // subset (lowest indices) comes first.
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        Allocation a;
        a.counts.assign(static_cast<std::size_t>(k), q + 1);
        for (int i : pick) a.counts[static_cast<std::size_t>(i)] = q + 2;
        out.push_back(std::move(a));

        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Point> side_points(int k, int m) {
    if (k < 3) throw std::invalid_argument("side_points: k must be at least 3");
    if (m < 2) throw std::invalid_argument("side_points: m must be at least 2");
    const double s = std::sin(kPi / k);
    const double c = std::cos(kPi / k);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) pts.push_back({(2.0 * j - m - 1.0) * s / (m - 1.0), -c});
    return pts;
}

double allocation_error(int k, const Allocation& alloc) {
    double sum = 0.0;
    for (int nj : alloc.counts) {
        double gaps = nj - 1.0;
        sum += 1.0 / (gaps * gaps);
    }
    return side_error_scale(k) * sum;
}

double unconstrained_error(int k, std::int64_t n) {
    if (n < k) throw std::invalid_argument("unconstrained_error: too few points (n < k)");
    const std::int64_t q = n / k;
    const std::int64_t r = n % k;
    double sum = (k - r) / static_cast<double>(q * q) + r / static_cast<double>((q + 1) * (q + 1));
    return side_error_scale(k) * sum;
}

QuantizerSet allocation_points(const RegularPolygon& poly, const Allocation& alloc) {
    QuantizerSet set = QuantizerSet::vertices(poly);
    for (int j = 1; j <= poly.k; ++j) {
        Segment side = poly.side(j);
        int m = alloc.counts[static_cast<std::size_t>(j - 1)];
        for (int i = 2; i < m; ++i) set.add(side.at((i - 1.0) / (m - 1.0)), false);
    }
    return set;
}

OptimalSet optimal_set(int k, int n) {
    if (n < k) throw std::invalid_argument("optimal_set: too few points (n < k)");
    RegularPolygon poly = make_polygon(k);

    if (k == 3 && n == 4) {
        // The circumcenter beats every side placement; the value 1/2 follows
        // the source convention of weighting each side by dt alone.
        OptimalSet result;
        result.set = QuantizerSet::vertices(poly);
        result.set.add({0.0, 0.0}, false);
        result.allocation.counts = {2, 2, 2};
        std::vector<SupportSegment> unit_weight;
        for (int j = 1; j <= 3; ++j) unit_weight.push_back({poly.side(j), 1.0, 1.0, j});
        result.error = distortion(unit_weight, result.set).total;
        return result;
    }

    OptimalSet result;
    result.allocation = balanced_allocations(k, n).front();
    result.set = allocation_points(poly, result.allocation);
    result.error = allocation_error(k, result.allocation);
    return result;
}

DimensionReport dimension_and_coefficient(int k, std::int64_t n_max) {
    if (n_max < 4LL * k)
        throw std::invalid_argument("dimension_and_coefficient: n_max must be at least 4k");
    DimensionReport report;
    report.v_infinity = 0.0;
    double s = std::sin(kPi / k);
    report.coefficient_closed_form = (2.0 / 3.0) * k * k * s * s * s;

    const std::int64_t count = n_max - k + 1;
    const std::int64_t stride = count <= 2048 ? 1 : (count + 2047) / 2048;
    for (std::int64_t n = k; n <= n_max; n += stride)
        report.samples.emplace_back(n, unconstrained_error(k, n));
    if (report.samples.back().first != n_max)
        report.samples.emplace_back(n_max, unconstrained_error(k, n_max));

    double v_n_max = unconstrained_error(k, n_max);
    report.coefficient_estimate = static_cast<double>(n_max) * static_cast<double>(n_max) * v_n_max;
    report.log_ratio_at_n_max = 2.0 * std::log(static_cast<double>(n_max)) / (-std::log(v_n_max));

    // Decay-rate estimate from two multiples of k: exact for V_n = C / n^2.
    std::int64_t n2 = (n_max / k) * k;
    std::int64_t n1 = (n_max / (2 * k)) * k;
    double v1 = unconstrained_error(k, n1);
    double v2 = unconstrained_error(k, n2);
    report.dimension_estimate =
        2.0 * (std::log(static_cast<double>(n2)) - std::log(static_cast<double>(n1))) /
        (std::log(v1) - std::log(v2));
    return report;
}

}  // namespace polyquant
